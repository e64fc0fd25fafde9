# coding: utf8
'''
    levmeas
    -------

    Exact invariant measure of ddd-sets over higher-dimensional local fields
    and their matrix groups.

    :copyright: Copyright 2026 levmeas contributors, see AUTHORS.
    :license: GNU GPL v3.

'''
import re
import os
from setuptools import setup, find_packages

here = os.path.abspath(os.path.dirname(__file__))

README = ''
CHANGES = ''
try:
    README = open(os.path.join(here, 'README.rst')).read()
    CHANGES = open(os.path.join(here, 'CHANGES.rst')).read()
except OSError:
    pass

REQUIREMENTS = [
    'progressbar-latest',
]

TEST_REQUIREMENTS = [
    'pytest',
    'hypothesis',
]


with open(os.path.join(os.path.dirname(__file__), 'levmeas',
                       '__init__.py')) as init_py:
    release = re.search("VERSION = '([^']+)'", init_py.read()).group(1)
# The short X.Y version.
version = release.rstrip('dev')

setup(
    name='levmeas',
    version=version,
    license='GNU GPL v3',
    description='Exact Laurent-polynomial-valued invariant measure on '
                'ddd-sets of higher local fields and GL_m, SL_m.',
    long_description=README + '\n\n' + CHANGES,
    author='levmeas contributors',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: GNU General Public License v3 (GPLv3)',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.11',
        'Programming Language :: Python :: 3.12',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],
    packages=find_packages(exclude=['examples', 'examples.*']),
    zip_safe=False,
    python_requires='>=3.8',
    install_requires=REQUIREMENTS,
    tests_require=TEST_REQUIREMENTS,
    extras_require={'test': TEST_REQUIREMENTS},
    test_suite='levmeas.tests',
    entry_points={
        'console_scripts': [
            'levmeas = levmeas.__main__:main'
        ],
    },
)
