# -*- coding: utf-8 -*-
#
# levmeas documentation build configuration file
#
# This file is execfile()d with the current directory set to its containing
# dir.

import os
import re
import sys

# The package is documented from the source tree.
sys.path.insert(0, os.path.abspath('..'))

# -- General configuration ----------------------------------------------------

extensions = ['sphinx.ext.autodoc', 'sphinx.ext.viewcode',
              'sphinx.ext.doctest']

templates_path = ['_templates']
source_suffix = '.rst'
master_doc = 'index'

project = 'levmeas'
copyright = '2026, levmeas contributors'

# The full version, including alpha/beta/rc tags.
with open(os.path.join(os.path.dirname(__file__), '..',
                       'levmeas', '__init__.py')) as init_py:
    release = re.search("VERSION = '([^']+)'", init_py.read()).group(1)
# The short X.Y version.
version = release.rstrip('dev')

exclude_patterns = ['_build']
pygments_style = 'sphinx'

# -- Options for HTML output --------------------------------------------------

html_theme = 'alabaster'
html_static_path = []
htmlhelp_basename = 'levmeas-doc'

# -- Options for LaTeX output -------------------------------------------------

latex_documents = [
    ('index', 'levmeas.tex', 'levmeas Documentation',
     'levmeas contributors', 'howto'),
]
latex_domain_indices = False

# -- Options for manual page output -------------------------------------------

man_pages = [
    ('index', 'levmeas', 'levmeas Documentation',
     ['levmeas contributors'], 1)
]
