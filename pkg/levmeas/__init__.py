# -*- coding: utf-8 -*-
'''
    levmeas
    -------

    Exact computation of the translation-invariant, Laurent-polynomial-valued
    measure on ddd-sets of higher-dimensional local fields and of their
    matrix groups.

    :copyright: Copyright 2026 levmeas contributors, see AUTHORS.
    :license: GNU GPL v3.

'''
# Make sure the logger is configured early:
from .logger import LOGGER, active_logger
from .expvec import ExpVec, INF
from .measure import MeasureValue
from .field import FieldElement, PrecisionElement, fe_invert
from .forest import DddForest, Trichotomy, index, refine_common
from .additive import AdditiveFamily
from .matrix import MatrixFamily
from .parser import parse, parse_forest

VERSION = '0.1.0'
__version__ = VERSION
