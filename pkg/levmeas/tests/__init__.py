# -*- coding: utf-8 -*-
'''
    levmeas.tests
    -------------

    :copyright: Copyright 2026 levmeas contributors, see AUTHORS.
    :license: GNU GPL v3.

'''
