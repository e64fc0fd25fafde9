# -*- coding: utf-8 -*-
"""
    levmeas.logger
    --------------

    Logging setup.

    :copyright: Copyright 2026 levmeas contributors, see AUTHORS.
    :license: GNU GPL v3.

"""
import logging


LOGGER = logging.getLogger('levmeas')
LOGGER.addHandler(logging.NullHandler())


def active_logger():
    '''Initialize a speaking logger with stream handler (stderr).'''
    LOGGER.setLevel(logging.INFO)

    # Default to logging to stderr, once.
    for handler in LOGGER.handlers:
        if isinstance(handler, logging.StreamHandler):
            return
    formatter = logging.Formatter('%(asctime)s %(levelname)s: %(message)s ')
    stream_handler = logging.StreamHandler()
    stream_handler.setFormatter(formatter)
    LOGGER.addHandler(stream_handler)
