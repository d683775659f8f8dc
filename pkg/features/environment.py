# -*- coding: UTF-8 -*-
"""
before_all(context)
    Makes the ``xyring`` package importable from the source tree and
    configures logging from behave's ``logging_level``.

before_scenario(context, scenario), after_scenario(context, scenario)
    Scenarios tagged ``@workdir`` get a fresh temporary directory in
    ``context.workdir`` (removed afterwards).
"""

import os.path
import sys
import tempfile

from path import Path

HERE = os.path.dirname(os.path.abspath(__file__))
TOPDIR = os.path.normpath(os.path.join(HERE, ".."))
if TOPDIR not in sys.path:
    sys.path.insert(0, TOPDIR)


def before_all(context):
    context.config.setup_logging()


def before_scenario(context, scenario):
    context.error = None
    if "workdir" in scenario.effective_tags:
        context.workdir = Path(tempfile.mkdtemp(prefix="xyring-"))


def after_scenario(context, scenario):
    workdir = getattr(context, "workdir", None)
    if workdir is not None and "workdir" in scenario.effective_tags:
        workdir.rmtree_p()
