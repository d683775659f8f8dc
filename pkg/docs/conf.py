# -*- coding: utf-8 -*-
#
# xyring documentation build configuration file.
#
# This file is execfile()d with the current directory set to its containing dir.
# All configuration values have a default; values that are commented out
# serve to show the default.

from __future__ import print_function
import os.path
import sys

# -- ENSURE: Local package is used (source checkout, not installed).
HERE = os.path.dirname(__file__)
TOPDIR = os.path.normpath(os.path.join(HERE, ".."))
sys.path.insert(0, os.path.abspath(TOPDIR))

# -- General configuration -----------------------------------------------------
extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.todo",
    "sphinx.ext.mathjax",
    "sphinx.ext.extlinks",
]

extlinks = {
    "pypi": ("https://pypi.org/project/%s", "%s"),
}

project = u"xyring"
copyright = u"2013-2016"
release = open(os.path.join(TOPDIR, "VERSION.txt")).read().strip()
version = ".".join(release.split(".")[:2])

needs_sphinx = "1.8"
templates_path = []
source_suffix = ".rst"
master_doc = "index"
today_fmt = "%Y-%m-%d"
exclude_patterns = ["_build"]
pygments_style = "friendly"

autodoc_member_order = "bysource"
todo_include_todos = False

# -- Options for HTML output ---------------------------------------------------
html_theme = "alabaster"
html_static_path = []
html_last_updated_fmt = "%Y-%m-%d"
htmlhelp_basename = "xyring.doc"
