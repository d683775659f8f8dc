# -*- coding: UTF-8 -*-
"""
Invoke test tasks: run the behave features.
"""

from __future__ import print_function
import sys

from invoke import task, Collection

# -- TASK-LIBRARY:
from .clean import cleanup_tasks, cleanup_dirs, cleanup_files


# ---------------------------------------------------------------------------
# TASKS
# ---------------------------------------------------------------------------
@task
def clean(ctx, dry_run=False):
    """Cleanup (temporary) test artifacts."""
    cleanup_dirs(ctx.test.clean.directories or [], dry_run=dry_run)
    cleanup_files(ctx.test.clean.files or [], dry_run=dry_run)


@task(help={
    "args": "Feature files or directories for behave",
    "format": "Formatter to use (progress, pretty, ...)",
    "tags": "Tag expression, like: @workdir or ~@slow",
})
def behave(ctx, args="", format="", tags="", options=""):
    """Run behave tests."""
    format = format or ctx.behave_test.format
    options = options or ctx.behave_test.options
    args = args or ctx.behave_test.args
    if tags:
        options = "%s --tags=%s" % (options, tags)
    ctx.run("{python} -m behave -f {format} {options} {args}".format(
        python=sys.executable, format=format, options=options, args=args))


# ---------------------------------------------------------------------------
# TASK MANAGEMENT / CONFIGURATION
# ---------------------------------------------------------------------------
namespace = Collection(clean)
namespace.add_task(behave, default=True)
namespace.configure({
    "test": {
        "clean": {
            "directories": ["reports", "test_results"],
            "files": ["rerun*.txt", "rerun*.featureset", "testrun*.json"],
        },
    },
    "behave_test": {
        "scopes":   ["features"],
        "args":     "features",
        "format":   "progress",
        "options":  "--tags=~@xfail",  # -- NOTE: Override in "invoke.yaml"
    },
})

# -- ADD CLEANUP TASK:
cleanup_tasks.add_task(clean, "clean_test")
cleanup_tasks.configure(namespace.configuration())
