# -*- coding: UTF-8 -*-
"""
Cleanup tasks: remove build, test and data artifacts.

Other task modules register their own ``clean(ctx, dry_run=False)`` task
in :data:`cleanup_tasks`; the :func:`clean` task runs all of them::

    # -- FILE: tasks/reproduce.py
    from .clean import cleanup_tasks, cleanup_dirs

    @task
    def clean(ctx, dry_run=False):
        cleanup_dirs(["build/data"], dry_run=dry_run)

    cleanup_tasks.add_task(clean, "clean_reproduce")

Extra patterns can be added in ``invoke.yaml``:

.. code-block:: yaml

    clean:
        extra_directories:
            - tmp/
        extra_files:
            - "**/*.log"
"""

from __future__ import absolute_import, print_function
import pathlib
import sys

from invoke import task, Collection
from invoke.executor import Executor
from path import Path


# -----------------------------------------------------------------------------
# TASKS:
# -----------------------------------------------------------------------------
@task
def clean(ctx, dry_run=False):
    """Cleanup temporary dirs/files to regain a clean state."""
    directories = list(ctx.clean.directories) + list(ctx.clean.extra_directories or [])
    files = list(ctx.clean.files) + list(ctx.clean.extra_files or [])
    execute_cleanup_tasks(ctx, cleanup_tasks, dry_run=dry_run)
    cleanup_dirs(directories, dry_run=dry_run)
    cleanup_files(files, dry_run=dry_run)


@task(name="clean-all", aliases=("distclean",))
def clean_all(ctx, dry_run=False):
    """Clean up everything, including virtual environments and tox dirs."""
    cleanup_dirs(ctx.clean_all.directories or [], dry_run=dry_run)
    cleanup_files(ctx.clean_all.files or [], dry_run=dry_run)
    clean(ctx, dry_run=dry_run)


@task
def clean_python(ctx, dry_run=False):
    """Cleanup python related files/dirs: *.pyc, __pycache__, ..."""
    cleanup_dirs(["build", "dist", "*.egg-info", "**/__pycache__"],
                 dry_run=dry_run)
    cleanup_files(["**/*.pyc", "**/*.pyo"], dry_run=dry_run)


# -----------------------------------------------------------------------------
# CLEANUP UTILITIES:
# -----------------------------------------------------------------------------
def execute_cleanup_tasks(ctx, cleanup_tasks, dry_run=False):
    """Run every task of a cleanup collection (signature: ``ctx, dry_run``)."""
    executor = Executor(cleanup_tasks, ctx.config)
    for cleanup_task in cleanup_tasks.tasks:
        print("CLEANUP TASK: %s" % cleanup_task)
        executor.execute((cleanup_task, dict(dry_run=dry_run)))


def _is_protected(path):
    # -- NEVER REMOVE: the running interpreter or its virtual environment.
    python_basedir = Path(sys.executable).dirname().parent.abspath()
    return path.abspath().startswith(python_basedir)


def cleanup_dirs(patterns, dry_run=False, workdir="."):
    """Remove directories matching ant-like patterns (like ``**/tmp``)."""
    for pattern in patterns:
        for directory in path_glob(pattern, workdir):
            if _is_protected(directory):
                print("SKIP-SUICIDE: '%s'" % directory)
                continue
            if dry_run:
                print("RMTREE: %s (dry-run)" % directory)
            else:
                print("RMTREE: %s" % directory)
                directory.rmtree_p()


def cleanup_files(patterns, dry_run=False, workdir="."):
    """Remove files matching ant-like patterns (like ``**/*.pyc``)."""
    for pattern in patterns:
        for filename in path_glob(pattern, workdir):
            if _is_protected(filename) or filename.isdir():
                continue
            if dry_run:
                print("REMOVE: %s (dry-run)" % filename)
            else:
                print("REMOVE: %s" % filename)
                filename.remove_p()


def path_glob(pattern, current_dir="."):
    """Resolve an ant-like pattern below ``current_dir`` (as path.Path)."""
    for p in pathlib.Path(str(current_dir)).glob(pattern):
        yield Path(str(p))


# -----------------------------------------------------------------------------
# TASK CONFIGURATION:
# -----------------------------------------------------------------------------
namespace = Collection(clean, clean_all)
namespace.configure({
    "clean": {
        "directories": [],
        "files": ["*.bak", "*.log", "*.tmp", "**/.DS_Store"],
        "extra_directories": [],
        "extra_files": [],
    },
    "clean_all": {
        "directories": [".venv*", ".tox", "downloads", "tmp"],
        "files": [],
    },
})

# -- SUPPORT ADDITIONAL CLEANUP TASKS (which are called by ``clean`` task)
cleanup_tasks = Collection("cleanup_tasks")
cleanup_tasks.add_task(clean_python)
