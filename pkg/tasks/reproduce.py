# -*- coding: UTF-8 -*-
"""
Regenerate the data tables behind the figures and the crossing table.

EXAMPLE::

    invoke reproduce                 # -- all tables under build/data/
    invoke reproduce.crossings       # -- critical couplings only
    invoke reproduce --threads=4

Every table is a CSV file that gnuplot (or a spreadsheet) can read directly.
"""

from __future__ import absolute_import, print_function
import io
import sys

from invoke import task, Collection
from path import Path

# -- TASK-LIBRARY:
from .clean import cleanup_tasks, cleanup_dirs


def _xyring():
    # -- ALLOW: invoke from a source checkout (package not installed).
    topdir = str(Path(__file__).dirname().parent.abspath())
    if topdir not in sys.path:
        sys.path.insert(0, topdir)
    import xyring
    from xyring import formats
    return xyring, formats


def write_table(formats, outdir, filename, columns, rows):
    outdir = Path(outdir)
    outdir.makedirs_p()
    filename = outdir/filename
    with io.open(filename, "w", encoding="utf-8", newline="\n") as stream:
        count = formats.write_csv(stream, columns, rows)
    print("WRITTEN: %s (%d rows)" % (filename, count))


# -----------------------------------------------------------------------------
# TASKS:
# -----------------------------------------------------------------------------
@task(help={"outdir": "Output directory (default: build/data)"})
def crossings(ctx, outdir=""):
    """Critical couplings J of the isotropic ring at Bz=1.3 (N=4..10)."""
    xyring, formats = _xyring()
    outdir = outdir or ctx.reproduce.outdir
    rows = []
    for n in ctx.reproduce.sizes:
        params = xyring.ModelParams(n, 1.0, 0.0, ctx.reproduce.bz)
        report = xyring.find_crossings_closed_form(params, "j")
        for row in formats.crossing_rows(report):
            rows.append([n] + list(row))
    write_table(formats, outdir, "crossings_j.csv", ["n"] + formats.CROSSING_COLUMNS,
                rows)


@task(help={
    "outdir": "Output directory (default: build/data)",
    "threads": "Worker threads for the sweeps",
})
def sweeps(ctx, outdir="", threads=1):
    """C12 and concurrence along J (several N and Bz) and along Bz (several gamma)."""
    xyring, formats = _xyring()
    outdir = outdir or ctx.reproduce.outdir
    step = ctx.reproduce.step
    for n in ctx.reproduce.sizes:
        params = xyring.ModelParams(n, 1.0, 0.0, ctx.reproduce.bz)
        records = xyring.sweep(params, "j", ctx.reproduce.j_from,
                               ctx.reproduce.j_to, step, threads=threads)
        write_table(formats, outdir, "sweep_j_n%d.csv" % n, formats.SWEEP_COLUMNS,
                    formats.sweep_rows(records))

    for bz in ctx.reproduce.scaled_fields:
        params = xyring.ModelParams(ctx.reproduce.family_size, 1.0, 0.0, bz)
        records = xyring.sweep(params, "j", ctx.reproduce.j_from,
                               2.0 * ctx.reproduce.j_to, step, threads=threads)
        write_table(formats, outdir,
                    "sweep_j_n%d_bz%s.csv" % (params.n, formats.format_float(bz)),
                    formats.SWEEP_COLUMNS, formats.sweep_rows(records))

    params = xyring.ModelParams(ctx.reproduce.family_size, 1.0, 0.0, 0.0)
    family = xyring.gamma_family(params, ctx.reproduce.gammas,
                                 ctx.reproduce.bz_from, ctx.reproduce.bz_to,
                                 step, threads=threads)
    for gamma, records in family.items():
        write_table(formats, outdir, "sweep_bz_gamma%s.csv" % formats.format_float(gamma),
                    formats.SWEEP_COLUMNS, formats.sweep_rows(records))


@task(help={
    "outdir": "Output directory (default: build/data)",
    "threads": "Worker threads",
})
def levels(ctx, outdir="", threads=1):
    """Lowest energy of every magnetization sector versus Bz."""
    xyring, formats = _xyring()
    outdir = outdir or ctx.reproduce.outdir
    params = xyring.ModelParams(ctx.reproduce.family_size, 1.0, 0.0, 0.0)
    diagram = xyring.level_diagram(params, ctx.reproduce.bz_from,
                                   ctx.reproduce.bz_to, ctx.reproduce.step,
                                   threads=threads)
    write_table(formats, outdir, "levels_n%d.csv" % params.n,
                formats.level_columns(diagram), formats.level_rows(diagram))


@task(name="all", help={
    "outdir": "Output directory (default: build/data)",
    "threads": "Worker threads for the sweeps",
})
def reproduce_all(ctx, outdir="", threads=1):
    """Regenerate every data table."""
    crossings(ctx, outdir=outdir)
    sweeps(ctx, outdir=outdir, threads=threads)
    levels(ctx, outdir=outdir, threads=threads)


@task
def clean(ctx, dry_run=False):
    """Cleanup generated data tables."""
    cleanup_dirs([ctx.reproduce.outdir or "build/data"], dry_run=dry_run)


# -----------------------------------------------------------------------------
# TASK CONFIGURATION:
# -----------------------------------------------------------------------------
namespace = Collection(crossings, sweeps, levels, clean)
namespace.add_task(reproduce_all, default=True)
namespace.configure({
    "reproduce": {
        "outdir": "build/data",
        "sizes": [4, 6, 8, 10],
        "bz": 1.3,
        "scaled_fields": [0.65, 2.6],
        "j_from": 0.1,
        "j_to": 5.0,
        "family_size": 6,
        "gammas": [0.0, 0.5, 1.0],
        "bz_from": 0.0,
        "bz_to": 3.0,
        "step": 0.01,
    },
})

# -- ADD CLEANUP TASK:
cleanup_tasks.add_task(clean, "clean_reproduce")
cleanup_tasks.configure(namespace.configuration())
