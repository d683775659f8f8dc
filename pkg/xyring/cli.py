# -*- coding: UTF-8 -*-
"""
Command-line front end::

    xyring ground      --n 6 --j 1 --bz 3.0 --format json
    xyring spectrum    --n 6 --j 1 --bz 1.0 [--sector m=3]
    xyring observables --n 6 --j 1 --bz 1.0 [--sites 1,2 | --all-bonds]
    xyring sweep       --n 6 --bz 1.3 --axis j --from 0.1 --to 3 --step 0.01
    xyring crossings   --n 6 --bz 1.3 --axis j --method closed-form
    xyring levels      --n 6 --j 1 --bz-from 0 --bz-to 3 --step 0.01
    xyring verify      --input ground.json

EXIT STATUS:
    0 on success, 2 for usage/parameter errors, 3 for numerical errors,
    4 for I/O errors.
"""

from __future__ import absolute_import, print_function
import argparse
import io
import logging
import math
import sys

import numpy as np

from . import __version__
from . import formats
from .basis import Sector, enumerate_sector
from .configuration import FORMATS, Configuration
from .eigensolver import (diagonalize, full_spectrum, ground_state,
                          rayleigh_quotient, solve_sectors)
from .errors import (FormatError, NumericalError, ParameterError,
                     VerificationFailure)
from .hamiltonian import ModelParams, build_hamiltonian
from .observables import bond_observables, pair_observables
from .sweeps import (CrossingReport, Thresholds, find_crossings_bisection,
                     find_crossings_closed_form, gamma_family, level_diagram,
                     sweep)

log = logging.getLogger(__name__)

PROGRAM = "xyring"
EXIT_OK = 0
EXIT_IO = 4
VERIFY_TOL = 1e-10
STORED_ENERGY_RTOL = 1e-8


# -----------------------------------------------------------------------------
# ARGUMENT TYPES:
# -----------------------------------------------------------------------------
def float_list(text):
    try:
        return [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("REQUIRE: comma-separated numbers "
                                         "(but was: %r)" % text)


def site_pair(text):
    try:
        i, j = (int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("REQUIRE: site pair i,j "
                                         "(but was: %r)" % text)
    return i, j


def sector_label(text):
    try:
        return Sector.from_string(text)
    except ParameterError as e:
        raise argparse.ArgumentTypeError(str(e))


# -----------------------------------------------------------------------------
# PARSER:
# -----------------------------------------------------------------------------
def add_model_options(parser):
    group = parser.add_argument_group("model")
    group.add_argument("--n", type=int, required=True,
                       help="Number of sites (3..14).")
    group.add_argument("--j", type=float, help="Mean coupling J (default: 1).")
    group.add_argument("--gamma", type=float,
                       help="Anisotropy gamma (default: 0).")
    group.add_argument("--jx", type=float, help="Coupling Jx (with --jy).")
    group.add_argument("--jy", type=float, help="Coupling Jy (with --jx).")
    group.add_argument("--bz", type=float, default=0.0,
                       help="Transverse field Bz (default: %(default)s).")


def add_output_options(parser, formats_=FORMATS):
    parser.add_argument("--output", "-o", default="-",
                        help="Output file ('-' for stdout, default).")
    parser.add_argument("--format", choices=formats_, default=None,
                        help="Output format (default: from config or csv).")


def make_parser():
    parser = argparse.ArgumentParser(
        prog=PROGRAM,
        description="Exact diagonalization of the spin-1/2 XY ring in a "
                    "transverse field.")
    parser.add_argument("--version", action="version",
                        version="%(prog)s " + __version__)
    parser.add_argument("--config", help="Configuration file ([xyring] section).")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="More logging (-v: INFO, -vv: DEBUG).")
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    ground = commands.add_parser("ground", help="Ground state amplitudes.")
    add_model_options(ground)
    add_output_options(ground)
    ground.add_argument("--dump-matrix", metavar="PATH",
                        help="Write the ground sector Hamiltonian as CSV.")

    spectrum = commands.add_parser("spectrum", help="Sector spectra.")
    add_model_options(spectrum)
    add_output_options(spectrum)
    spectrum.add_argument("--sector", type=sector_label,
                          help="Single sector (m=K, even, odd, full).")
    spectrum.add_argument("--dump-matrix", metavar="PATH",
                          help="Write the Hamiltonian of --sector as CSV.")

    observables = commands.add_parser("observables",
                                      help="Pair correlation and concurrence.")
    add_model_options(observables)
    add_output_options(observables)
    observables.add_argument("--sites", type=site_pair, default=(1, 2),
                             help="Site pair i,j (default: 1,2).")
    observables.add_argument("--all-bonds", action="store_true",
                             help="Evaluate every ring bond.")
    observables.add_argument("--dump-rho", metavar="PATH",
                             help="Write the 4x4 reduced density matrix as CSV.")

    sweep_ = commands.add_parser("sweep", help="One-parameter sweep.")
    add_model_options(sweep_)
    add_output_options(sweep_)
    sweep_.add_argument("--axis", choices=("j", "bz", "gamma"), required=True)
    sweep_.add_argument("--from", dest="start", type=float, required=True)
    sweep_.add_argument("--to", dest="stop", type=float, required=True)
    sweep_.add_argument("--step", type=float, default=None,
                        help="Grid step (default: coarse_step from config).")
    sweep_.add_argument("--gamma-list", type=float_list,
                        help="Repeat a Bz sweep for each gamma (comma list).")
    sweep_.add_argument("--threads", type=int, default=None)

    crossings = commands.add_parser("crossings", help="Level crossings.")
    add_model_options(crossings)
    add_output_options(crossings)
    crossings.add_argument("--axis", choices=("j", "bz"), required=True)
    crossings.add_argument("--method", choices=(CrossingReport.CLOSED_FORM,
                                                CrossingReport.BISECTION),
                           default=CrossingReport.CLOSED_FORM)
    crossings.add_argument("--from", dest="start", type=float, default=0.0)
    crossings.add_argument("--to", dest="stop", type=float, default=None,
                           help="Upper end (required for bisection).")
    crossings.add_argument("--step", type=float, default=None,
                           help="Coarse grid step for bisection.")
    crossings.add_argument("--threads", type=int, default=None)

    levels = commands.add_parser("levels", help="Sector level diagram in Bz.")
    add_model_options(levels)
    add_output_options(levels, formats_=("csv",))
    levels.add_argument("--bz-from", type=float, required=True)
    levels.add_argument("--bz-to", type=float, required=True)
    levels.add_argument("--step", type=float, default=None)
    levels.add_argument("--threads", type=int, default=None)

    verify = commands.add_parser("verify",
                                 help="Re-check a ground-state JSON dump.")
    verify.add_argument("--input", "-i", required=True,
                        help="Ground-state JSON written by 'ground'.")
    return parser


def model_params(args, parser):
    """ModelParams from either (--j, --gamma) or (--jx, --jy)."""
    uses_j = args.j is not None or args.gamma is not None
    uses_jxy = args.jx is not None or args.jy is not None
    if uses_j and uses_jxy:
        parser.error("use either --j/--gamma or --jx/--jy, not both")
    if uses_jxy:
        if args.jx is None or args.jy is None:
            parser.error("--jx and --jy must be given together")
        return ModelParams.from_couplings(args.n, args.jx, args.jy, args.bz)
    j = 1.0 if args.j is None else args.j
    gamma = 0.0 if args.gamma is None else args.gamma
    return ModelParams(args.n, j, gamma, args.bz)


# -----------------------------------------------------------------------------
# COMMANDS:
# -----------------------------------------------------------------------------
class Command(object):
    """One subcommand run: knows its arguments, configuration and output."""

    def __init__(self, args, parser, config):
        self.args = args
        self.parser = parser
        self.config = config
        self.params = None
        if hasattr(args, "n"):
            self.params = model_params(args, parser)

    @property
    def output_format(self):
        return getattr(self.args, "format", None) or self.config.format

    @property
    def threads(self):
        threads = getattr(self.args, "threads", None)
        if threads is None:
            threads = self.config.threads
        if threads < 1:
            self.parser.error("--threads must be >= 1")
        return threads

    @property
    def step(self):
        if self.args.step is None:
            return self.config.coarse_step
        return self.args.step

    def write_table(self, columns, rows, document=None):
        """Write CSV rows, or the JSON ``document()`` when JSON is selected.

        :return: Number of data rows.
        """
        rows = list(rows)
        with formats.open_output(self.args.output) as stream:
            if self.output_format == "json" and document is not None:
                formats.write_json(stream, document())
            else:
                formats.write_csv(stream, columns, rows)
        return len(rows)

    def dump_csv(self, path, columns, rows):
        with formats.open_output(path) as stream:
            formats.write_csv(stream, columns, rows)
        log.info("wrote %s", path)

    def summary(self, count, output=None):
        output = output if output is not None else getattr(self.args, "output", "-")
        parts = [self.args.command]
        if self.params is not None:
            parts.append("n=%d j=%s gamma=%s bz=%s" % (
                self.params.n, formats.format_float(self.params.j),
                formats.format_float(self.params.gamma),
                formats.format_float(self.params.bz)))
        parts.append("-> %s (%d records)" % (output, count))
        line = " ".join(parts)
        stream = sys.stderr if output in (None, "-") else sys.stdout
        print(line, file=stream)

    # -- SUBCOMMANDS:
    def ground(self):
        state = ground_state(self.params)
        if self.args.dump_matrix:
            h = build_hamiltonian(self.params, state.sector)
            self.dump_csv(self.args.dump_matrix, formats.MATRIX_COLUMNS,
                          formats.matrix_rows(h))
        document = formats.ground_state_document(state)
        with formats.open_output(self.args.output) as stream:
            if self.output_format == "json":
                formats.write_json(stream, document)
            else:
                formats.write_csv(stream, ["basis", "amplitude"],
                                  state.bitstring_amplitudes())
        return len(document["amplitudes"])

    def spectrum(self):
        sector = self.args.sector
        if self.args.dump_matrix and sector is None:
            self.parser.error("--dump-matrix requires --sector")
        if sector is None:
            spectra = solve_sectors(self.params)
        elif sector.is_full:
            spectra = {sector: full_spectrum(self.params)}
        else:
            spectra = {sector: diagonalize(build_hamiltonian(self.params, sector))}
        if self.args.dump_matrix:
            self.dump_csv(self.args.dump_matrix, formats.MATRIX_COLUMNS,
                          formats.matrix_rows(build_hamiltonian(self.params,
                                                                sector)))

        def document():
            return {"parameters": formats.params_document(self.params),
                    "spectra": dict((sector.label, [
                        formats.round_float(energy)
                        for energy in spectrum.eigenvalues])
                        for sector, spectrum in spectra.items())}
        self.write_table(formats.SPECTRUM_COLUMNS,
                         formats.spectrum_rows(spectra), document)
        return sum(len(spectrum) for spectrum in spectra.values())

    def observables(self):
        if self.args.all_bonds and self.args.dump_rho:
            self.parser.error("--dump-rho needs a single pair (not --all-bonds)")
        state = ground_state(self.params)
        if self.args.all_bonds:
            bonds = bond_observables(state)
        else:
            rho, c12, con = pair_observables(state, self.args.sites)
            bonds = [(rho.sites, c12, con)]
            if self.args.dump_rho:
                rows = list(rho.rows())
                self.dump_csv(self.args.dump_rho, rows[0], rows[1:])

        def document():
            return {"parameters": formats.params_document(self.params),
                    "energy": formats.round_float(state.energy),
                    "sector": state.sector.label,
                    "degenerate": state.degenerate,
                    "bonds": [{"i": i, "j": j,
                               "c12": formats.round_float(c12),
                               "concurrence": formats.round_float(con)}
                              for (i, j), c12, con in bonds]}
        self.write_table(formats.BOND_COLUMNS, formats.bond_rows(bonds),
                         document)
        return len(bonds)

    def sweep(self):
        args = self.args
        if args.gamma_list:
            if args.axis != "bz":
                self.parser.error("--gamma-list requires --axis bz")
            family = gamma_family(self.params, args.gamma_list, args.start,
                                  args.stop, self.step, threads=self.threads)
            records = [record for records in family.values()
                       for record in records]
        else:
            records = sweep(self.params, args.axis, args.start, args.stop,
                            self.step, threads=self.threads)
        return self.write_table(formats.SWEEP_COLUMNS,
                                formats.sweep_rows(records),
                                lambda: formats.sweep_document(records))

    def crossings(self):
        args = self.args
        if args.method == CrossingReport.CLOSED_FORM:
            upper = math.inf if args.stop is None else args.stop
            report = find_crossings_closed_form(self.params, args.axis,
                                                lower=args.start, upper=upper)
        else:
            if args.stop is None:
                self.parser.error("--to is required for --method bisection")
            thresholds = Thresholds(self.config.jump_threshold_c12,
                                    self.config.jump_threshold_concurrence)
            report = find_crossings_bisection(
                self.params, args.axis, args.start, args.stop, step=self.step,
                thresholds=thresholds, threads=self.threads)
        self.write_table(formats.CROSSING_COLUMNS, formats.crossing_rows(report),
                         lambda: formats.crossing_document(report))
        return len(report)

    def levels(self):
        args = self.args
        diagram = level_diagram(self.params, args.bz_from, args.bz_to,
                                self.step, threads=self.threads)
        return self.write_table(formats.level_columns(diagram),
                                formats.level_rows(diagram))

    def verify(self):
        with io.open(self.args.input, "r", encoding="utf-8") as stream:
            params, sector, stored, amplitudes = \
                formats.load_ground_state_document(stream)
        self.params = params
        basis = enumerate_sector(params.n, sector)
        vector = np.zeros(basis.dimension)
        for state, amplitude in amplitudes:
            try:
                vector[basis.index_of(state)] = amplitude
            except KeyError as e:
                raise FormatError("BASIS STATE %s OUTSIDE SECTOR %s" %
                                  (e.args[0], sector))
        energy = rayleigh_quotient(params, sector, vector)
        reference = ground_state(params).energy
        if abs(energy - reference) > VERIFY_TOL * max(1.0, abs(reference)):
            raise VerificationFailure(
                "ENERGY MISMATCH: <psi|H|psi> = %.12g, ground energy = %.12g"
                % (energy, reference))
        if abs(energy - stored) > STORED_ENERGY_RTOL * max(1.0, abs(energy)):
            raise VerificationFailure(
                "ENERGY MISMATCH: <psi|H|psi> = %.12g, stored energy = %.12g"
                % (energy, stored))
        print("verify %s: energy=%s sector=%s OK" % (
            self.args.input, formats.format_float(energy), sector.label))
        return len(amplitudes)

    def run(self):
        count = getattr(self, self.args.command)()
        if self.args.command != "verify":
            self.summary(count)
        return EXIT_OK


# -----------------------------------------------------------------------------
# MAIN:
# -----------------------------------------------------------------------------
def main(argv=None):
    """Run the command line; returns the exit status."""
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code

    try:
        config = Configuration.load(args.config)
        levels = [config.logging_level, logging.INFO, logging.DEBUG]
        level = levels[min(args.verbose, 2)] if args.verbose else None
        config.setup_logging(level=level)
        return Command(args, parser, config).run()
    except SystemExit as e:
        return e.code
    except ParameterError as e:
        print("%s: error: %s" % (PROGRAM, e), file=sys.stderr)
        return e.exit_status
    except NumericalError as e:
        print("%s: numerical error: %s" % (PROGRAM, e), file=sys.stderr)
        return e.exit_status
    except (IOError, OSError) as e:
        print("%s: I/O error: %s" % (PROGRAM, e), file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
