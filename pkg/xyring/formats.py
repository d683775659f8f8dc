# -*- coding: UTF-8 -*-
"""
CSV and JSON codecs for the artifacts written by the command-line tool.

All floats are printed with 9 significant digits; files are UTF-8 with LF
line endings, so identical inputs give byte-identical files.
"""

from __future__ import absolute_import
import contextlib
import csv
import io
import json
import sys

from .basis import Sector, parse_bitstring
from .errors import FormatError
from .hamiltonian import ModelParams

FLOAT_FORMAT = "%.9g"

SWEEP_COLUMNS = ["axis_name", "axis_value", "n", "j", "gamma", "bz",
                 "ground_energy", "sector", "c12", "concurrence", "degenerate"]
CROSSING_COLUMNS = ["index", "critical_value", "sector_before",
                    "sector_after", "method"]
SPECTRUM_COLUMNS = ["sector", "index", "energy"]
MATRIX_COLUMNS = ["row", "col", "value"]
BOND_COLUMNS = ["i", "j", "c12", "concurrence"]


# -----------------------------------------------------------------------------
# VALUE FORMATTING:
# -----------------------------------------------------------------------------
def format_float(value):
    text = FLOAT_FORMAT % value
    if text == "-0":
        text = "0"
    return text


def round_float(value):
    """Float with 9 significant digits (for JSON documents)."""
    return float(format_float(value))


def format_value(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format_float(value)
    if isinstance(value, Sector):
        return value.label
    return str(value)


@contextlib.contextmanager
def open_output(path):
    """Text stream for ``path``; ``-`` (or None) is standard output."""
    if path in (None, "-"):
        yield sys.stdout
        sys.stdout.flush()
        return
    with io.open(path, "w", encoding="utf-8", newline="\n") as stream:
        yield stream


def write_csv(stream, columns, rows):
    """Write a header row and data rows; returns the number of data rows."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(columns)
    count = 0
    for row in rows:
        writer.writerow([format_value(value) for value in row])
        count += 1
    return count


def write_json(stream, document):
    json.dump(document, stream, indent=2, sort_keys=False)
    stream.write("\n")


def params_document(params):
    return {
        "n": params.n, "j": round_float(params.j),
        "gamma": round_float(params.gamma), "bz": round_float(params.bz),
        "jx": round_float(params.jx), "jy": round_float(params.jy),
    }


# -----------------------------------------------------------------------------
# ROWS PER ARTIFACT:
# -----------------------------------------------------------------------------
def sweep_rows(records):
    for record in records:
        params = record.params
        yield [record.axis, float(record.axis_value), params.n, params.j,
               params.gamma, params.bz, record.ground_energy, record.sector,
               record.c12, record.con, record.degenerate]


def sweep_document(records):
    return [dict(zip(SWEEP_COLUMNS, [
        record.axis, round_float(record.axis_value), record.params.n,
        round_float(record.params.j), round_float(record.params.gamma),
        round_float(record.params.bz), round_float(record.ground_energy),
        record.sector.label, round_float(record.c12), round_float(record.con),
        record.degenerate])) for record in records]


def crossing_rows(report):
    for index, crossing in enumerate(report.crossings, 1):
        yield [index, crossing.critical_value, crossing.sector_before,
               crossing.sector_after, report.method]


def crossing_document(report):
    return {
        "parameters": params_document(report.params),
        "swept_parameter": report.swept_parameter,
        "method": report.method,
        "critical_values": [round_float(value)
                            for value in report.critical_values],
        "sector_sequence": [sector.label for sector in report.sector_sequence],
    }


def spectrum_rows(spectra):
    for sector, spectrum in spectra.items():
        for index, energy in enumerate(spectrum.eigenvalues):
            yield [sector, index, float(energy)]


def level_columns(diagram):
    return ["bz"] + [sector.label for sector in diagram.sectors]


def level_rows(diagram):
    for field, energies in zip(diagram.fields, diagram.energies):
        yield [float(field)] + [float(energy) for energy in energies]


def matrix_rows(h):
    return h.nonzeros()


def bond_rows(bonds):
    for (i, j), c12, con in bonds:
        yield [i, j, c12, con]


# -----------------------------------------------------------------------------
# GROUND-STATE DOCUMENT:
# -----------------------------------------------------------------------------
def ground_state_document(state):
    return {
        "parameters": params_document(state.params),
        "energy": round_float(state.energy),
        "sector": state.sector.label,
        "degenerate": state.degenerate,
        "amplitudes": [{"basis": basis, "amplitude": round_float(amplitude)}
                       for basis, amplitude in state.bitstring_amplitudes()],
    }


def load_ground_state_document(stream):
    """Parse a ground-state JSON dump.

    :return: ``(params, sector, energy, amplitudes)`` where amplitudes is a
        list of ``(state, amplitude)``.
    :raises FormatError: if the document is malformed.
    """
    try:
        document = json.load(stream)
        block = document["parameters"]
        params = ModelParams(block["n"], block["j"], block["gamma"],
                             block["bz"])
        sector = Sector.from_string(document["sector"])
        energy = float(document["energy"])
        amplitudes = []
        for entry in document["amplitudes"]:
            state, width = parse_bitstring(entry["basis"])
            if width != params.n:
                raise ValueError("basis %r does not have %d sites" %
                                 (entry["basis"], params.n))
            amplitudes.append((state, float(entry["amplitude"])))
    except FormatError:
        raise
    except (KeyError, TypeError, ValueError) as e:
        raise FormatError("MALFORMED GROUND-STATE DOCUMENT: %s" % e)
    return params, sector, energy, amplitudes
