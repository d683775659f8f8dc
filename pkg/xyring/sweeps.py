# -*- coding: UTF-8 -*-
"""
Parameter sweeps and ground-state level crossings.

A sweep evaluates the ground state and the nearest-neighbor observables of
sites (1, 2) on a grid of one parameter (J, Bz or gamma). Level crossings
are located two ways:

closed form (gamma = 0 only)
    The field term is constant inside a magnetization block and the XY part
    scales with J, so every sector's lowest level is a straight line
    ``E_k = J * eps_k + Bz * (N - 2k)``. The crossings are the breakpoints of
    the lower envelope of these lines.

bisection (any gamma)
    A coarse grid is scanned for changes of the ground-state sector label
    (or, for gamma != 0, for jumps of C12/Con beyond a threshold); each
    bracket is bisected down to BISECTION_TOL.
"""

from __future__ import absolute_import
from collections import OrderedDict, namedtuple
from concurrent.futures import ThreadPoolExecutor
import functools
import logging
import math

import numpy as np

from .basis import Sector
from .eigensolver import ground_state, sector_ground_energies
from .errors import InvalidParameter, InvalidRange, UnsupportedAnisotropy
from .hamiltonian import ModelParams, require_axis
from .observables import concurrence, correlation, partial_trace

log = logging.getLogger(__name__)

COARSE_STEP = 0.01
BISECTION_TOL = 1e-6
JUMP_THRESHOLD_C12 = 0.05
JUMP_THRESHOLD_CONCURRENCE = 0.02
GRID_SLACK = 1e-9
ENVELOPE_TOL = 1e-12
CROSSING_AXES = ("j", "bz")


# -----------------------------------------------------------------------------
# RECORDS:
# -----------------------------------------------------------------------------
class SweepRecord(namedtuple("SweepRecord", [
        "axis", "axis_value", "params", "ground_energy", "sector",
        "c12", "con", "degenerate"])):
    """One grid point of a sweep."""
    __slots__ = ()


Crossing = namedtuple("Crossing", ["critical_value", "sector_before",
                                   "sector_after"])


class CrossingReport(object):
    """Ground-state level crossings along one parameter axis.

    :attr critical_values:  Ascending critical parameter values.
    :attr sector_sequence:  Ground sector on each interval between crossings
                            (one more entry than there are crossings).
    """
    CLOSED_FORM = "closed-form"
    BISECTION = "bisection"

    def __init__(self, params, swept_parameter, first_sector, crossings,
                 method):
        self.params = params
        self.swept_parameter = swept_parameter
        self.crossings = sorted(crossings)
        self.method = method
        self.sector_sequence = [first_sector] + [
            crossing.sector_after for crossing in self.crossings]

    @property
    def critical_values(self):
        return [crossing.critical_value for crossing in self.crossings]

    def __len__(self):
        return len(self.crossings)

    def __repr__(self):
        return "<CrossingReport %s %s: %s>" % (
            self.method, self.swept_parameter,
            ", ".join("%.6f" % value for value in self.critical_values))


class Thresholds(namedtuple("Thresholds", ["c12", "con"])):
    """Adjacent-point jump sizes that count as a discontinuity (gamma != 0)."""
    __slots__ = ()

    def distance(self, a, b):
        """Jump between two records in units of the thresholds."""
        return max(abs(a.c12 - b.c12) / self.c12, abs(a.con - b.con) / self.con)

DEFAULT_THRESHOLDS = Thresholds(JUMP_THRESHOLD_C12, JUMP_THRESHOLD_CONCURRENCE)


# -----------------------------------------------------------------------------
# GRID EVALUATION:
# -----------------------------------------------------------------------------
def parameter_grid(start, stop, step):
    """Grid ``start, start+step, ...`` including both endpoints.

    :raises InvalidRange: unless start < stop and step > 0 (all finite).
    """
    values = (start, stop, step)
    if not all(math.isfinite(value) for value in values):
        raise InvalidRange("REQUIRE: finite range (but was: %r)" % (values,))
    if not (step > 0.0 and start < stop):
        raise InvalidRange("REQUIRE: from < to and step > 0 "
                           "(but was: from=%r, to=%r, step=%r)" % values)
    count = int(math.floor((stop - start) / step + GRID_SLACK))
    grid = start + step * np.arange(count + 1)
    if stop - grid[-1] > GRID_SLACK * step:
        grid = np.append(grid, stop)
    else:
        grid[-1] = stop
    return grid


def evaluate_point(params, axis=None, sites=(1, 2)):
    """Ground state and pair observables at one parameter set."""
    state = ground_state(params)
    rho = partial_trace(state, sites)
    axis_value = getattr(params, axis) if axis else None
    return SweepRecord(axis, axis_value, params, state.energy, state.sector,
                       correlation(rho), concurrence(rho), state.degenerate)


def map_ordered(function, items, threads=1):
    """``[function(item) for item in items]``, optionally on a thread pool.

    Results keep the order of ``items`` whatever the scheduling.
    """
    items = list(items)
    if threads is None or threads <= 1 or len(items) <= 1:
        return [function(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as executor:
        return list(executor.map(function, items))


def sweep(template, axis, start, stop, step, threads=1, sites=(1, 2)):
    """Evaluate every grid point of a one-parameter sweep.

    :param template:  ModelParams supplying the fixed parameters.
    :param axis:      Swept parameter: "j", "bz" or "gamma".
    :return: list of SweepRecord ordered by parameter value.
    :raises InvalidRange: for an empty range or a non-positive step.
    """
    axis = require_axis(axis)
    grid = parameter_grid(start, stop, step)
    points = [template.with_axis(axis, value) for value in grid]
    log.debug("sweep: %s from %r to %r (%d points, threads=%s)",
              axis, start, stop, len(points), threads)
    evaluate = functools.partial(evaluate_point, axis=axis, sites=sites)
    return map_ordered(evaluate, points, threads)


def gamma_family(template, gammas, start, stop, step, threads=1):
    """Bz sweeps at each anisotropy of ``gammas``.

    :return: OrderedDict gamma -> list of SweepRecord.
    """
    family = OrderedDict()
    for gamma in gammas:
        family[gamma] = sweep(template.replace(gamma=gamma), "bz",
                              start, stop, step, threads=threads)
    return family


def max_adjacent_jump(records, field):
    """Largest |delta| of ``field`` between consecutive non-degenerate records."""
    values = [getattr(record, field) for record in records
              if not record.degenerate]
    if len(values) < 2:
        return 0.0
    return float(np.max(np.abs(np.diff(values))))


# -----------------------------------------------------------------------------
# CLOSED FORM:
# -----------------------------------------------------------------------------
Line = namedtuple("Line", ["sector", "intercept", "slope"])


def lower_envelope(lines, lower, upper=math.inf):
    """Breakpoints of ``min(line.intercept + line.slope * x)`` on (lower, upper).

    :return: ``(first_sector, crossings)``; ties at ``lower`` resolve to the
        line that stays lowest to the right, then to the lower sector label.
    """
    if not math.isfinite(lower):
        raise InvalidRange("REQUIRE: finite lower bound (but was: %r)" % lower)
    values = [line.intercept + line.slope * lower for line in lines]
    best = min(values)
    margin = ENVELOPE_TOL * max(1.0, abs(best))
    tied = [line for line, value in zip(lines, values) if value <= best + margin]
    current = min(tied, key=lambda line: (line.slope, line.sector))
    first_sector = current.sector

    crossings = []
    x = lower
    while True:
        candidates = []
        for line in lines:
            if line.slope < current.slope:
                meet = ((line.intercept - current.intercept) /
                        (current.slope - line.slope))
                if meet > x:
                    candidates.append((meet, line.slope, line.sector, line))
        if not candidates:
            break
        meet, _, _, following = min(candidates)
        if meet >= upper:
            break
        crossings.append(Crossing(meet, current.sector, following.sector))
        current, x = following, meet
    return first_sector, crossings


@functools.lru_cache(maxsize=None)
def _xy_sector_energies(n):
    energies = sector_ground_energies(ModelParams(n, 1.0, 0.0, 0.0))
    return tuple(energies.items())


def xy_sector_energies(n):
    """Lowest level eps_k of each magnetization sector at J=1, Bz=0.

    :return: OrderedDict sector -> eps_k (cached per n).
    """
    return OrderedDict(_xy_sector_energies(n))


def _require_crossing_axis(axis):
    axis = require_axis(axis)
    if axis not in CROSSING_AXES:
        raise InvalidParameter("REQUIRE: crossing axis in %s (but was: %r)" %
                               (", ".join(CROSSING_AXES), axis))
    return axis


def find_crossings_closed_form(template, axis, lower=0.0, upper=math.inf):
    """Exact level crossings for gamma = 0 from the sector-linearity of H.

    :param template:  ModelParams with gamma = 0; the swept value is ignored.
    :param axis:      "j" (at fixed Bz) or "bz" (at fixed J).
    :param lower:     Start of the swept half-line (default 0).
    :param upper:     Crossings at or beyond this value are dropped.
    :raises UnsupportedAnisotropy: if gamma != 0.
    """
    axis = _require_crossing_axis(axis)
    if not template.is_isotropic:
        raise UnsupportedAnisotropy(
            "REQUIRE: gamma = 0 for closed-form crossings (but was: %r)" %
            template.gamma)
    if not lower < upper:
        raise InvalidRange("REQUIRE: lower < upper (but was: %r, %r)" %
                           (lower, upper))
    n = template.n
    lines = []
    for sector, eps in xy_sector_energies(n).items():
        field = float(n - 2 * sector.k)
        if axis == "bz":
            lines.append(Line(sector, template.j * eps, field))
        else:
            lines.append(Line(sector, template.bz * field, eps))
    first_sector, crossings = lower_envelope(lines, lower, upper)
    log.debug("closed-form crossings (%s): %s", axis,
              [crossing.critical_value for crossing in crossings])
    return CrossingReport(template, axis, first_sector, crossings,
                          CrossingReport.CLOSED_FORM)


# -----------------------------------------------------------------------------
# BISECTION:
# -----------------------------------------------------------------------------
def _midpoint(lo, hi):
    return 0.5 * (lo.axis_value + hi.axis_value)


def _bisect_sectors(evaluate, lo, hi, tol):
    """All sector changes inside the bracket [lo, hi]."""
    if hi.axis_value - lo.axis_value <= tol:
        return [Crossing(_midpoint(lo, hi), lo.sector, hi.sector)]
    mid = evaluate(_midpoint(lo, hi))
    crossings = []
    if mid.sector != lo.sector:
        crossings.extend(_bisect_sectors(evaluate, lo, mid, tol))
    if mid.sector != hi.sector:
        crossings.extend(_bisect_sectors(evaluate, mid, hi, tol))
    return crossings


def _bisect_jump(evaluate, lo, hi, tol, thresholds):
    """Locate an observable discontinuity inside [lo, hi], or None."""
    while hi.axis_value - lo.axis_value > tol:
        mid = evaluate(_midpoint(lo, hi))
        if thresholds.distance(lo, mid) >= thresholds.distance(mid, hi):
            hi = mid
        else:
            lo = mid
    if thresholds.distance(lo, hi) < 1.0:
        # -- STEEP BUT CONTINUOUS.
        return None
    return Crossing(_midpoint(lo, hi), lo.sector, hi.sector)


def find_crossings_bisection(template, axis, start, stop, step=COARSE_STEP,
                             tol=BISECTION_TOL, thresholds=DEFAULT_THRESHOLDS,
                             threads=1):
    """Numerical level-crossing finder for any gamma.

    :param template:  ModelParams; the swept value is ignored.
    :param axis:      "j" or "bz".
    :param start:     First coarse grid value.
    :param stop:      Last coarse grid value.
    :param step:      Coarse grid step.
    :param tol:       Final bracket width.
    :raises InvalidRange: for an empty range.
    """
    axis = _require_crossing_axis(axis)
    records = sweep(template, axis, start, stop, step, threads=threads)

    def evaluate(value):
        return evaluate_point(template.with_axis(axis, value), axis=axis)

    crossings = []
    first_sector = None
    previous = None
    for record in records:
        if record.degenerate:
            continue
        if previous is None:
            first_sector = record.sector
        elif record.sector != previous.sector:
            log.debug("bisection: sector bracket [%r, %r]",
                      previous.axis_value, record.axis_value)
            crossings.extend(_bisect_sectors(evaluate, previous, record, tol))
        elif (not template.is_isotropic and
              thresholds.distance(previous, record) >= 1.0):
            log.debug("bisection: jump bracket [%r, %r]",
                      previous.axis_value, record.axis_value)
            crossing = _bisect_jump(evaluate, previous, record, tol, thresholds)
            if crossing is not None:
                crossings.append(crossing)
        previous = record
    if first_sector is None:
        first_sector = records[0].sector
    return CrossingReport(template, axis, first_sector, crossings,
                          CrossingReport.BISECTION)


# -----------------------------------------------------------------------------
# LEVEL DIAGRAM:
# -----------------------------------------------------------------------------
class LevelDiagram(object):
    """Lowest energy of each magnetization sector on a Bz grid.

    :attr fields:    Bz grid values.
    :attr sectors:   Magnetization sectors (columns).
    :attr energies:  Array of shape (len(fields), len(sectors)).
    """

    def __init__(self, params, fields, sectors, energies):
        self.params = params
        self.fields = np.asarray(fields, dtype=float)
        self.sectors = list(sectors)
        self.energies = np.asarray(energies, dtype=float)

    def fitted_lines(self):
        """Least-squares straight line of every sector curve."""
        lines = []
        for column, sector in enumerate(self.sectors):
            slope, intercept = np.polyfit(self.fields, self.energies[:, column], 1)
            lines.append(Line(sector, float(intercept), float(slope)))
        return lines

    def max_affine_residual(self):
        """Largest deviation of any curve from its fitted straight line."""
        residual = 0.0
        for column, line in enumerate(self.fitted_lines()):
            fitted = line.intercept + line.slope * self.fields
            residual = max(residual, float(np.max(np.abs(
                fitted - self.energies[:, column]))))
        return residual

    def ground_sectors(self):
        """Sector of the lowest curve at every grid point."""
        lowest = np.argmin(self.energies, axis=1)
        return [self.sectors[column] for column in lowest]

    def envelope_crossings(self):
        """Switches of the lower envelope inside the tabulated Bz range."""
        _, crossings = lower_envelope(self.fitted_lines(), float(self.fields[0]),
                                      float(self.fields[-1]))
        return crossings


def level_diagram(template, bz_from, bz_to, step, threads=1):
    """Sector-resolved lowest levels over a Bz grid (gamma = 0).

    :raises UnsupportedAnisotropy: if gamma != 0.
    :raises InvalidRange: for an empty range or a non-positive step.
    """
    if not template.is_isotropic:
        raise UnsupportedAnisotropy(
            "REQUIRE: gamma = 0 for a level diagram (but was: %r)" %
            template.gamma)
    fields = parameter_grid(bz_from, bz_to, step)
    sectors = [Sector.magnetization(k) for k in range(template.n + 1)]
    points = [template.replace(bz=value) for value in fields]

    def levels(params):
        energies = sector_ground_energies(params)
        return [energies[sector] for sector in sectors]

    energies = map_ordered(levels, points, threads)
    return LevelDiagram(template, fields, sectors, energies)
