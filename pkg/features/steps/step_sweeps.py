# -*- coding: UTF-8 -*-
"""
Feature: Parameter sweeps and ground-state level crossings

  Scenario Outline: Critical couplings at Bz = 1.3
    Given a ring with n=<n>, J=1, gamma=0, Bz=1.3
    When I find the level crossings along J in closed form
    Then the critical values are "<critical>" within 0.002

  Scenario: Bisection agrees with the closed form along J
    Given a ring with n=6, J=1, gamma=0, Bz=1.3
    When I find the level crossings along J by bisection from 0.1 to 3.0
    Then the crossings agree with the closed form within 1e-6
"""

# @mark.user_defined_types
# ------------------------------------------------------------------------
# USER-DEFINED TYPES:
# ------------------------------------------------------------------------
from behave import register_type
from parse_type import TypeBuilder

# -- AXIS NAMES: as written in the feature files.
parse_axis_name = TypeBuilder.make_enum({"J": "j", "Bz": "bz", "gamma": "gamma"})
register_type(AxisName=parse_axis_name)


# @mark.steps
# ----------------------------------------------------------------------------
# STEPS:
# ----------------------------------------------------------------------------
from behave import when, then
from hamcrest import (assert_that, close_to, empty, equal_to,
                      greater_than_or_equal_to, has_length, less_than,
                      less_than_or_equal_to)
import numpy as np

from testutil import assert_values_close, attempt
from xyring.eigensolver import ground_state
from xyring.observables import partial_trace
from xyring.sweeps import (CrossingReport, find_crossings_bisection,
                           find_crossings_closed_form, gamma_family,
                           level_diagram, max_adjacent_jump, parameter_grid,
                           sweep)

CHANGE_TOL = 1e-9


def jump_positions(records, field, threshold):
    """Midpoints between consecutive non-degenerate records whose ``field``
    differs by more than ``threshold``."""
    records = [record for record in records if not record.degenerate]
    positions = []
    for before, after in zip(records, records[1:]):
        if abs(getattr(after, field) - getattr(before, field)) > threshold:
            positions.append(0.5 * (before.axis_value + after.axis_value))
    return positions


# -- CROSSINGS:
@when('I find the level crossings along {axis:AxisName} in closed form')
def step_when_closed_form(context, axis):
    context.report = find_crossings_closed_form(context.params, axis)


@when('I find the level crossings along {axis:AxisName} in closed form from {lower:g} to {upper:g}')
def step_when_closed_form_range(context, axis, lower, upper):
    context.report = find_crossings_closed_form(context.params, axis,
                                                lower=lower, upper=upper)


@when('I try to find the level crossings along {axis:AxisName} in closed form')
def step_when_try_closed_form(context, axis):
    context.report = attempt(context, find_crossings_closed_form,
                             context.params, axis)


@when('I find the level crossings along {axis:AxisName} by bisection from {start:g} to {stop:g}')
def step_when_bisection(context, axis, start, stop):
    context.range = (start, stop)
    context.report = find_crossings_bisection(context.params, axis,
                                              start, stop)


@then('the critical values are "{values:FloatList}" within {tol:g}')
def step_then_critical_values_are(context, values, tol):
    assert_values_close(context.report.critical_values, values, tol)


@then('there are no critical values')
def step_then_no_critical_values(context):
    assert_that(context.report.critical_values, empty())


@then('the ground sectors are "{sectors}"')
def step_then_ground_sectors_are(context, sectors):
    expected = [text.strip() for text in sectors.split(",")]
    actual = [sector.label for sector in context.report.sector_sequence]
    assert_that(actual, equal_to(expected))


@then('the critical values are {factor:g} times those at Bz={bz:g} within {tol:g}')
def step_then_critical_values_scale(context, factor, bz, tol):
    reference = find_crossings_closed_form(context.params.replace(bz=bz), "j")
    expected = [factor * value for value in reference.critical_values]
    assert_values_close(context.report.critical_values, expected, tol)


@then('the crossings agree with the closed form within {tol:g}')
def step_then_bisection_agrees(context, tol):
    report = context.report
    start, stop = context.range
    exact = find_crossings_closed_form(context.params, report.swept_parameter,
                                       lower=start, upper=stop)
    assert_values_close(report.critical_values, exact.critical_values, tol)
    assert_that(report.sector_sequence, equal_to(exact.sector_sequence))


@then('there are {count:d} critical values')
def step_then_critical_value_count(context, count):
    assert_that(context.report.critical_values, has_length(count))


@then('consecutive ground sectors differ by one reversed spin')
def step_then_sectors_step_by_one(context):
    sectors = context.report.sector_sequence
    for before, after in zip(sectors, sectors[1:]):
        assert_that(abs(after.k - before.k), equal_to(1))


@then('the crossing method is "{method}"')
def step_then_crossing_method(context, method):
    assert_that(context.report.method, equal_to(method))
    assert_that(method, equal_to(CrossingReport.BISECTION))


# -- SWEEPS:
@when('I sweep {axis:AxisName} from {start:g} to {stop:g} in steps of {step:g}')
def step_when_sweep(context, axis, start, stop, step):
    context.records = sweep(context.params, axis, start, stop, step)


@when('I try to sweep {axis:AxisName} from {start:g} to {stop:g} in steps of {step:g}')
def step_when_try_sweep(context, axis, start, stop, step):
    context.records = attempt(context, sweep, context.params, axis,
                              start, stop, step)


@when('I sweep Bz from {start:g} to {stop:g} in steps of {step:g} for gamma "{gammas:FloatList}"')
def step_when_sweep_gamma_family(context, start, stop, step, gammas):
    context.family = gamma_family(context.params, gammas, start, stop, step)


@then('the sweep has {count:d} records in ascending order of {axis:AxisName}')
def step_then_sweep_records(context, count, axis):
    records = context.records
    assert_that(records, has_length(count))
    values = [record.axis_value for record in records]
    assert np.all(np.diff(values) > 0.0)
    for record in records:
        assert_that(record.axis, equal_to(axis))
        assert_that(getattr(record.params, axis), equal_to(record.axis_value))


@then('c12 is constant except for jumps near "{values:FloatList}"')
def step_then_c12_piecewise_constant(context, values):
    step = context.records[1].axis_value - context.records[0].axis_value
    positions = jump_positions(context.records, "c12", CHANGE_TOL)
    assert_values_close(positions, values, step)


@then('the reduced density matrix of sites {i:d} and {j:d} is physical at every record')
def step_then_records_have_physical_rho(context, i, j):
    for record in context.records:
        rho = partial_trace(ground_state(record.params), (i, j))
        assert_that(rho.trace, close_to(1.0, 1e-12))
        assert_that(float(np.max(np.abs(rho.rho - rho.rho.T))),
                    less_than_or_equal_to(1e-14))
        assert_that(rho.min_eigenvalue, greater_than_or_equal_to(-1e-12))


@then('the largest adjacent jump of {field} is below {limit:g}')
def step_then_largest_jump_below(context, field, limit):
    assert_that(max_adjacent_jump(context.records, field), less_than(limit))


@then('the number of c12 jumps above {threshold:g} is')
def step_then_number_of_jumps(context, threshold):
    assert context.table, "REQUIRE: table"
    for row in context.table:
        records = context.family[float(row["gamma"])]
        jumps = jump_positions(records, "c12", threshold)
        assert_that(jumps, has_length(int(row["jumps"])))


@then('sweeping {axis:AxisName} from {start:g} to {stop:g} in steps of {step:g} with {threads:d} threads gives the same records as with 1 thread')
def step_then_parallel_sweep_identical(context, axis, start, stop, step, threads):
    serial = sweep(context.params, axis, start, stop, step, threads=1)
    parallel = sweep(context.params, axis, start, stop, step, threads=threads)
    assert_that(parallel, has_length(len(serial)))
    for one, other in zip(serial, parallel):
        assert_that(other.axis_value, equal_to(one.axis_value))
        assert_that(other.sector, equal_to(one.sector))
        assert_that(other.ground_energy, close_to(one.ground_energy, 1e-12))
        assert_that(other.c12, close_to(one.c12, 1e-12))
        assert_that(other.con, close_to(one.con, 1e-12))


@then('the grid from {start:g} to {stop:g} in steps of {step:g} is "{values:FloatList}"')
def step_then_grid_is(context, start, stop, step, values):
    assert_values_close(parameter_grid(start, stop, step), values, 1e-12)


@then('the grid from {start:g} to {stop:g} in steps of {step:g} has {count:d} points')
def step_then_grid_has_points(context, start, stop, step, count):
    grid = parameter_grid(start, stop, step)
    assert_that(grid, has_length(count))
    assert_that(float(grid[0]), equal_to(start))
    assert_that(float(grid[-1]), equal_to(stop))


# -- LEVEL DIAGRAM:
@when('I tabulate the sector levels for Bz from {start:g} to {stop:g} in steps of {step:g}')
def step_when_level_diagram(context, start, stop, step):
    context.diagram = level_diagram(context.params, start, stop, step)


@when('I try to tabulate the sector levels for Bz from {start:g} to {stop:g} in steps of {step:g}')
def step_when_try_level_diagram(context, start, stop, step):
    context.diagram = attempt(context, level_diagram, context.params,
                              start, stop, step)


@then('the level diagram has {curves:d} curves and {rows:d} rows')
def step_then_level_diagram_shape(context, curves, rows):
    assert_that(context.diagram.energies.shape, equal_to((rows, curves)))
    assert_that(context.diagram.sectors, has_length(curves))


@then('every curve is a straight line within {tol:g}')
def step_then_curves_are_straight(context, tol):
    assert_that(context.diagram.max_affine_residual(),
                less_than_or_equal_to(tol))


@then('the lower envelope switches at "{values:FloatList}" within {tol:g}')
def step_then_envelope_switches(context, values, tol):
    crossings = context.diagram.envelope_crossings()
    assert_values_close([crossing.critical_value for crossing in crossings],
                        values, tol)


@then('the lowest curve at Bz={bz:g} belongs to sector "{sector:Sector}"')
def step_then_lowest_curve_at(context, bz, sector):
    diagram = context.diagram
    index = int(np.argmin(np.abs(diagram.fields - bz)))
    assert_that(diagram.ground_sectors()[index], equal_to(sector))


@then('the fitted slopes are "{values:FloatList}"')
def step_then_fitted_slopes(context, values):
    slopes = [line.slope for line in context.diagram.fitted_lines()]
    assert_values_close(slopes, values, 1e-10)


@then('every curve vanishes at Bz=0')
def step_then_curves_vanish_at_zero(context):
    for line in context.diagram.fitted_lines():
        assert_that(line.intercept, close_to(0.0, 1e-10))
