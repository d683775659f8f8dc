# -*- coding: UTF-8 -*-
"""
Feature: Pair correlation and concurrence

  Scenario: A single excitation spread over the ring
    Given a single excitation on 6 sites with alternating signs
    When I trace out all sites but 1 and 2
    Then the reduced density matrix is:
      | basis | 00       | 01        | 10        | 11 |
      | 00    | 0.666667 | 0         | 0         | 0  |
      ...
     And the correlation is -0.333333
     And the concurrence is 0.333333
"""

# @mark.test_support
# ----------------------------------------------------------------------------
# TWO-SITE STATES:
# ----------------------------------------------------------------------------
import math

import numpy as np

from xyring.observables import ReducedDensityMatrix

ROOT_HALF = math.sqrt(0.5)
PURE_PAIR_STATES = {
    "up-up":   [1.0, 0.0, 0.0, 0.0],
    "singlet": [0.0, ROOT_HALF, -ROOT_HALF, 0.0],
    "triplet": [0.0, ROOT_HALF, ROOT_HALF, 0.0],
    "bell":    [ROOT_HALF, 0.0, 0.0, ROOT_HALF],
}


def pair_state(name):
    if name == "maximal mixed":
        return ReducedDensityMatrix(np.eye(4) / 4.0)
    return ReducedDensityMatrix.from_pure(PURE_PAIR_STATES[name])


def werner_state(p):
    singlet = pair_state("singlet").rho
    return ReducedDensityMatrix(p * singlet + (1.0 - p) * np.eye(4) / 4.0)


def random_unit_vector(rng, size):
    vector = rng.standard_normal(size)
    return vector / np.linalg.norm(vector)


# @mark.steps
# ----------------------------------------------------------------------------
# STEPS:
# ----------------------------------------------------------------------------
from behave import given, when, then
from hamcrest import (assert_that, close_to, contains_exactly, equal_to,
                      greater_than_or_equal_to, less_than_or_equal_to)

from testutil import (assert_matrix_close, attempt, random_generator,
                      table_matrix)
from xyring.basis import Sector, parse_bitstring, site_mask
from xyring.eigensolver import GroundState, ground_state
from xyring.hamiltonian import ModelParams
from xyring.observables import (SIGMA_YY, bond_observables, concurrence,
                                correlation, pair_observables, partial_trace,
                                pure_concurrence)

OBSERVABLE_TOL = 1e-6
SIGMA_XX = np.fliplr(np.eye(4))


def make_state(n, vector):
    vector = np.asarray(vector, dtype=float)
    vector = vector / np.linalg.norm(vector)
    return GroundState(ModelParams(n, 1.0), 0.0, Sector.full(), vector)


@given('the {n:d}-site state "{terms}"')
def step_given_superposition(context, n, terms):
    vector = np.zeros(2 ** n)
    for term in terms.split("+"):
        state, width = parse_bitstring(term)
        assert_that(width, equal_to(n))
        vector[state] += 1.0
    context.state = make_state(n, vector)


@given('a single excitation on {n:d} sites with alternating signs')
def step_given_single_excitation(context, n):
    vector = np.zeros(2 ** n)
    for site in range(1, n + 1):
        vector[site_mask(site, n)] = (-1.0) ** site
    context.state = make_state(n, vector)


@given('the two-site state "{name}"')
def step_given_pair_state(context, name):
    context.rho = pair_state(name)


@given('the Werner state with singlet weight {p:g}')
def step_given_werner_state(context, p):
    context.rho = werner_state(p)


@given('the two-site density matrix')
def step_given_density_matrix(context):
    assert context.table, "REQUIRE: table"
    context.rho = ReducedDensityMatrix(table_matrix(context.table))


@when('I trace out all sites but {i:d} and {j:d}')
def step_when_partial_trace(context, i, j):
    context.rho = partial_trace(context.state, (i, j))


@when('I try to trace out all sites but {i:d} and {j:d}')
def step_when_try_partial_trace(context, i, j):
    context.rho = attempt(context, partial_trace, context.state, (i, j))


@when('I try to compute the concurrence')
def step_when_try_concurrence(context):
    attempt(context, concurrence, context.rho)


@then('the reduced density matrix is')
def step_then_rho_is(context):
    assert context.table, "REQUIRE: table"
    assert_matrix_close(context.rho.rho, table_matrix(context.table),
                        OBSERVABLE_TOL)


@then('the correlation is {value:g} within {tol:g}')
def step_then_correlation_within(context, value, tol):
    assert_that(correlation(context.rho), close_to(value, tol))


@then('the concurrence is {value:g} within {tol:g}')
def step_then_concurrence_within(context, value, tol):
    assert_that(concurrence(context.rho), close_to(value, tol))


@then('the correlation is {value:g}')
def step_then_correlation_is(context, value):
    assert_that(correlation(context.rho), close_to(value, OBSERVABLE_TOL))


@then('the concurrence is {value:g}')
def step_then_concurrence_is(context, value):
    assert_that(concurrence(context.rho), close_to(value, OBSERVABLE_TOL))


@then('the pure-state concurrence of "{amplitudes:FloatList}" is {value:g}')
def step_then_pure_concurrence(context, amplitudes, value):
    assert_that(pure_concurrence(*amplitudes), close_to(value, 1e-10))


@when('I try the pure-state concurrence of "{amplitudes:FloatList}"')
def step_when_try_pure_concurrence(context, amplitudes):
    attempt(context, pure_concurrence, *amplitudes)


@then('the pure-state concurrence agrees with the density-matrix route for {count:d} random states')
def step_then_pure_concurrence_agrees(context, count):
    rng = random_generator()
    for _ in range(count):
        amplitudes = random_unit_vector(rng, 4)
        rho = ReducedDensityMatrix.from_pure(amplitudes)
        assert_that(concurrence(rho),
                    close_to(pure_concurrence(*amplitudes), 1e-10))


@then('every bond has a physical reduced density matrix')
def step_then_bonds_are_physical(context):
    n = context.state.n
    for site in range(1, n + 1):
        rho = partial_trace(context.state, sorted((site, site % n + 1)))
        assert_that(rho.trace, close_to(1.0, 1e-12))
        assert_matrix_close(rho.rho, rho.rho.T, 1e-14)
        assert_that(rho.min_eigenvalue, greater_than_or_equal_to(-1e-12))
        c = correlation(rho)
        assert_that(c, greater_than_or_equal_to(-3.0 - 1e-12))
        assert_that(c, less_than_or_equal_to(1.0 + 1e-12))
        con = concurrence(rho)
        assert_that(con, greater_than_or_equal_to(0.0))
        assert_that(con, less_than_or_equal_to(1.0))


@then('the bond expectation values add up to the ground-state energy')
def step_then_bond_energies_add_up(context):
    state = context.state
    params = state.params
    n = state.n
    coupling = params.jx * SIGMA_XX + params.jy * SIGMA_YY
    energy = 0.0
    probabilities = state.vector ** 2
    states = np.arange(2 ** n)
    for site in range(1, n + 1):
        rho = partial_trace(state, sorted((site, site % n + 1)))
        energy += float(np.sum(rho.rho * coupling))
        spin_down = (states & site_mask(site, n)) != 0
        energy += params.bz * float(np.sum(probabilities * (1 - 2 * spin_down)))
    assert_that(energy, close_to(state.energy, 1e-9))


@then('the bonds are "{bonds}"')
def step_then_bonds_are(context, bonds):
    context.bonds = bond_observables(context.state)
    actual = ["(%d,%d)" % sites for sites, _, _ in context.bonds]
    expected = [text.strip() for text in bonds.replace("),", ");").split(";")]
    assert_that(actual, contains_exactly(*expected))


@then('all bonds have the same correlation and concurrence')
def step_then_bonds_are_equal(context):
    _, c0, con0 = context.bonds[0]
    for _, c, con in context.bonds[1:]:
        assert_that(c, close_to(c0, 1e-10))
        assert_that(con, close_to(con0, 1e-10))


@then('the spin-flipped matrix is')
def step_then_spin_flipped_is(context):
    assert context.table, "REQUIRE: table"
    assert_matrix_close(context.rho.spin_flipped().rho_tilde,
                        table_matrix(context.table), 1e-12)


@then('the pair observables of sites {i:d} and {j:d} are unchanged when Bz is reversed')
def step_then_field_reversal_keeps_observables(context, i, j):
    params = context.params
    _, c, con = pair_observables(ground_state(params), (i, j))
    _, c_reversed, con_reversed = pair_observables(
        ground_state(params.replace(bz=-params.bz)), (i, j))
    assert_that(c_reversed, close_to(c, 1e-10))
    assert_that(con_reversed, close_to(con, 1e-10))
