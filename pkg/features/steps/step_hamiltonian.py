# -*- coding: UTF-8 -*-
"""
Feature: Hamiltonian of the XY ring in a transverse field

  Scenario: The pair term couples the empty state to adjacent pairs
    Given a ring with n=4, J=1, gamma=0.5, Bz=0
    When I build the Hamiltonian of sector "full"
    Then the row of "0000" has the nonzero entries:
      | basis | value |
      | 0011  | 1.0   |
      ...

  Scenario: Matrix-free product on the empty state
    Given a ring with n=6, J=1, gamma=0, Bz=0.5
    When I apply the Hamiltonian of sector "full" to the basis state "000000"
    Then the product is 3.0 at "000000" and zero elsewhere
"""

# @mark.steps
# ----------------------------------------------------------------------------
# STEPS:
# ----------------------------------------------------------------------------
from behave import when, then
from hamcrest import assert_that, close_to, equal_to
import numpy as np

from testutil import (assert_matrix_close, attempt, random_generator,
                      table_matrix)
from xyring.basis import (bitstring, hamming_weights, magnetization_sectors,
                          parity_sectors, parse_bitstring,
                          spin_flip_permutation)
from xyring.hamiltonian import (applicable_sectors, apply_hamiltonian,
                                build_hamiltonian)


@when('I build the Hamiltonian of sector "{sector:Sector}"')
def step_when_build_hamiltonian(context, sector):
    context.hamiltonian = build_hamiltonian(context.params, sector)


@when('I try to build the Hamiltonian of sector "{sector:Sector}"')
def step_when_try_build_hamiltonian(context, sector):
    context.hamiltonian = attempt(context, build_hamiltonian,
                                  context.params, sector)


@then('the Hamiltonian block is')
def step_then_hamiltonian_block_is(context):
    assert context.table, "REQUIRE: table"
    assert_matrix_close(context.hamiltonian.entries,
                        table_matrix(context.table), 1e-12)


@then('the Hamiltonian block is diagonal')
def step_then_hamiltonian_is_diagonal(context):
    entries = context.hamiltonian.entries
    assert_that(np.count_nonzero(entries - np.diag(np.diag(entries))),
                equal_to(0))


@then('every diagonal entry is Bz*(n - 2k) of its basis state')
def step_then_diagonal_is_field_term(context):
    params = context.params
    states = context.hamiltonian.basis.states
    expected = params.bz * (params.n - 2 * hamming_weights(states))
    assert_matrix_close(np.diag(context.hamiltonian.entries), expected, 1e-12)


@then('the row of "{state}" has the nonzero entries')
def step_then_row_has_nonzeros(context, state):
    assert context.table, "REQUIRE: table"
    h = context.hamiltonian
    value, _ = parse_bitstring(state)
    row = h.basis.index_of(value)
    actual = dict((bitstring(h.basis.states[col], h.basis.n), entry)
                  for r, col, entry in h.nonzeros() if r == row)
    expected = dict((line["basis"], float(line["value"]))
                    for line in context.table)
    assert_that(sorted(actual), equal_to(sorted(expected)))
    for basis, entry in expected.items():
        assert_that(actual[basis], close_to(entry, 1e-12))


@then('the Hamiltonian block is exactly symmetric')
def step_then_hamiltonian_symmetric(context):
    entries = context.hamiltonian.entries
    assert entries.dtype == np.float64
    assert np.array_equal(entries, entries.T)


@then('the Hamiltonian block has dimension {dimension:d}')
def step_then_hamiltonian_dimension(context, dimension):
    assert_that(context.hamiltonian.dimension, equal_to(dimension))
    assert_that(context.hamiltonian.entries.shape,
                equal_to((dimension, dimension)))


@when('I apply the Hamiltonian of sector "{sector:Sector}" to the basis state "{state}"')
def step_when_apply_to_basis_state(context, sector, state):
    h = build_hamiltonian(context.params, sector)
    value, _ = parse_bitstring(state)
    vector = np.zeros(h.dimension)
    vector[h.basis.index_of(value)] = 1.0
    context.basis = h.basis
    context.product = apply_hamiltonian(context.params, sector, vector)


@when('I apply the Hamiltonian of sector "{sector:Sector}" to the zero vector')
def step_when_apply_to_zero_vector(context, sector):
    dimension = sector.dimension(context.params.n)
    context.product = apply_hamiltonian(context.params, sector,
                                        np.zeros(dimension))


@when('I try to apply the Hamiltonian of sector "{sector:Sector}" to a vector of length {length:d}')
def step_when_try_apply_wrong_length(context, sector, length):
    context.product = attempt(context, apply_hamiltonian, context.params,
                              sector, np.ones(length))


@then('the product is {value:g} at "{state}" and zero elsewhere')
def step_then_product_is_unit(context, value, state):
    position = context.basis.index_of(parse_bitstring(state)[0])
    expected = np.zeros(context.basis.dimension)
    expected[position] = value
    assert_matrix_close(context.product, expected, 1e-12)


@then('the product is the zero vector')
def step_then_product_is_zero(context):
    assert_that(np.count_nonzero(context.product), equal_to(0))


@then('the matrix-free product of sector "{sector:Sector}" matches the dense block for {count:d} random vectors')
def step_then_matrix_free_matches_dense(context, sector, count):
    h = build_hamiltonian(context.params, sector)
    rng = random_generator()
    for _ in range(count):
        vector = rng.standard_normal(h.dimension)
        assert_matrix_close(apply_hamiltonian(context.params, sector, vector),
                            h.entries @ vector, 1e-12)


# -- SYMMETRIES:
@then('scaling J and Bz by {factor:g} scales the block of sector "{sector:Sector}" by the same factor exactly')
def step_then_scaling_is_exact(context, factor, sector):
    params = context.params
    h = build_hamiltonian(params, sector)
    scaled = build_hamiltonian(params.replace(j=factor * params.j,
                                              bz=factor * params.bz), sector)
    # -- POWERS OF TWO: scaling commutes with rounding.
    assert np.array_equal(scaled.entries, factor * h.entries)


@then('the spin flip maps the block of sector "{sector:Sector}" onto the block of the reversed field')
def step_then_spin_flip_reverses_field(context, sector):
    params = context.params
    h = build_hamiltonian(params, sector)
    reversed_ = build_hamiltonian(params.replace(bz=-params.bz),
                                  sector.flipped(params.n))
    _, permutation = spin_flip_permutation(h.basis, reversed_.basis)
    assert_that(sorted(permutation), equal_to(list(range(h.dimension))))
    assert_matrix_close(reversed_.entries[np.ix_(permutation, permutation)],
                        h.entries, 1e-14)


@then('the Hamiltonian is blocked into the {kind} sectors')
def step_then_blocked_into(context, kind):
    expected = {
        "magnetization": magnetization_sectors(context.params.n),
        "parity": parity_sectors(),
    }[kind]
    assert_that(applicable_sectors(context.params), equal_to(expected))
