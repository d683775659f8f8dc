# -*- coding: UTF-8 -*-
"""
Feature: Product basis and symmetry sectors

  Scenario Outline: Sector dimensions
    When I enumerate sector "<sector>" for <n> sites
    Then the sector basis has <dimension> states
     And the sector basis is strictly increasing
     And every state of the sector basis belongs to the sector

  Scenario: The spin flip maps a magnetization sector onto its partner
    When I enumerate sector "m=2" for 6 sites
    Then the spin flip maps the sector basis onto sector "m=4" one-to-one
"""

# @mark.steps
# ----------------------------------------------------------------------------
# STEPS:
# ----------------------------------------------------------------------------
from behave import when, then
from hamcrest import (assert_that, calling, contains_exactly, equal_to,
                      raises)
import numpy as np

from testutil import attempt
from xyring.basis import (Sector, bitstring, enumerate_sector,
                          global_spin_flip, hamming_weights,
                          magnetization_sectors, parity_sectors,
                          parse_bitstring, spin_flip_permutation)


@when('I enumerate sector "{sector:Sector}" for {n:d} sites')
def step_when_enumerate_sector(context, sector, n):
    context.basis = enumerate_sector(n, sector)


@when('I try to enumerate sector "{sector:Sector}" for {n:d} sites')
def step_when_try_enumerate_sector(context, sector, n):
    context.basis = attempt(context, enumerate_sector, n, sector)


@then('the sector basis has {dimension:d} states')
def step_then_basis_has_states(context, dimension):
    assert_that(context.basis.dimension, equal_to(dimension))
    assert_that(context.basis.sector.dimension(context.basis.n),
                equal_to(dimension))


@then('the sector basis is strictly increasing')
def step_then_basis_is_increasing(context):
    assert np.all(np.diff(context.basis.states) > 0)


@then('every state of the sector basis belongs to the sector')
def step_then_states_belong_to_sector(context):
    basis = context.basis
    weights = hamming_weights(basis.states)
    if basis.sector.is_magnetization:
        assert np.all(weights == basis.sector.k)
    elif basis.sector.is_parity:
        expected = 0 if basis.sector.value == "even" else 1
        assert np.all(weights % 2 == expected)
    assert np.all(basis.states < 2 ** basis.n)


@then('the sector basis is "{bitstrings}"')
def step_then_basis_is(context, bitstrings):
    expected = [text.strip() for text in bitstrings.split(",")]
    assert_that(context.basis.bitstrings(), contains_exactly(*expected))


@then('the position of every state is its index in the basis')
def step_then_index_of_inverts(context):
    for position, state in enumerate(context.basis):
        assert_that(context.basis.index_of(state), equal_to(position))


@then('the position of "{state:BasisState}" is {position:d}')
def step_then_position_of(context, state, position):
    assert_that(context.basis.index_of(state), equal_to(position))


@then('looking up "{state:BasisState}" in the sector basis fails')
def step_then_lookup_fails(context, state):
    assert_that(calling(context.basis.index_of).with_args(state),
                raises(KeyError))


def assert_partition(n, sectors):
    states = np.concatenate([enumerate_sector(n, sector).states
                             for sector in sectors])
    assert_that(sorted(states.tolist()), equal_to(list(range(2 ** n))))


@then('the magnetization sectors for {n:d} sites contain every state once')
def step_then_magnetization_partition(context, n):
    assert_partition(n, magnetization_sectors(n))


@then('the parity sectors for {n:d} sites contain every state once')
def step_then_parity_partition(context, n):
    assert_partition(n, parity_sectors())


@then('the spin flip of "{state}" is "{flipped}"')
def step_then_spin_flip_is(context, state, flipped):
    value, n = parse_bitstring(state)
    assert_that(bitstring(global_spin_flip(value, n), n), equal_to(flipped))


@then('the spin flip maps the sector basis onto sector "{sector:Sector}" one-to-one')
def step_then_spin_flip_maps_onto(context, sector):
    basis = context.basis
    target, positions = spin_flip_permutation(basis)
    assert_that(target.sector, equal_to(sector))
    assert_that(sorted(positions.tolist()),
                equal_to(list(range(target.dimension))))
    for state, position in zip(basis, positions):
        assert_that(int(target.states[position]),
                    equal_to(global_spin_flip(state, basis.n)))


@then('the sector label "{text}" reads back as "{label}"')
def step_then_sector_label(context, text, label):
    assert_that(Sector.from_string(text).label, equal_to(label))


@then('the sectors "{labels}" sort as "{ordered}"')
def step_then_sectors_sort_as(context, labels, ordered):
    sectors = [Sector.from_string(text) for text in labels.split(",")]
    expected = [text.strip() for text in ordered.split(",")]
    assert_that([sector.label for sector in sorted(sectors)],
                contains_exactly(*expected))
