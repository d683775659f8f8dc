# -*- coding: UTF-8 -*-
"""
Feature: Sector spectra and the ground state

  Scenario: Ground state next to half filling
    Given a ring with n=6, J=1, gamma=0, Bz=1.0
    When I compute the ground state
    Then the ground-state energy is -8.928203
     And the ground state lies in sector "m=4"
     And the ground state has 15 nonzero amplitudes
     And the ground state has the amplitude magnitudes:
      | magnitude | count |
      | 0.33333   | 3     |
      ...
"""

# @mark.steps
# ----------------------------------------------------------------------------
# STEPS:
# ----------------------------------------------------------------------------
from behave import when, then
from hamcrest import (assert_that, close_to, equal_to, greater_than,
                      has_length, less_than_or_equal_to)
import numpy as np

from testutil import (assert_matrix_close, assert_values_close,
                      random_generator)
from xyring.basis import parse_bitstring
from xyring.eigensolver import (diagonalize, full_spectrum, ground_state,
                                lanczos_ground_energy, rayleigh_quotient,
                                sector_ground_energies, solve_sectors)
from xyring.hamiltonian import ModelParams, build_hamiltonian

ENERGY_TOL = 1e-6
MAGNITUDE_TOL = 1e-5


# -- DIAGONALIZATION:
@when('I diagonalize the Hamiltonian of sector "{sector:Sector}"')
def step_when_diagonalize(context, sector):
    context.hamiltonian = build_hamiltonian(context.params, sector)
    context.spectrum = diagonalize(context.hamiltonian)


@then('the eigenvalues are "{values:FloatList}"')
def step_then_eigenvalues_are(context, values):
    assert_values_close(context.spectrum.eigenvalues, values, 1e-12)


@then('the eigenvalues are the sorted diagonal of the block')
def step_then_eigenvalues_sorted_diagonal(context):
    expected = np.sort(np.diag(context.hamiltonian.entries))
    assert_values_close(context.spectrum.eigenvalues, expected, 1e-12)


@then('every eigenvector is a basis state with amplitude 1')
def step_then_eigenvectors_are_basis_states(context):
    vectors = context.spectrum.eigenvectors
    for column in vectors.T:
        assert_that(np.count_nonzero(np.abs(column) > 1e-12), equal_to(1))
        assert_that(float(column.max()), close_to(1.0, 1e-12))


@then('the eigenvalues are ascending')
def step_then_eigenvalues_ascending(context):
    assert np.all(np.diff(context.spectrum.eigenvalues) >= 0.0)


@then('the eigenvectors are orthonormal within {tol:g}')
def step_then_eigenvectors_orthonormal(context, tol):
    vectors = context.spectrum.eigenvectors
    assert_matrix_close(vectors.T @ vectors, np.eye(vectors.shape[1]), tol)


@then('the eigensystem reproduces the block within {tol:g}')
def step_then_eigensystem_reproduces_block(context, tol):
    spectrum = context.spectrum
    h = context.hamiltonian.entries
    residual = h @ spectrum.eigenvectors - \
        spectrum.eigenvectors * spectrum.eigenvalues
    assert_that(float(np.max(np.abs(residual))), less_than_or_equal_to(tol))


@then('every eigenvector has a positive leading component')
def step_then_positive_leading_component(context):
    for column in context.spectrum.eigenvectors.T:
        magnitudes = np.abs(column)
        leading = np.flatnonzero(magnitudes >= magnitudes.max() - 1e-12)[0]
        assert_that(float(column[leading]), greater_than(0.0))


@when('I diagonalize the lowest {levels:d} levels of sector "{sector:Sector}"')
def step_when_diagonalize_lowest(context, levels, sector):
    context.hamiltonian = build_hamiltonian(context.params, sector)
    context.spectrum = diagonalize(context.hamiltonian, levels=levels)


@then('the eigenvalues are the lowest {levels:d} of the complete block spectrum within {tol:g}')
def step_then_lowest_levels_match(context, levels, tol):
    complete = diagonalize(context.hamiltonian)
    assert_that(context.spectrum, has_length(levels))
    assert_values_close(context.spectrum.eigenvalues,
                        complete.eigenvalues[:levels], tol)

# -- GROUND STATE:
@when('I compute the ground state')
def step_when_compute_ground_state(context):
    context.state = ground_state(context.params)


@then('the ground-state energy is {energy:g}')
def step_then_ground_energy_is(context, energy):
    assert_that(context.state.energy, close_to(energy, ENERGY_TOL))


@then('the ground state lies in sector "{sector:Sector}"')
def step_then_ground_state_sector(context, sector):
    assert_that(context.state.sector, equal_to(sector))


@then('the ground state is the basis state "{state}" with amplitude 1')
def step_then_ground_state_is_basis_state(context, state):
    value, _ = parse_bitstring(state)
    amplitudes = context.state.amplitudes()
    assert_that(amplitudes, has_length(1))
    assert_that(amplitudes[0][0], equal_to(value))
    assert_that(amplitudes[0][1], close_to(1.0, 1e-12))


@then('the ground state is flagged degenerate')
def step_then_ground_state_degenerate(context):
    assert_that(context.state.degenerate, equal_to(True))


@then('the ground state is not flagged degenerate')
def step_then_ground_state_not_degenerate(context):
    assert_that(context.state.degenerate, equal_to(False))


@then('the ground state has {count:d} nonzero amplitudes')
def step_then_ground_state_term_count(context, count):
    assert_that(context.state.amplitudes(cutoff=1e-8), has_length(count))


@then('the ground state has the amplitude magnitudes')
def step_then_ground_state_magnitudes(context):
    assert context.table, "REQUIRE: table"
    magnitudes = np.array(context.state.magnitudes(cutoff=1e-8))
    total = 0
    for row in context.table:
        magnitude = float(row["magnitude"])
        count = int(row["count"])
        matching = np.count_nonzero(np.abs(magnitudes - magnitude) < MAGNITUDE_TOL)
        assert_that(matching, equal_to(count),
                    "count of magnitude %s in %r" % (magnitude, magnitudes))
        total += count
    assert_that(len(magnitudes), equal_to(total))


@then('neighbouring amplitudes of the ground state have opposite signs')
def step_then_alternating_signs(context):
    state = context.state
    amplitudes = dict(state.amplitudes(cutoff=1e-8))
    n = state.n
    # -- ONE SPIN REVERSED AGAINST ALL-0 (m=1) OR ALL-1 (m=n-1).
    reference = 0 if state.sector.k == 1 else (1 << n) - 1
    for site in range(n):
        here = amplitudes[reference ^ (1 << site)]
        there = amplitudes[reference ^ (1 << ((site + 1) % n))]
        assert_that(here * there, less_than_or_equal_to(0.0))


@then('the ground state is normalized')
def step_then_ground_state_normalized(context):
    vector = context.state.vector
    assert not np.iscomplexobj(vector)
    assert_that(float(np.dot(vector, vector)), close_to(1.0, 1e-12))


@then('the ground state vanishes outside its sector')
def step_then_ground_state_in_sector(context):
    state = context.state
    outside = ~state.sector.contains(np.arange(2 ** state.n))
    assert_that(np.count_nonzero(state.vector[outside]), equal_to(0))


@then('the ground-state energy equals the energy expectation of the ground state')
def step_then_energy_is_expectation(context):
    state = context.state
    h = build_hamiltonian(state.params, state.sector)
    vector = state.vector[h.basis.states]
    energy = rayleigh_quotient(state.params, state.sector, vector)
    assert_that(energy, close_to(state.energy, 1e-10))


@then('the ground-state energy is the lowest sector ground energy')
def step_then_energy_is_lowest(context):
    energies = sector_ground_energies(context.params)
    assert_that(context.state.energy, close_to(min(energies.values()), 1e-12))


@then('computing the ground state twice gives identical amplitudes')
def step_then_ground_state_deterministic(context):
    first = ground_state(context.params)
    second = ground_state(context.params)
    assert_that(first.sector, equal_to(second.sector))
    assert np.array_equal(first.vector, second.vector)


# -- SECTOR ENERGIES:
@then('the sector ground energies are "{values:FloatList}"')
def step_then_sector_energies_are(context, values):
    energies = sector_ground_energies(context.params)
    assert_values_close(energies.values(), values, ENERGY_TOL)


@then('every sector ground energy equals its zero-field value plus Bz*(n - 2k)')
def step_then_sector_energies_linear(context):
    params = context.params
    energies = sector_ground_energies(params)
    zero_field = sector_ground_energies(params.replace(bz=0.0))
    for sector, energy in energies.items():
        expected = zero_field[sector] + params.bz * (params.n - 2 * sector.k)
        assert_that(energy, close_to(expected, 1e-10))


@then('reversing the field maps every sector "m=k" onto "m=n-k"')
def step_then_field_reversal(context):
    params = context.params
    energies = sector_ground_energies(params)
    reversed_ = sector_ground_energies(params.replace(bz=-params.bz))
    for sector, energy in energies.items():
        assert_that(reversed_[sector.flipped(params.n)], close_to(energy, 1e-10))


@then('the sector spectra together equal the full spectrum within {tol:g}')
def step_then_blocks_equal_full(context, tol):
    spectra = solve_sectors(context.params)
    blocked = np.sort(np.concatenate([spectrum.eigenvalues
                                      for spectrum in spectra.values()]))
    assert_values_close(blocked, full_spectrum(context.params).eigenvalues, tol)


@then('the Lanczos ground energy of sector "{sector:Sector}" agrees with the dense solver within {tol:g}')
def step_then_lanczos_agrees(context, sector, tol):
    dense = diagonalize(build_hamiltonian(context.params, sector))
    energy = lanczos_ground_energy(context.params, sector)
    assert_that(energy, close_to(dense.ground_energy, tol))


@then('the sector spectra of {count:d} random {kind} rings with n={n:d} equal their full spectra within {tol:g}')
def step_then_random_blocks_equal_full(context, count, kind, n, tol):
    assert kind in ("isotropic", "anisotropic"), "UNKNOWN KIND: %s" % kind
    rng = random_generator()
    for _ in range(count):
        gamma = 0.0 if kind == "isotropic" else rng.uniform(-1.0, 1.0)
        params = ModelParams(n, rng.uniform(0.0, 3.0), gamma=gamma,
                             bz=rng.uniform(0.0, 3.0))
        spectra = solve_sectors(params)
        blocked = np.sort(np.concatenate([spectrum.eigenvalues
                                          for spectrum in spectra.values()]))
        assert_values_close(blocked, full_spectrum(params).eigenvalues, tol)


@then('the ground-state energy is the lowest level of the complete sector spectra')
def step_then_energy_is_lowest_complete(context):
    spectra = solve_sectors(context.params)
    lowest = min(spectrum.eigenvalues[0] for spectrum in spectra.values())
    assert_that(context.state.energy, close_to(lowest, 1e-10))


@then('scaling J and Bz by {factor:g} scales the sector spectra by the same factor within {tol:g}')
def step_then_spectra_scale(context, factor, tol):
    params = context.params
    scaled = params.replace(j=factor * params.j, bz=factor * params.bz)
    original = solve_sectors(params)
    for sector, spectrum in solve_sectors(scaled).items():
        assert_values_close(spectrum.eigenvalues,
                            factor * original[sector].eigenvalues, tol)
