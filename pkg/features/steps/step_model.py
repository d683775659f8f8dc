# -*- coding: UTF-8 -*-
"""
Steps shared by all features: the model under test and expected failures.

  Scenario:
    Given a ring with n=6, J=1, gamma=0, Bz=1.0
    ...

  Scenario:
    When I try to set up a ring with n=6, Jx=1, Jy=-1, Bz=0
    Then it fails with InvalidParameter
"""

# @mark.steps
# ----------------------------------------------------------------------------
# STEPS:
# ----------------------------------------------------------------------------
from behave import given, when, then
from hamcrest import assert_that, close_to, instance_of, is_not, none

from testutil import attempt
from xyring import errors
from xyring.hamiltonian import ModelParams


@given('a ring with n={n:d}, J={j:g}, gamma={gamma:g}, Bz={bz:g}')
def step_given_a_ring(context, n, j, gamma, bz):
    context.params = ModelParams(n, j, gamma, bz)


@given('a ring with n={n:d}, Jx={jx:g}, Jy={jy:g}, Bz={bz:g}')
def step_given_a_ring_with_couplings(context, n, jx, jy, bz):
    context.params = ModelParams.from_couplings(n, jx, jy, bz)


@when('I try to set up a ring with n={n:d}, J={j:g}, gamma={gamma:g}, Bz={bz:g}')
def step_when_try_ring(context, n, j, gamma, bz):
    context.params = attempt(context, ModelParams, n, j, gamma, bz)


@when('I try to set up a ring with n={n:d}, Jx={jx:g}, Jy={jy:g}, Bz={bz:g}')
def step_when_try_ring_with_couplings(context, n, jx, jy, bz):
    context.params = attempt(context, ModelParams.from_couplings, n, jx, jy, bz)


@then('the ring has J={j:g} and gamma={gamma:g}')
def step_then_ring_has(context, j, gamma):
    assert_that(context.params.j, close_to(j, 1e-12))
    assert_that(context.params.gamma, close_to(gamma, 1e-12))


@then('it fails with {error:ErrorName}')
def step_then_it_fails_with(context, error):
    assert_that(context.error, is_not(none()), "no error was raised")
    assert_that(context.error, instance_of(getattr(errors, error)))
