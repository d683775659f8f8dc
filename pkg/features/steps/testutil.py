# -*- coding: UTF-8 -*-
"""
Test utility support: step parameter types and numeric assertions.

Step modules import this module, which registers the parameter types
before their step patterns are compiled::

    {sector:Sector}         m=3, even, odd, full
    {values:FloatList}      0.650, 0.888, 2.426
    {error:ErrorName}       InvalidSize, SectorMismatch, ...
    {state:BasisState}      0110, 111111
"""

import numpy as np
import parse
from behave import register_type
from hamcrest import assert_that, close_to, equal_to, has_length
from parse_type import TypeBuilder

from xyring import errors
from xyring.basis import Sector, parse_bitstring

SEED = 20130601


# @mark.user_defined_types
# ------------------------------------------------------------------------
# USER-DEFINED TYPES:
# ------------------------------------------------------------------------
@parse.with_pattern(r"m=\d+|even|odd|full")
def parse_sector(text):
    return Sector.from_string(text)


@parse.with_pattern(r"-?\d+(?:\.\d*)?(?:[eE][-+]?\d+)?(?:\s*,\s*-?\d+(?:\.\d*)?(?:[eE][-+]?\d+)?)*")
def parse_float_list(text):
    return [float(part) for part in text.split(",")]


@parse.with_pattern(r"[01]+")
def parse_basis_state(text):
    state, _ = parse_bitstring(text)
    return state


ERROR_NAMES = sorted(name for name in dir(errors)
                     if isinstance(getattr(errors, name), type) and
                     issubclass(getattr(errors, name), errors.XYRingError))
parse_error_name = TypeBuilder.make_choice(ERROR_NAMES)

register_type(Sector=parse_sector, FloatList=parse_float_list,
              BasisState=parse_basis_state, ErrorName=parse_error_name)


# @mark.test_support
# ----------------------------------------------------------------------------
# TEST SUPPORT:
# ----------------------------------------------------------------------------
def random_generator(seed=SEED):
    return np.random.default_rng(seed)


def attempt(context, function, *args, **kwargs):
    """Call ``function``; store a raised XYRingError in ``context.error``."""
    context.error = None
    try:
        return function(*args, **kwargs)
    except errors.XYRingError as e:
        context.error = e
        return None


def assert_values_close(actual, expected, tolerance):
    actual = list(actual)
    assert_that(actual, has_length(len(expected)),
                "values: %r (expected: %r)" % (actual, expected))
    for value, wanted in zip(actual, expected):
        assert_that(value, close_to(wanted, tolerance))


def assert_matrix_close(actual, expected, tolerance):
    actual = np.asarray(actual, dtype=float)
    expected = np.asarray(expected, dtype=float)
    assert_that(actual.shape, equal_to(expected.shape))
    deviation = float(np.max(np.abs(actual - expected)))
    assert_that(deviation, close_to(0.0, tolerance),
                "matrix:\n%s\nexpected:\n%s" % (actual, expected))


def table_matrix(table):
    """Numeric matrix of a table whose first column labels the rows."""
    headings = table.headings[1:]
    return np.array([[float(row[heading]) for heading in headings]
                     for row in table])
