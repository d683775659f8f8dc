# -*- coding: UTF-8 -*-
"""
Feature: Command-line tool

  @workdir
  Scenario: Critical couplings of the six-site ring
    When I run "xyring crossings --n 6 --gamma 0 --bz 1.30 --axis j --method closed-form -o crossings.csv"
    Then the command exits with status 0
     And the column "critical_value" of "crossings.csv" is "0.650, 0.888, 2.426" within 0.002

The command runs in-process inside the scenario's temporary directory;
standard output and standard error are collected as the command output.
"""

# @mark.test_support
# ----------------------------------------------------------------------------
# TEST SUPPORT:
# ----------------------------------------------------------------------------
import contextlib
import csv
import io
import json
import shlex

from xyring.cli import main


def read_text(context, filename):
    with io.open(context.workdir / filename, "r", encoding="utf-8") as stream:
        return stream.read()


def read_rows(context, filename):
    return list(csv.reader(io.StringIO(read_text(context, filename))))


def read_json(context, filename):
    return json.loads(read_text(context, filename))


def column_values(context, filename, column):
    rows = read_rows(context, filename)
    position = rows[0].index(column)
    return [row[position] for row in rows[1:]]


def split_list(text):
    return [part.strip() for part in text.split(",")]


# @mark.steps
# ----------------------------------------------------------------------------
# STEPS:
# ----------------------------------------------------------------------------
from behave import given, when, then
from hamcrest import (assert_that, close_to, contains_string, equal_to,
                      has_length)

from testutil import assert_values_close


@given('a file named "{filename}" with')
def step_given_file_with(context, filename):
    assert context.text is not None, "REQUIRE: text"
    with io.open(context.workdir / filename, "w", encoding="utf-8") as stream:
        stream.write(context.text)


@when('I run "{command}"')
def step_when_run(context, command):
    argv = shlex.split(command)
    assert_that(argv[0], equal_to("xyring"))
    stdout = io.StringIO()
    stderr = io.StringIO()
    with context.workdir, contextlib.redirect_stdout(stdout), \
            contextlib.redirect_stderr(stderr):
        context.exit_status = main(argv[1:])
    context.command_output = stdout.getvalue() + stderr.getvalue()


@then('the command exits with status {status:d}')
def step_then_exit_status(context, status):
    assert_that(context.exit_status, equal_to(status),
                "output:\n%s" % context.command_output)


@then('the command output contains "{text}"')
def step_then_output_contains_text(context, text):
    assert_that(context.command_output, contains_string(text))


@then('the command output contains')
def step_then_output_contains_block(context):
    assert context.text is not None, "REQUIRE: text"
    assert_that(context.command_output, contains_string(context.text))


@then('the file "{filename}" contains')
def step_then_file_contains(context, filename):
    assert context.text is not None, "REQUIRE: text"
    assert_that(read_text(context, filename), contains_string(context.text))


@then('the file "{filename}" is a ground-state document with energy {energy:g} in sector "{sector}"')
def step_then_ground_state_document(context, filename, energy, sector):
    document = read_json(context, filename)
    assert_that(document["energy"], close_to(energy, 1e-6))
    assert_that(document["sector"], equal_to(sector))


@then('the ground-state document "{filename}" has the amplitudes')
def step_then_document_amplitudes(context, filename):
    assert context.table, "REQUIRE: table"
    amplitudes = read_json(context, filename)["amplitudes"]
    assert_that(amplitudes, has_length(len(context.table.rows)))
    for entry, row in zip(amplitudes, context.table):
        assert_that(entry["basis"], equal_to(row["basis"]))
        assert_that(entry["amplitude"], close_to(float(row["amplitude"]), 1e-9))


@then('the ground-state document "{filename}" has the parameters "{assignments}"')
def step_then_document_parameters(context, filename, assignments):
    parameters = read_json(context, filename)["parameters"]
    for assignment in split_list(assignments):
        name, value = assignment.split("=")
        assert_that(parameters[name], close_to(float(value), 1e-9))


@then('the file "{filename}" has the columns "{columns}"')
def step_then_file_columns(context, filename, columns):
    assert_that(read_rows(context, filename)[0], equal_to(columns.split(",")))


@then('the file "{filename}" has {count:d} data rows')
def step_then_file_row_count(context, filename, count):
    assert_that(read_rows(context, filename)[1:], has_length(count))


@then('the column "{column}" of "{filename}" is "{values:FloatList}" within {tol:g}')
def step_then_numeric_column(context, column, filename, values, tol):
    actual = [float(value) for value in column_values(context, filename, column)]
    assert_values_close(actual, values, tol)


@then('the column "{column}" of "{filename}" is "{values}"')
def step_then_text_column(context, column, filename, values):
    assert_that(column_values(context, filename, column),
                equal_to(split_list(values)))


@then('the crossing document "{filename}" has the critical values "{values:FloatList}" within {tol:g}')
def step_then_crossing_document_values(context, filename, values, tol):
    document = read_json(context, filename)
    assert_values_close(document["critical_values"], values, tol)


@then('the crossing document "{filename}" has the sector sequence "{sectors}"')
def step_then_crossing_document_sectors(context, filename, sectors):
    document = read_json(context, filename)
    assert_that(document["sector_sequence"], equal_to(split_list(sectors)))


@then('the files "{first}" and "{second}" are identical')
def step_then_files_identical(context, first, second):
    with io.open(context.workdir / first, "rb") as stream:
        expected = stream.read()
    with io.open(context.workdir / second, "rb") as stream:
        actual = stream.read()
    assert_that(actual, equal_to(expected))
