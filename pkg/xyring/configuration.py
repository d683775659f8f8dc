# -*- coding: UTF-8 -*-
"""
Configuration file support and logging setup.

Defaults for the command-line tool are read from the ``[xyring]`` section
of the first configuration file found::

    # -- FILE: xyring.ini (or: .xyringrc, setup.cfg, tox.ini)
    [xyring]
    logging_level  = WARNING
    threads        = 4
    format         = csv
    coarse_step    = 0.01

Command-line options override configuration file values.
"""

from __future__ import absolute_import
import configparser
import logging
import os.path

from .errors import InvalidParameter
from .sweeps import COARSE_STEP, JUMP_THRESHOLD_C12, JUMP_THRESHOLD_CONCURRENCE

log = logging.getLogger(__name__)

SECTION = "xyring"
CONFIG_FILENAMES = ["xyring.ini", ".xyringrc", "setup.cfg", "tox.ini"]
LOGGING_FORMAT = "%(levelname)s:%(name)s: %(message)s"
FORMATS = ("csv", "json")


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise ValueError("must be >= 1")
    return value


def _positive_float(text):
    value = float(text)
    if not value > 0.0:
        raise ValueError("must be > 0")
    return value


def _logging_level(text):
    level = logging.getLevelName(text.strip().upper())
    if not isinstance(level, int):
        raise ValueError("unknown logging level")
    return level


def _output_format(text):
    text = text.strip().lower()
    if text not in FORMATS:
        raise ValueError("must be one of: %s" % ", ".join(FORMATS))
    return text


class Configuration(object):
    """Defaults for a command-line run."""
    defaults = {
        "logging_level": logging.WARNING,
        "logging_format": LOGGING_FORMAT,
        "threads": 1,
        "format": "csv",
        "coarse_step": COARSE_STEP,
        "jump_threshold_c12": JUMP_THRESHOLD_C12,
        "jump_threshold_concurrence": JUMP_THRESHOLD_CONCURRENCE,
    }
    converters = {
        "logging_level": _logging_level,
        "logging_format": str,
        "threads": _positive_int,
        "format": _output_format,
        "coarse_step": _positive_float,
        "jump_threshold_c12": _positive_float,
        "jump_threshold_concurrence": _positive_float,
    }

    def __init__(self, **kwargs):
        self.config_file = None
        for name, value in self.defaults.items():
            setattr(self, name, value)
        self.update(kwargs)

    def update(self, values):
        for name, value in values.items():
            if name not in self.defaults:
                raise InvalidParameter("UNKNOWN CONFIGURATION: %s" % name)
            setattr(self, name, value)
        return self

    @classmethod
    def load(cls, filename=None, workdir="."):
        """Read the first configuration file that has an ``[xyring]`` section.

        :param filename:  Explicit file (must exist), or None to search.
        :param workdir:   Directory searched for CONFIG_FILENAMES.
        :raises InvalidParameter: for an unreadable file or malformed value.
        """
        config = cls()
        if filename:
            if not os.path.isfile(filename):
                raise InvalidParameter("CONFIG FILE NOT FOUND: %s" % filename)
            candidates = [filename]
        else:
            candidates = [os.path.join(workdir, name) for name in CONFIG_FILENAMES]

        for candidate in candidates:
            if not os.path.isfile(candidate):
                continue
            parser = configparser.ConfigParser(interpolation=None)
            try:
                parser.read(candidate, encoding="utf-8")
            except configparser.Error as e:
                raise InvalidParameter("BAD CONFIG FILE %s: %s" % (candidate, e))
            if not parser.has_section(SECTION):
                continue
            config.read_section(parser[SECTION], candidate)
            break
        return config

    def read_section(self, section, filename):
        for name, text in section.items():
            converter = self.converters.get(name)
            if converter is None:
                log.debug("%s: ignoring unknown key %s", filename, name)
                continue
            try:
                setattr(self, name, converter(text))
            except ValueError as e:
                raise InvalidParameter("BAD VALUE %s=%r in %s (%s)" %
                                       (name, text, filename, e))
        self.config_file = filename
        log.debug("configuration: read %s", filename)

    def setup_logging(self, level=None, format=None):
        """Configure the root logger (once per process)."""
        setup_logging(level or self.logging_level,
                      format or self.logging_format)


def setup_logging(level=logging.WARNING, format=LOGGING_FORMAT):
    logging.basicConfig(level=level, format=format)
    logging.getLogger().setLevel(level)
