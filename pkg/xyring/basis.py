# -*- coding: UTF-8 -*-
"""
Product basis of N spin-1/2 sites and its symmetry sectors.

BIT CONVENTION:
  A basis state is an N-bit unsigned integer. Site 1 is the most significant
  bit, so ``0b000111`` (N=6) is the ket ``|000111>``. Bit value 0 is the
  sigma_z = +1 eigenstate, bit value 1 the sigma_z = -1 eigenstate.

SECTORS:
  * ``Magnetization(k)``: all states with k one-bits (conserved for gamma=0).
  * ``Parity(even|odd)``: all states with an even/odd number of one-bits
    (conserved for any gamma).
  * ``Full``: the complete 2^N basis.
"""

from __future__ import absolute_import
import logging
from math import comb

import numpy as np

from .errors import InvalidSector, InvalidSize

log = logging.getLogger(__name__)

MIN_SITES = 3
MAX_SITES = 14


# -----------------------------------------------------------------------------
# BASIS STATES:
# -----------------------------------------------------------------------------
def require_site_count(n):
    """Check that ``n`` is a supported site count.

    :raises InvalidSize: if n is outside [MIN_SITES, MAX_SITES].
    """
    if isinstance(n, bool) or int(n) != n or not (MIN_SITES <= n <= MAX_SITES):
        raise InvalidSize("REQUIRE: %d <= n <= %d (but was: %r)" %
                          (MIN_SITES, MAX_SITES, n))
    return int(n)


def hamming_weight(state):
    """Number of sites with label 1."""
    return bin(int(state)).count("1")


def hamming_weights(states):
    """Vectorized :func:`hamming_weight` for an integer array."""
    states = np.asarray(states, dtype=np.int64)
    weights = np.zeros(states.shape, dtype=np.int64)
    remaining = states.copy()
    while np.any(remaining):
        weights += remaining & 1
        remaining >>= 1
    return weights


def global_spin_flip(state, n):
    """Complement every bit of ``state`` (an involution)."""
    return int(state) ^ ((1 << n) - 1)


def site_mask(site, n):
    """Bit mask of site ``site`` (1-based, site 1 = most significant bit)."""
    return 1 << (n - site)


def bitstring(state, n):
    """Fixed-width 0/1 text of a basis state, site 1 first."""
    return format(int(state), "0%db" % n)


def parse_bitstring(text):
    """Inverse of :func:`bitstring`: returns ``(state, n)``."""
    text = text.strip()
    if not text or set(text) - set("01"):
        raise ValueError("REQUIRE: bitstring of 0/1 (but was: %r)" % text)
    return int(text, 2), len(text)


# -----------------------------------------------------------------------------
# CLASS: Sector
# -----------------------------------------------------------------------------
class Sector(object):
    """Label of a symmetry block.

    Sectors are immutable, hashable and totally ordered: magnetization
    sectors by k, then even before odd parity, then the full space.
    """
    MAGNETIZATION = "magnetization"
    PARITY = "parity"
    FULL = "full"
    PARITIES = ("even", "odd")
    __slots__ = ("_kind", "_value")

    def __init__(self, kind, value=None):
        if kind == self.MAGNETIZATION:
            if isinstance(value, bool) or int(value) != value:
                raise InvalidSector("REQUIRE: integer k (but was: %r)" % value)
            value = int(value)
        elif kind == self.PARITY:
            if value not in self.PARITIES:
                raise InvalidSector("REQUIRE: parity in %s (but was: %r)" %
                                    (", ".join(self.PARITIES), value))
        elif kind == self.FULL:
            value = None
        else:
            raise InvalidSector("UNKNOWN SECTOR KIND: %r" % kind)
        self._kind = kind
        self._value = value

    @classmethod
    def magnetization(cls, k):
        return cls(cls.MAGNETIZATION, k)

    @classmethod
    def parity(cls, parity):
        return cls(cls.PARITY, parity)

    @classmethod
    def full(cls):
        return cls(cls.FULL)

    @classmethod
    def from_string(cls, text):
        """Parse a sector label as produced by :meth:`label`."""
        text = text.strip().lower()
        if text == cls.FULL:
            return cls.full()
        if text.startswith("m="):
            try:
                return cls.magnetization(int(text[2:]))
            except ValueError:
                pass
        if text in cls.PARITIES:
            return cls.parity(text)
        raise InvalidSector("UNKNOWN SECTOR: %r" % text)

    @property
    def kind(self):
        return self._kind

    @property
    def k(self):
        """Number of one-bits (magnetization sectors only)."""
        assert self._kind == self.MAGNETIZATION
        return self._value

    @property
    def value(self):
        return self._value

    @property
    def is_magnetization(self):
        return self._kind == self.MAGNETIZATION

    @property
    def is_parity(self):
        return self._kind == self.PARITY

    @property
    def is_full(self):
        return self._kind == self.FULL

    @property
    def label(self):
        if self._kind == self.MAGNETIZATION:
            return "m=%d" % self._value
        if self._kind == self.PARITY:
            return self._value
        return self.FULL

    def dimension(self, n):
        """Number of basis states in this sector for ``n`` sites."""
        if self._kind == self.MAGNETIZATION:
            return comb(n, self._value)
        if self._kind == self.PARITY:
            return 2 ** (n - 1)
        return 2 ** n

    def validate(self, n):
        """Check that the sector exists for ``n`` sites."""
        if self._kind == self.MAGNETIZATION and not (0 <= self._value <= n):
            raise InvalidSector("REQUIRE: 0 <= k <= %d (but was: %d)" %
                                (n, self._value))
        return self

    def contains(self, states):
        """Membership mask for an integer array of basis states."""
        states = np.asarray(states, dtype=np.int64)
        if self._kind == self.FULL:
            return np.ones(states.shape, dtype=bool)
        weights = hamming_weights(states)
        if self._kind == self.MAGNETIZATION:
            return weights == self._value
        return (weights % 2) == self.PARITIES.index(self._value)

    def flipped(self, n):
        """Sector that the global spin flip maps this sector onto."""
        if self._kind == self.MAGNETIZATION:
            return Sector.magnetization(n - self._value)
        if self._kind == self.PARITY and n % 2:
            return Sector.parity("odd" if self._value == "even" else "even")
        return self

    def sort_key(self):
        order = (self.MAGNETIZATION, self.PARITY, self.FULL).index(self._kind)
        if self._kind == self.MAGNETIZATION:
            return (order, self._value)
        if self._kind == self.PARITY:
            return (order, self.PARITIES.index(self._value))
        return (order, 0)

    def __eq__(self, other):
        if not isinstance(other, Sector):
            return NotImplemented
        return self._kind == other._kind and self._value == other._value

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __hash__(self):
        return hash((self._kind, self._value))

    def __str__(self):
        return self.label

    def __repr__(self):
        return "<Sector %s>" % self.label


# -----------------------------------------------------------------------------
# CLASS: SectorBasis
# -----------------------------------------------------------------------------
class SectorBasis(object):
    """Ordered basis states of one sector, with the inverse index map."""
    __slots__ = ("_n", "_sector", "_states")

    def __init__(self, n, sector, states):
        states = np.array(states, dtype=np.int64)
        states.setflags(write=False)
        self._n = n
        self._sector = sector
        self._states = states

    @property
    def n(self):
        return self._n

    @property
    def sector(self):
        return self._sector

    @property
    def states(self):
        """Read-only integer array, strictly increasing."""
        return self._states

    @property
    def dimension(self):
        return len(self._states)

    def __len__(self):
        return len(self._states)

    def __iter__(self):
        return iter(int(state) for state in self._states)

    def index_of(self, state):
        """Position of ``state`` in :attr:`states`.

        :raises KeyError: if the state is not a member of this sector.
        """
        position = int(np.searchsorted(self._states, state))
        if position < len(self._states) and self._states[position] == state:
            return position
        raise KeyError(bitstring(state, self._n))

    def lookup(self, states):
        """Vectorized :meth:`index_of`.

        :return: ``(positions, found)``; positions are only meaningful where
            ``found`` is true.
        """
        states = np.asarray(states, dtype=np.int64)
        positions = np.searchsorted(self._states, states)
        clipped = np.minimum(positions, len(self._states) - 1)
        found = self._states[clipped] == states
        return clipped, found

    def bitstrings(self):
        return [bitstring(state, self._n) for state in self._states]


def enumerate_sector(n, sector):
    """All basis states of ``sector`` for ``n`` sites, in ascending order.

    :param n:       Site count (3..14).
    :param sector:  Sector label.
    :return: SectorBasis whose length equals ``sector.dimension(n)``.
    :raises InvalidSize: if n is out of range.
    :raises InvalidSector: if the magnetization k is out of range.
    """
    n = require_site_count(n)
    sector.validate(n)
    everything = np.arange(2 ** n, dtype=np.int64)
    states = everything[sector.contains(everything)]
    assert len(states) == sector.dimension(n)
    log.debug("enumerate_sector: n=%d sector=%s dimension=%d",
              n, sector, len(states))
    return SectorBasis(n, sector, states)


def magnetization_sectors(n):
    return [Sector.magnetization(k) for k in range(n + 1)]


def parity_sectors():
    return [Sector.parity(parity) for parity in Sector.PARITIES]


def spin_flip_permutation(basis, target=None):
    """Index map of the global spin flip from ``basis`` into ``target``.

    :param basis:   Source SectorBasis.
    :param target:  Basis of the flipped sector (enumerated when omitted).
    :return: ``(target, permutation)`` with
        ``target.states[permutation[i]] == flip(basis.states[i])``.
    """
    n = basis.n
    if target is None:
        target = enumerate_sector(n, basis.sector.flipped(n))
    flipped = basis.states ^ ((1 << n) - 1)
    positions, found = target.lookup(flipped)
    if not np.all(found):
        raise InvalidSector("SPIN-FLIP: %s does not map onto %s" %
                            (basis.sector, target.sector))
    return target, positions
