# -*- coding: UTF-8 -*-
"""
Hamiltonian of the spin-1/2 XY ring in a transverse field.

With periodic boundary condition (site N+1 = site 1)::

    H = 2J sum_i [ (s-_i s+_{i+1} + s+_i s-_{i+1})
                   + gamma (s+_i s+_{i+1} + s-_i s-_{i+1}) ]
        + Bz sum_i sz_i

which equals ``sum_i (Jx sx_i sx_{i+1} + Jy sy_i sy_{i+1}) + Bz sum_i sz_i``
for ``Jx = (1+gamma) J`` and ``Jy = (1-gamma) J``.

In the product basis every off-diagonal element is either ``2J``
(nearest-neighbor exchange 01 <-> 10) or ``2J*gamma`` (nearest-neighbor
pair flip 00 <-> 11). The diagonal is ``Bz * (N - 2 * weight)``.
"""

from __future__ import absolute_import
import logging
import math

import numpy as np

from .basis import (enumerate_sector, hamming_weights, magnetization_sectors,
                    parity_sectors, require_site_count, site_mask)
from .errors import (DimensionMismatch, InvalidParameter, InvalidSector,
                     SectorMismatch)

log = logging.getLogger(__name__)

# -- Dense full-space spectra are limited to this size (per-sector above).
MAX_FULL_SITES = 12
AXES = ("j", "bz", "gamma")


# -----------------------------------------------------------------------------
# CLASS: ModelParams
# -----------------------------------------------------------------------------
class ModelParams(object):
    """Parameter set (N, J, gamma, Bz) of the XY ring.

    Energies are in arbitrary units; gamma is dimensionless.
    """
    __slots__ = ("_n", "_j", "_gamma", "_bz")

    def __init__(self, n, j, gamma=0.0, bz=0.0):
        self._n = require_site_count(n)
        self._j = self._require_finite("j", j)
        self._gamma = self._require_finite("gamma", gamma)
        self._bz = self._require_finite("bz", bz)

    @staticmethod
    def _require_finite(name, value):
        try:
            value = float(value)
        except (TypeError, ValueError):
            raise InvalidParameter("REQUIRE: numeric %s (but was: %r)" %
                                   (name, value))
        if not math.isfinite(value):
            raise InvalidParameter("REQUIRE: finite %s (but was: %r)" %
                                   (name, value))
        return value

    @classmethod
    def from_couplings(cls, n, jx, jy, bz=0.0):
        """Build from the (Jx, Jy) parameterization.

        :raises InvalidParameter: if Jx = -Jy != 0 (gamma would be infinite).
        """
        jx = cls._require_finite("jx", jx)
        jy = cls._require_finite("jy", jy)
        j = 0.5 * (jx + jy)
        if j == 0.0:
            if jx != 0.0:
                raise InvalidParameter(
                    "UNSUPPORTED: jx=%r, jy=%r (jx + jy = 0 has no finite gamma)"
                    % (jx, jy))
            return cls(n, 0.0, 0.0, bz)
        return cls(n, j, (jx - jy) / (jx + jy), bz)

    @property
    def n(self):
        return self._n

    @property
    def j(self):
        return self._j

    @property
    def gamma(self):
        return self._gamma

    @property
    def bz(self):
        return self._bz

    @property
    def jx(self):
        return (1.0 + self._gamma) * self._j

    @property
    def jy(self):
        return (1.0 - self._gamma) * self._j

    @property
    def is_isotropic(self):
        return self._gamma == 0.0

    def replace(self, **changes):
        """Copy with some of ``n``, ``j``, ``gamma``, ``bz`` replaced."""
        values = self.as_dict()
        unknown = set(changes) - set(values)
        if unknown:
            raise InvalidParameter("UNKNOWN PARAMETERS: %s" %
                                   ", ".join(sorted(unknown)))
        values.update(changes)
        return ModelParams(**values)

    def with_axis(self, axis, value):
        """Copy with the swept parameter ``axis`` (j, bz, gamma) set."""
        return self.replace(**{require_axis(axis): value})

    def as_dict(self):
        return {"n": self._n, "j": self._j, "gamma": self._gamma,
                "bz": self._bz}

    def __eq__(self, other):
        if not isinstance(other, ModelParams):
            return NotImplemented
        return self.as_dict() == other.as_dict()

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self._n, self._j, self._gamma, self._bz))

    def __repr__(self):
        return "ModelParams(n=%d, j=%r, gamma=%r, bz=%r)" % (
            self._n, self._j, self._gamma, self._bz)


def require_axis(axis):
    axis = str(axis).strip().lower()
    if axis not in AXES:
        raise InvalidParameter("REQUIRE: axis in %s (but was: %r)" %
                               (", ".join(AXES), axis))
    return axis


def applicable_sectors(params):
    """Blocks of H: magnetization sectors for gamma=0, parity otherwise."""
    if params.is_isotropic:
        return magnetization_sectors(params.n)
    return parity_sectors()


# -----------------------------------------------------------------------------
# CLASS: HamiltonianMatrix
# -----------------------------------------------------------------------------
class HamiltonianMatrix(object):
    """Dense real symmetric block of H over one sector basis."""
    __slots__ = ("_params", "_basis", "_entries")

    def __init__(self, params, basis, entries):
        entries.setflags(write=False)
        self._params = params
        self._basis = basis
        self._entries = entries

    @property
    def params(self):
        return self._params

    @property
    def basis(self):
        return self._basis

    @property
    def sector(self):
        return self._basis.sector

    @property
    def entries(self):
        return self._entries

    @property
    def dimension(self):
        return self._basis.dimension

    def nonzeros(self):
        """Yield ``(row, col, value)`` for every nonzero entry, row-major."""
        rows, cols = np.nonzero(self._entries)
        for row, col in zip(rows, cols):
            yield int(row), int(col), float(self._entries[row, col])


# -----------------------------------------------------------------------------
# MATRIX ELEMENTS:
# -----------------------------------------------------------------------------
def _require_sector(params, sector):
    if sector.is_magnetization and not params.is_isotropic:
        raise SectorMismatch(
            "REQUIRE: gamma = 0 for sector %s (but was: gamma=%r)" %
            (sector, params.gamma))
    if sector.is_full and params.n > MAX_FULL_SITES:
        raise InvalidSector("UNSUPPORTED: full sector for n > %d (use %s)" %
                            (MAX_FULL_SITES, "magnetization or parity blocks"))


def _diagonal(params, basis):
    return params.bz * (params.n - 2 * hamming_weights(basis.states))


def _bond_transitions(params, basis):
    """Yield ``(sources, targets, values)`` index arrays for every bond.

    ``sources`` and ``targets`` are positions in ``basis``; each transition
    contributes ``H[target, source] = value``.
    """
    n = params.n
    hopping = 2.0 * params.j
    pairing = 2.0 * params.j * params.gamma
    states = basis.states
    for site in range(1, n + 1):
        mask = site_mask(site, n) | site_mask(site % n + 1, n)
        exchanged = states ^ mask
        # -- ONE BIT SET (01, 10): exchange; BOTH/NONE SET (11, 00): pair flip.
        single = hamming_weights(states & mask) == 1
        values = np.where(single, hopping, pairing)
        targets, found = basis.lookup(exchanged)
        keep = found & (values != 0.0)
        sources = np.flatnonzero(keep)
        yield sources, targets[keep], values[keep]


def build_hamiltonian(params, sector):
    """Assemble the dense Hamiltonian block of ``sector``.

    :param params:  ModelParams.
    :param sector:  Sector label; Magnetization(k) requires gamma = 0.
    :return: HamiltonianMatrix (exactly symmetric by construction).
    :raises SectorMismatch: for a magnetization sector with gamma != 0.
    """
    _require_sector(params, sector)
    basis = enumerate_sector(params.n, sector)
    entries = np.diag(_diagonal(params, basis).astype(float))
    for sources, targets, values in _bond_transitions(params, basis):
        # -- EACH (target, source) PAIR IS REACHED BY EXACTLY ONE BOND (N >= 3).
        entries[targets, sources] += values
    log.debug("build_hamiltonian: %r sector=%s dimension=%d",
              params, sector, basis.dimension)
    return HamiltonianMatrix(params, basis, entries)


def hamiltonian_operator(params, sector):
    """Matrix-free form of a Hamiltonian block.

    :return: ``(dimension, matvec)``; the transition tables are computed once
        and shared by every ``matvec`` call.
    """
    _require_sector(params, sector)
    basis = enumerate_sector(params.n, sector)
    diagonal = _diagonal(params, basis)
    transitions = list(_bond_transitions(params, basis))

    def matvec(vector):
        vector = np.asarray(vector, dtype=float).ravel()
        if vector.shape != (basis.dimension,):
            raise DimensionMismatch(
                "REQUIRE: vector of length %d (but was: %s)" %
                (basis.dimension, vector.shape))
        result = diagonal * vector
        for sources, targets, values in transitions:
            np.add.at(result, targets, values * vector[sources])
        return result
    return basis.dimension, matvec


def apply_hamiltonian(params, sector, vector):
    """Matrix-free product ``H . vector`` on one sector.

    :raises DimensionMismatch: if the vector length is not the sector dimension.
    """
    vector = np.asarray(vector, dtype=float)
    if vector.ndim != 1:
        raise DimensionMismatch("REQUIRE: one-dimensional vector (but was: %s)"
                                % (vector.shape,))
    _, matvec = hamiltonian_operator(params, sector)
    return matvec(vector)


__all__ = [
    "AXES", "MAX_FULL_SITES", "ModelParams", "HamiltonianMatrix",
    "applicable_sectors", "apply_hamiltonian", "build_hamiltonian",
    "hamiltonian_operator", "require_axis",
]
