# -*- coding: UTF-8 -*-
"""
Two-site observables of a ground state.

* :func:`partial_trace`: reduced density matrix rho_ij of a site pair.
* :func:`correlation`:   C_ij = Tr(rho_ij (sx sx + sy sy + sz sz)).
* :func:`concurrence`:   Wootters concurrence max(l1 - l2 - l3 - l4, 0).
* :func:`pure_concurrence`: 2 |ad - bc| for a pure two-qubit state.

The pair basis is ``{|00>, |01>, |10>, |11>}`` with the first kept site as
the more significant bit. Ground states are real, so ``rho* = rho``.
"""

from __future__ import absolute_import
import logging

import numpy as np

from .errors import BadSites, NotNormalized, NumericalFailure

log = logging.getLogger(__name__)

PAIR_BASIS = ("00", "01", "10", "11")
TRACE_TOL = 1e-10
CLAMP_LIMIT = -1e-8
RANK_TOL = 1e-14

# -- sigma.sigma in the pair basis.
SPIN_DOT_SPIN = np.array([
    [1.0,  0.0,  0.0, 0.0],
    [0.0, -1.0,  2.0, 0.0],
    [0.0,  2.0, -1.0, 0.0],
    [0.0,  0.0,  0.0, 1.0],
])
# -- sigma_y (x) sigma_y is real.
SIGMA_YY = np.array([
    [ 0.0, 0.0, 0.0, -1.0],
    [ 0.0, 0.0, 1.0,  0.0],
    [ 0.0, 1.0, 0.0,  0.0],
    [-1.0, 0.0, 0.0,  0.0],
])


# -----------------------------------------------------------------------------
# DENSITY MATRICES:
# -----------------------------------------------------------------------------
class ReducedDensityMatrix(object):
    """4x4 real symmetric density matrix of the site pair ``sites``."""
    __slots__ = ("rho", "sites")

    def __init__(self, rho, sites=(1, 2)):
        rho = np.array(rho, dtype=float)
        if rho.shape != (4, 4):
            raise NumericalFailure("REQUIRE: 4x4 density matrix (but was: %s)"
                                   % (rho.shape,))
        rho.setflags(write=False)
        self.rho = rho
        self.sites = tuple(sites)

    @classmethod
    def from_pure(cls, amplitudes, sites=(1, 2)):
        """Density matrix |psi><psi| of a pure two-qubit state (a, b, c, d)."""
        psi = np.asarray(amplitudes, dtype=float)
        return cls(np.outer(psi, psi), sites)

    @property
    def trace(self):
        return float(np.trace(self.rho))

    @property
    def min_eigenvalue(self):
        return float(np.linalg.eigvalsh(self.rho)[0])

    def spin_flipped(self):
        """Return the spin-flipped partner (sy x sy) rho* (sy x sy)."""
        return SpinFlippedState(SIGMA_YY @ self.rho @ SIGMA_YY)

    def rows(self):
        """Rows of a CSV dump: header, then one row per pair basis state."""
        yield ["basis"] + list(PAIR_BASIS)
        for label, row in zip(PAIR_BASIS, self.rho):
            yield [label] + [float(value) for value in row]


class SpinFlippedState(object):
    """The matrix rho~ entering the concurrence."""
    __slots__ = ("rho_tilde",)

    def __init__(self, rho_tilde):
        rho_tilde = np.array(rho_tilde, dtype=float)
        rho_tilde.setflags(write=False)
        self.rho_tilde = rho_tilde


def _require_sites(sites, n):
    try:
        i, j = (int(site) for site in sites)
    except (TypeError, ValueError):
        raise BadSites("REQUIRE: site pair (i, j) (but was: %r)" % (sites,))
    if not (1 <= i < j <= n):
        raise BadSites("REQUIRE: 1 <= i < j <= %d (but was: %r)" % (n, (i, j)))
    return i, j


def partial_trace(state, keep=(1, 2)):
    """Reduced density matrix of the kept site pair.

    Traces |psi><psi| over the 2^(N-2) configurations of all other sites.

    :param state:   GroundState (normalized, real).
    :param keep:    Site pair (i, j), 1 <= i < j <= N.
    :raises BadSites: if the pair is invalid.
    """
    n = state.n
    i, j = _require_sites(keep, n)
    # -- C-ORDER RESHAPE: axis 0 is site 1 (most significant bit).
    tensor = state.vector.reshape((2,) * n)
    tensor = np.moveaxis(tensor, (i - 1, j - 1), (0, 1))
    pair_by_environment = tensor.reshape(4, -1)
    rho = pair_by_environment @ pair_by_environment.T
    return ReducedDensityMatrix(rho, (i, j))


def correlation(rho12):
    """Spatial correlation <sigma_i . sigma_j>, in [-3, 1] for physical rho."""
    return float(np.sum(rho12.rho * SPIN_DOT_SPIN))


def _clamped(eigenvalues, what):
    if eigenvalues.min() < CLAMP_LIMIT:
        raise NumericalFailure("NEGATIVE EIGENVALUE in %s: %.3g" %
                               (what, eigenvalues.min()))
    return np.clip(eigenvalues, 0.0, None)


def concurrence(rho12):
    """Wootters concurrence of a two-qubit density matrix.

    Uses the symmetric form sqrt(rho) rho~ sqrt(rho), whose eigenvalues equal
    those of rho rho~. With rho~ = Y rho Y (Y = sy x sy) that form is A A^T
    for A = sqrt(rho) Y sqrt(rho), so the lambdas are the singular values
    of A. Eigenvalues of rho below RANK_TOL (relative) count as zero.

    :raises NumericalFailure: if rho has an eigenvalue below -1e-8
        (rho is not a density matrix), is not finite, or LAPACK fails.
    """
    rho = rho12.rho
    if not np.all(np.isfinite(rho)):
        raise NumericalFailure("NON-FINITE DENSITY MATRIX: sites=%r" %
                               (rho12.sites,))
    try:
        weights, vectors = np.linalg.eigh(rho)
        weights = _clamped(weights, "rho")
        weights[weights <= RANK_TOL * weights.max()] = 0.0
        root = (vectors * np.sqrt(weights)) @ vectors.T
        lambdas = np.linalg.svd(root @ SIGMA_YY @ root, compute_uv=False)
    except np.linalg.LinAlgError as e:
        raise NumericalFailure("CONCURRENCE FAILED: sites=%r (%s)" %
                               (rho12.sites, e))
    value = lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]
    return float(min(max(value, 0.0), 1.0))


def pure_concurrence(a, b, c, d, tol=TRACE_TOL):
    """Concurrence 2|ad - bc| of a|00> + b|01> + c|10> + d|11>.

    :raises NotNormalized: if |a|^2 + |b|^2 + |c|^2 + |d|^2 deviates from 1.
    """
    norm = a * a + b * b + c * c + d * d
    if abs(norm - 1.0) > tol:
        raise NotNormalized("REQUIRE: normalized amplitudes (but was: norm=%r)"
                            % norm)
    return 2.0 * abs(a * d - b * c)


# -----------------------------------------------------------------------------
# CONVENIENCE:
# -----------------------------------------------------------------------------
def pair_observables(state, sites=(1, 2)):
    """Return ``(rho, c, con)`` for one site pair."""
    rho = partial_trace(state, sites)
    return rho, correlation(rho), concurrence(rho)


def bond_observables(state):
    """Correlation and concurrence of every ring bond (i, i+1 mod N).

    :return: list of ``((i, j), c, con)``; the wrap-around bond is (1, N).
    """
    n = state.n
    results = []
    for site in range(1, n + 1):
        sites = tuple(sorted((site, site % n + 1)))
        _, c, con = pair_observables(state, sites)
        results.append((sites, c, con))
    return results
