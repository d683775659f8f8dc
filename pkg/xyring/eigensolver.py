# -*- coding: UTF-8 -*-
"""
Spectra of Hamiltonian blocks and the deterministic ground state.

Dense blocks are diagonalized with LAPACK ``dsyev`` (Householder
tridiagonalization followed by implicit-shift QL/QR), through
:func:`scipy.linalg.eigh` with ``driver="ev"``. No random start vectors are
involved, so repeated runs on the same input give identical output.

When only the lowest levels are needed (ground states, sector ground
energies) ``dsyevr`` computes just those (``subset_by_index``); the
Householder reduction stays O(d^3) but the eigenvector stage does not.

SIGN CONVENTION:
  Every eigenvector is scaled so that its component of largest magnitude is
  positive; among components that tie for the largest magnitude the one of
  lowest basis index wins.
"""

from __future__ import absolute_import
from collections import OrderedDict
import logging

import numpy as np
import scipy.linalg
import scipy.sparse.linalg

from .basis import Sector, bitstring
from .errors import ConvergenceFailure, NumericalFailure
from .hamiltonian import (applicable_sectors, build_hamiltonian,
                          hamiltonian_operator)

log = logging.getLogger(__name__)

DEGENERACY_TOL = 1e-9
SIGN_TIE_TOL = 1e-12
AMPLITUDE_CUTOFF = 1e-12


# -----------------------------------------------------------------------------
# CLASS: SectorSpectrum
# -----------------------------------------------------------------------------
class SectorSpectrum(object):
    """Eigensystem of one Hamiltonian block (all levels or the lowest ones).

    :attr eigenvalues:  Ascending energies.
    :attr eigenvectors: Matrix whose column i belongs to ``eigenvalues[i]``.
    """
    __slots__ = ("sector", "basis", "eigenvalues", "eigenvectors",
                 "ground_degenerate")

    def __init__(self, basis, eigenvalues, eigenvectors,
                 degeneracy_tol=DEGENERACY_TOL):
        eigenvalues.setflags(write=False)
        eigenvectors.setflags(write=False)
        self.sector = basis.sector
        self.basis = basis
        self.eigenvalues = eigenvalues
        self.eigenvectors = eigenvectors
        self.ground_degenerate = bool(
            len(eigenvalues) > 1 and
            eigenvalues[1] - eigenvalues[0] <= degeneracy_tol)

    @property
    def ground_energy(self):
        return float(self.eigenvalues[0])

    @property
    def ground_vector(self):
        return self.eigenvectors[:, 0]

    def __len__(self):
        return len(self.eigenvalues)


# -----------------------------------------------------------------------------
# CLASS: GroundState
# -----------------------------------------------------------------------------
class GroundState(object):
    """Normalized real ground state, expressed in the full 2^N basis.

    Amplitudes outside the winning sector are exactly zero.
    """
    __slots__ = ("params", "energy", "sector", "vector", "degenerate", "gap")

    def __init__(self, params, energy, sector, vector, degenerate=False,
                 gap=None):
        vector = np.asarray(vector)
        if np.iscomplexobj(vector):
            raise NumericalFailure("REQUIRE: real amplitudes")
        if vector.shape != (2 ** params.n,):
            raise NumericalFailure("REQUIRE: %d amplitudes (but was: %s)" %
                                   (2 ** params.n, vector.shape))
        vector = np.array(vector, dtype=float)
        vector.setflags(write=False)
        self.params = params
        self.energy = float(energy)
        self.sector = sector
        self.vector = vector
        self.degenerate = bool(degenerate)
        self.gap = gap

    @property
    def n(self):
        return self.params.n

    def amplitude(self, state):
        return float(self.vector[int(state)])

    def amplitudes(self, cutoff=AMPLITUDE_CUTOFF):
        """Return ``[(state, amplitude), ...]`` with ``|amplitude| >= cutoff``."""
        states = np.flatnonzero(np.abs(self.vector) >= cutoff)
        return [(int(state), float(self.vector[state])) for state in states]

    def bitstring_amplitudes(self, cutoff=AMPLITUDE_CUTOFF):
        return [(bitstring(state, self.n), amplitude)
                for state, amplitude in self.amplitudes(cutoff)]

    def magnitudes(self, cutoff=AMPLITUDE_CUTOFF):
        """Sorted amplitude magnitudes (descending)."""
        values = np.abs(self.vector)
        return sorted(values[values >= cutoff], reverse=True)


# -----------------------------------------------------------------------------
# DIAGONALIZATION:
# -----------------------------------------------------------------------------
def fix_signs(vectors):
    """Apply the sign convention to every column of ``vectors`` (a copy)."""
    vectors = np.array(vectors, dtype=float)
    if vectors.ndim == 1:
        return fix_signs(vectors[:, np.newaxis])[:, 0]
    magnitudes = np.abs(vectors)
    for column in range(vectors.shape[1]):
        top = magnitudes[:, column].max()
        leading = np.flatnonzero(magnitudes[:, column] >= top - SIGN_TIE_TOL)[0]
        if vectors[leading, column] < 0.0:
            vectors[:, column] = -vectors[:, column]
    return vectors


def diagonalize(h, degeneracy_tol=DEGENERACY_TOL, levels=None):
    """Orthonormal eigensystem of a dense Hamiltonian block.

    :param h:       HamiltonianMatrix (real symmetric, finite).
    :param levels:  Number of lowest levels to compute (None: all).
    :return: SectorSpectrum with ascending eigenvalues and sign-fixed vectors.
    :raises ConvergenceFailure: if LAPACK does not converge.
    """
    entries = h.entries
    if not np.all(np.isfinite(entries)):
        raise NumericalFailure("NON-FINITE MATRIX: dimension=%d %r" %
                               (h.dimension, h.params))
    try:
        if levels is None or levels >= h.dimension:
            eigenvalues, eigenvectors = scipy.linalg.eigh(entries, driver="ev")
        else:
            eigenvalues, eigenvectors = scipy.linalg.eigh(
                entries, driver="evr", subset_by_index=[0, levels - 1])
    except (scipy.linalg.LinAlgError, ValueError) as e:
        raise ConvergenceFailure("EIGENSOLVER FAILED: dimension=%d sector=%s "
                                 "%r (%s)" % (h.dimension, h.sector,
                                              h.params, e))
    log.debug("diagonalize: sector=%s dimension=%d ground=%.12g",
              h.sector, h.dimension, eigenvalues[0])
    return SectorSpectrum(h.basis, eigenvalues, fix_signs(eigenvectors),
                          degeneracy_tol=degeneracy_tol)


def solve_sectors(params, degeneracy_tol=DEGENERACY_TOL, levels=None):
    """Spectra of every applicable block, keyed by sector in sector order.

    Magnetization sectors for gamma = 0, parity sectors otherwise.
    With ``levels`` only that many lowest levels per block are computed.
    """
    spectra = OrderedDict()
    for sector in applicable_sectors(params):
        h = build_hamiltonian(params, sector)
        spectra[sector] = diagonalize(h, degeneracy_tol=degeneracy_tol,
                                      levels=levels)
    return spectra


def full_spectrum(params, degeneracy_tol=DEGENERACY_TOL):
    """Spectrum of the unblocked 2^N Hamiltonian (n <= 12)."""
    h = build_hamiltonian(params, Sector.full())
    return diagonalize(h, degeneracy_tol=degeneracy_tol)


def sector_ground_energies(params):
    """Lowest eigenvalue of every applicable block.

    :return: OrderedDict sector -> energy.
    """
    return OrderedDict((sector, spectrum.ground_energy)
                       for sector, spectrum in
                       solve_sectors(params, levels=1).items())


def ground_state_from_spectra(params, spectra, degeneracy_tol=DEGENERACY_TOL):
    """Select the global ground state among precomputed sector spectra."""
    lowest = min(spectrum.ground_energy for spectrum in spectra.values())
    winner = min(sector for sector, spectrum in spectra.items()
                 if spectrum.ground_energy <= lowest + degeneracy_tol)
    levels = np.sort(np.concatenate([spectrum.eigenvalues[:2]
                                     for spectrum in spectra.values()]))
    gap = float(levels[1] - levels[0]) if len(levels) > 1 else None
    degenerate = gap is not None and gap <= degeneracy_tol

    spectrum = spectra[winner]
    vector = np.zeros(2 ** params.n)
    vector[spectrum.basis.states] = spectrum.ground_vector
    if degenerate:
        log.debug("ground_state: degenerate (gap=%.3g) at %r, using %s",
                  gap, params, winner)
    return GroundState(params, lowest, winner, vector,
                       degenerate=degenerate, gap=gap)


def ground_state(params, degeneracy_tol=DEGENERACY_TOL):
    """Globally lowest state over all applicable sectors.

    At a ground-state degeneracy (global gap <= degeneracy_tol) the state of
    the lower sector label is returned and flagged ``degenerate``.
    """
    spectra = solve_sectors(params, degeneracy_tol=degeneracy_tol, levels=2)
    return ground_state_from_spectra(params, spectra,
                                     degeneracy_tol=degeneracy_tol)


# -----------------------------------------------------------------------------
# KRYLOV CROSS-CHECK:
# -----------------------------------------------------------------------------
def lanczos_ground_energy(params, sector, tol=1e-12, maxiter=None):
    """Lowest eigenvalue of a block from the matrix-free operator.

    Uses ARPACK's implicitly restarted Lanczos (:func:`scipy.sparse.linalg.eigsh`)
    with a fixed, non-symmetric start vector.
    """
    dimension, matvec = hamiltonian_operator(params, sector)
    if dimension <= 2:
        return diagonalize(build_hamiltonian(params, sector)).ground_energy
    operator = scipy.sparse.linalg.LinearOperator(
        (dimension, dimension), matvec=matvec, dtype=float)
    start = 1.0 / np.arange(1, dimension + 1)
    try:
        eigenvalues = scipy.sparse.linalg.eigsh(
            operator, k=1, which="SA", v0=start, tol=tol, maxiter=maxiter,
            return_eigenvectors=False)
    except scipy.sparse.linalg.ArpackNoConvergence as e:
        raise ConvergenceFailure("LANCZOS FAILED: dimension=%d sector=%s %r "
                                 "(%s)" % (dimension, sector, params, e))
    return float(eigenvalues[0])


def rayleigh_quotient(params, sector, vector):
    """Energy expectation <v|H|v>/<v|v> computed matrix-free."""
    _, matvec = hamiltonian_operator(params, sector)
    vector = np.asarray(vector, dtype=float)
    norm = float(np.dot(vector, vector))
    if norm == 0.0:
        raise NumericalFailure("REQUIRE: non-zero vector")
    return float(np.dot(vector, matvec(vector))) / norm
