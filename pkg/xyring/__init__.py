# -*- coding: UTF-8 -*-
"""
Exact diagonalization of the spin-1/2 XY ring in a transverse field.

The Hamiltonian of N spins on a periodic ring is blocked by magnetization
(gamma = 0) or parity (gamma != 0) and diagonalized densely. On top of the
ground state the package computes the nearest-neighbor spin correlation and
the concurrence, sweeps them over J, Bz or gamma, and locates the ground
state level crossings that make them jump.

EXAMPLE::

    from xyring import ModelParams, ground_state, pair_observables

    state = ground_state(ModelParams(6, j=1.0, gamma=0.0, bz=1.0))
    rho, c12, con = pair_observables(state, (1, 2))
"""

from __future__ import absolute_import

__version__ = "1.0.0"

from .basis import (Sector, SectorBasis, bitstring, enumerate_sector,
                    global_spin_flip, hamming_weight, parse_bitstring,
                    spin_flip_permutation)
from .eigensolver import (GroundState, SectorSpectrum, diagonalize,
                          full_spectrum, ground_state, lanczos_ground_energy,
                          sector_ground_energies, solve_sectors)
from .errors import NumericalError, ParameterError, XYRingError
from .hamiltonian import (ModelParams, apply_hamiltonian, build_hamiltonian,
                          hamiltonian_operator)
from .observables import (bond_observables, concurrence, correlation,
                          pair_observables, partial_trace, pure_concurrence)
from .sweeps import (CrossingReport, find_crossings_bisection,
                     find_crossings_closed_form, gamma_family, level_diagram,
                     sweep)
