"""Exact ground-state vectors of the XX ring in the spin-z product basis.

Basis convention, shared with the dense oracle: basis index b has bit j set
exactly when the spin at site j points up, i.e. when a fermion occupies
site j.  The all-down state is index 0.

In the n-fermion sector the ground state assigns to each occupied-site set
{j_1 < ... < j_n} an amplitude proportional to

    (-1)^(j_1 + ... + j_n) * det[ exp(2*pi*i (k_a + alpha) j_b / N) ]_{a,b}

with {k_a} the minimum-energy momenta of the sector.  The determinant is
the antisymmetrized plane-wave sum over fermion placements; the sign factor
collects the spin-z strings that order the fermions along the ring.  The
vector is normalized numerically after assembly, so only the ray is
meaningful; no global-phase convention is imposed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .analytic import ModeSet, ground_sector, occupied_modes
from .errors import SizeLimit

#: Dense 2^N amplitude arrays are capped here (256 KiB of complex doubles).
MAX_STATE_SITES = 14


@dataclass(frozen=True)
class StateVector:
    """2^sites complex amplitudes over the spin-z product basis."""

    sites: int
    amplitudes: np.ndarray

    @property
    def dimension(self) -> int:
        return 1 << self.sites


def slater_amplitude(n_sites: int, modes: ModeSet, positions: Sequence[int]) -> complex:
    """Unnormalized ground-state amplitude for fermions at the given sites.

    ``positions`` must be sorted, distinct and inside [0, N), with exactly
    ``modes.n`` entries.  Computed as an n x n determinant (LU under the
    hood), not by permutation enumeration.
    """
    pos = list(positions)
    if len(pos) != modes.n:
        raise ValueError(
            f"expected {modes.n} positions for a {modes.n}-fermion amplitude, got {len(pos)}"
        )
    if any(not 0 <= j < n_sites for j in pos):
        raise ValueError(f"positions must lie in [0, {n_sites}): {pos}")
    if any(a >= b for a, b in zip(pos, pos[1:])):
        raise ValueError(f"positions must be strictly increasing: {pos}")
    if modes.n == 0:
        return complex(1.0)
    kv = np.asarray(modes.modes, dtype=float) + modes.alpha
    jv = np.asarray(pos, dtype=float)
    matrix = np.exp((2j * np.pi / n_sites) * np.outer(kv, jv))
    sign = -1.0 if int(sum(pos)) % 2 else 1.0
    return complex(sign * np.linalg.det(matrix))


def ground_state(n_sites: int, g: float) -> StateVector:
    """Normalized ground state of the N-site ring at field g.

    Fully polarized below g = -1 (index 0) and above g = +1 (index
    2^N - 1); in between, a superposition over all C(N, n) placements of
    the n = ground_sector(N, g) fermions.  Raises DegenerateAtCrossing on a
    level crossing and SizeLimit for N > MAX_STATE_SITES.
    """
    if n_sites > MAX_STATE_SITES:
        raise SizeLimit(
            f"dense state vectors are limited to {MAX_STATE_SITES} sites, got {n_sites}"
        )
    n = ground_sector(n_sites, g)
    dim = 1 << n_sites
    amplitudes = np.zeros(dim, dtype=complex)
    if n == 0:
        amplitudes[0] = 1.0
        return StateVector(sites=n_sites, amplitudes=amplitudes)
    if n == n_sites:
        amplitudes[dim - 1] = 1.0
        return StateVector(sites=n_sites, amplitudes=amplitudes)

    mode_set = occupied_modes(n_sites, n)
    kv = np.asarray(mode_set.modes, dtype=float) + mode_set.alpha

    # Ascending bitmask order == colexicographic order of position sets;
    # fixed ordering keeps the output bit-identical however work is split.
    masks = [m for m in range(dim) if m.bit_count() == n]
    positions = np.array(
        [[j for j in range(n_sites) if (m >> j) & 1] for m in masks], dtype=float
    )
    matrices = np.exp(
        (2j * np.pi / n_sites) * kv[None, :, None] * positions[:, None, :]
    )
    dets = np.linalg.det(matrices)
    signs = 1.0 - 2.0 * (positions.sum(axis=1).astype(int) & 1)
    amplitudes[masks] = signs * dets
    amplitudes /= np.linalg.norm(amplitudes)
    return StateVector(sites=n_sites, amplitudes=amplitudes)
