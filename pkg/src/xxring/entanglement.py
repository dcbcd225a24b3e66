"""Bipartite purity statistics of the ground state over balanced cuts.

For a pure state split into subsystems A and B, the purity of the reduced
state, Tr rho_A^2, equals the squared Frobenius norm of M M+ where M is
the amplitude array reshaped to 2^|A| x 2^|B|.  It ranges from 2^-|A| for
a maximally mixed reduction up to 1 for a product state, so smaller purity
means a more entangled cut.  Aggregating the purity over every balanced
bipartition gives a two-number fingerprint of multipartite entanglement:
the mean mu (amount) and the standard deviation sigma (how evenly it is
shared).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .analytic import _crossing_fields, ground_sector
from .errors import DimensionMismatch, SizeLimit
from .statevector import StateVector, ground_state

MAX_BIPARTITION_SITES = 14
MAX_STATS_SITES = 12

#: Grid points closer than this to a crossing get nudged during sweeps.
SWEEP_CROSSING_RADIUS = 1e-9
SWEEP_NUDGE = 1e-6


@dataclass(frozen=True)
class Bipartition:
    """A split of the ring: set bits of ``mask`` form subsystem A.

    Only balanced splits are allowed: A holds floor(N/2) or ceil(N/2)
    sites.  The generator below canonicalizes even-N splits so that site 0
    is in A; complements stay constructible because purity is symmetric
    under swapping the two sides.
    """

    sites: int
    mask: int

    def __post_init__(self):
        if not 0 < self.mask < (1 << self.sites):
            raise ValueError(f"mask {self.mask:#x} does not fit {self.sites} sites")
        size = self.mask.bit_count()
        if size not in (self.sites // 2, (self.sites + 1) // 2):
            raise ValueError(
                f"mask selects {size} sites; a balanced split of {self.sites} "
                f"needs {self.sites // 2} or {(self.sites + 1) // 2}"
            )

    @property
    def size_a(self) -> int:
        return self.mask.bit_count()

    @property
    def size_b(self) -> int:
        return self.sites - self.size_a


@dataclass(frozen=True)
class PurityStats:
    """Purity of every balanced cut at one field value, with mu and sigma.

    ``sigma`` is the population standard deviation: the balanced cuts form
    the complete ensemble, not a sample.
    """

    g: float
    n: int
    purities: tuple[tuple[int, float], ...]
    mu: float
    sigma: float


def balanced_bipartitions(n_sites: int) -> list[Bipartition]:
    """Every balanced cut, in ascending mask order.

    Even N: masks with N/2 bits set and bit 0 set, one per unordered pair
    {A, B}, C(N, N/2)/2 in total.  Odd N: all masks with (N-1)/2 bits set,
    C(N, (N-1)/2) in total.
    """
    if n_sites < 3:
        raise ValueError(f"a ring needs at least 3 sites, got {n_sites}")
    if n_sites > MAX_BIPARTITION_SITES:
        raise SizeLimit(
            f"bipartition enumeration is limited to {MAX_BIPARTITION_SITES} sites, "
            f"got {n_sites}"
        )
    size_a = n_sites // 2
    even = n_sites % 2 == 0
    return [
        Bipartition(sites=n_sites, mask=mask)
        for mask in range(1, 1 << n_sites)
        if mask.bit_count() == size_a and (not even or mask & 1)
    ]


def purity(state: StateVector, bipartition: Bipartition) -> float:
    """Tr rho_A^2 of the state reduced to the masked subsystem.

    The amplitudes are gathered into a 2^|A| x 2^|B| matrix M (site order
    preserved on both sides) and the Gram matrix is formed on the smaller
    side; the purity is its squared Frobenius norm.
    """
    if state.sites != bipartition.sites:
        raise DimensionMismatch(
            f"state has {state.sites} sites but the bipartition has "
            f"{bipartition.sites}"
        )
    n_sites = state.sites
    a_sites = [j for j in range(n_sites) if (bipartition.mask >> j) & 1]
    b_sites = [j for j in range(n_sites) if not (bipartition.mask >> j) & 1]
    basis = np.arange(1 << n_sites)
    rows = np.zeros(basis.shape, dtype=np.int64)
    cols = np.zeros(basis.shape, dtype=np.int64)
    for i, site in enumerate(a_sites):
        rows |= ((basis >> site) & 1) << i
    for i, site in enumerate(b_sites):
        cols |= ((basis >> site) & 1) << i
    matrix = np.zeros((1 << len(a_sites), 1 << len(b_sites)), dtype=complex)
    matrix[rows, cols] = state.amplitudes
    if matrix.shape[0] <= matrix.shape[1]:
        gram = matrix @ matrix.conj().T
    else:
        gram = matrix.conj().T @ matrix
    return float(np.sum(np.abs(gram) ** 2))


def purity_stats(n_sites: int, g: float) -> PurityStats:
    """Purity of every balanced cut of the ground state at field g."""
    if n_sites > MAX_STATS_SITES:
        raise SizeLimit(
            f"purity statistics are limited to {MAX_STATS_SITES} sites, got {n_sites}"
        )
    n = ground_sector(n_sites, g)
    state = ground_state(n_sites, g)
    values = [
        (part.mask, purity(state, part)) for part in balanced_bipartitions(n_sites)
    ]
    samples = np.array([v for _, v in values])
    return PurityStats(
        g=float(g),
        n=n,
        purities=tuple(values),
        mu=float(samples.mean()),
        sigma=float(samples.std()),
    )


def _nudge_off_crossings(n_sites: int, g: float) -> float:
    fields = _crossing_fields(n_sites)
    if any(abs(g - gc) <= SWEEP_CROSSING_RADIUS for gc in fields):
        return g + SWEEP_NUDGE
    return g


def entanglement_sweep(
    n_sites: int,
    g_min: float,
    g_max: float,
    steps: int,
    workers: int = 1,
) -> list[PurityStats]:
    """Purity statistics over a uniform field grid.

    Grid points landing on a level crossing are nudged by +1e-6 instead of
    failing, so the sweep is total.  The result order follows the grid
    regardless of the worker count.
    """
    if steps < 2:
        raise ValueError(f"a sweep needs at least 2 steps, got {steps}")
    if not g_min < g_max:
        raise ValueError(f"need g_min < g_max, got [{g_min}, {g_max}]")
    grid = [
        _nudge_off_crossings(n_sites, g)
        for g in np.linspace(g_min, g_max, steps)
    ]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda g: purity_stats(n_sites, g), grid))
    return [purity_stats(n_sites, g) for g in grid]
