"""Closed-form solution of the XX spin ring in a transverse field.

The model (J = 1, periodic boundary, site N identified with site 0) is

    H = -sum_i [ g sz_i + (sx_i sx_{i+1} + sy_i sy_{i+1}) / 2 ].

After fermionization the single-particle momenta live on a grid shifted by
a parity-dependent offset alpha: the allowed angles are 2*pi*(k + alpha)/N
with alpha = 0 when the number of holes N - n is odd and alpha = 1/2 when
it is even.  A configuration occupying modes K in the n-fermion sector has
energy density

    eps(K, g) = g (1 - 2n/N) + (2/N) sum_{k in K} cos(2*pi*(k + alpha)/N),

so the sector minimum picks the n angles closest to pi and evaluates to

    eps_min(n, g) = g (1 - 2n/N) - (2/N) sin(n*pi/N) / sin(pi/N).

Consecutive sector minima intersect at the level-crossing fields

    g_c(n) = [sin(n*pi/N) - sin((n+1)*pi/N)] / sin(pi/N),

the finite-size forerunners of the quantum phase transition at |g| = 1.
The lower envelope of the sector lines, obtained by minimizing over a
continuous filling, is controlled by the finite-size parameter

    chi_N = sin(pi/N) / (pi/N),

which tends to 1 from below and sets the O(1/N^2) relative error of the
finite ring against the thermodynamic ground-state energy density.

Everything in this module is a pure function of its arguments (double
precision throughout) and safe to call concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateAtCrossing, SingularPoint

#: Fields closer than this to a level crossing count as degenerate.
CROSSING_TOLERANCE = 1e-12

#: Distance (in |g|*chi_N) from the envelope matching point treated as singular.
SINGULARITY_TOLERANCE = 1e-12


@dataclass(frozen=True)
class ChainSpec:
    """A problem instance: number of sites and dimensionless transverse field.

    Rings need at least 3 sites; with 2 sites the periodic closure would
    traverse the single bond twice.
    """

    sites: int
    coupling: float

    def __post_init__(self):
        if self.sites < 3:
            raise ValueError(f"a ring needs at least 3 sites, got {self.sites}")
        if not math.isfinite(self.coupling):
            raise ValueError(f"coupling must be finite, got {self.coupling!r}")


@dataclass(frozen=True)
class ModeSet:
    """Occupied fermionic momenta of a minimum-energy configuration.

    ``modes`` holds ``n`` distinct integers in ``[0, sites)``;
    ``occupied_modes`` returns them sorted ascending.  ``alpha`` is the
    parity-sector momentum offset in units of 2*pi/N, either 0 or 1/2.
    """

    n: int
    alpha: float
    modes: tuple[int, ...]


@dataclass(frozen=True)
class CriticalPoint:
    """Level-crossing field g_c(n) between the n- and (n+1)-fermion sectors."""

    n: int
    g_c: float


def _validate_sites(n_sites: int, minimum: int = 1) -> None:
    if not isinstance(n_sites, (int,)) or isinstance(n_sites, bool):
        raise TypeError(f"number of sites must be an integer, got {n_sites!r}")
    if n_sites < minimum:
        raise ValueError(f"number of sites must be >= {minimum}, got {n_sites}")


def _validate_fermions(n_sites: int, n: int) -> None:
    if not 0 <= n <= n_sites:
        raise ValueError(f"fermion count must lie in [0, {n_sites}], got {n}")


def finite_size_parameter(n_sites: int) -> float:
    """chi_N = sin(pi/N) / (pi/N).

    Strictly increasing in N and -> 1 as N -> infinity.  chi_1 = 0.
    """
    _validate_sites(n_sites)
    x = math.pi / n_sites
    return math.sin(x) / x


def alpha_for_sector(n_sites: int, n: int) -> float:
    """Momentum offset of the parity sector holding n fermions on N sites.

    The conserved quantity is the parity of the hole number N - n: odd hole
    number selects the unshifted grid (alpha = 0), even selects the
    half-step grid (alpha = 1/2).
    """
    _validate_sites(n_sites)
    _validate_fermions(n_sites, n)
    return 0.0 if (n_sites - n) % 2 == 1 else 0.5


def mode_cosine(n_sites: int, alpha: float, k: int) -> float:
    """cos(2*pi*(alpha + k)/N), the dispersion value of mode k."""
    return math.cos(2.0 * math.pi * (alpha + k) / n_sites)


def occupied_modes(n_sites: int, n: int) -> ModeSet:
    """The n momenta that minimize the sector energy.

    Selects the modes whose angles 2*pi*(alpha + k)/N lie nearest pi, i.e.
    with the most negative cosine.  Exact cosine ties (possible only away
    from the ground sector's own filling) are broken toward smaller k.
    """
    _validate_sites(n_sites)
    _validate_fermions(n_sites, n)
    alpha = alpha_for_sector(n_sites, n)
    order = sorted(range(n_sites), key=lambda k: (mode_cosine(n_sites, alpha, k), k))
    return ModeSet(n=n, alpha=alpha, modes=tuple(sorted(order[:n])))


def vacuum_energy_density(n_sites: int, g: float) -> float:
    """Energy density of the empty (all spins down) state: exactly g."""
    _validate_sites(n_sites)
    return float(g)


def vacuum_energy_density_summed(n_sites: int, g: float, alpha: float) -> float:
    """Vacuum energy density via the explicit mode sum.

    (1/N) sum_k [g - cos(2*pi*(alpha + k)/N)] collapses to g because the
    cosines sum to zero over a full period for either offset; this form is
    kept for cross-checks against the dense oracle.
    """
    _validate_sites(n_sites)
    return sum(g - mode_cosine(n_sites, alpha, k) for k in range(n_sites)) / n_sites


def single_particle_energy_density(n_sites: int, k: int, g: float) -> float:
    """Energy density with one fermion in mode k (one spin raised).

    Uses the one-particle sector's offset: alpha = 0 for even N, 1/2 for
    odd N.
    """
    _validate_sites(n_sites)
    if not 0 <= k < n_sites:
        raise ValueError(f"mode index must lie in [0, {n_sites}), got {k}")
    alpha = alpha_for_sector(n_sites, 1)
    return g - (2.0 / n_sites) * (g - mode_cosine(n_sites, alpha, k))


def min_energy_density(n_sites: int, n: int, g: float) -> float:
    """Lowest energy density of the n-fermion sector.

    g (1 - 2n/N) - (2/N) sin(n*pi/N) / sin(pi/N); independent of the parity
    of N.  Reduces to g at n = 0 and to -g at n = N.
    """
    _validate_sites(n_sites)
    _validate_fermions(n_sites, n)
    return g * (1.0 - 2.0 * n / n_sites) - (
        2.0 / n_sites
    ) * math.sin(n * math.pi / n_sites) / math.sin(math.pi / n_sites)


def _crossing_fields(n_sites: int) -> list[float]:
    """g_c(n) for n = 0..N from the closed form."""
    s = math.sin(math.pi / n_sites)
    return [
        (math.sin(n * math.pi / n_sites) - math.sin((n + 1) * math.pi / n_sites)) / s
        for n in range(n_sites + 1)
    ]


def critical_points(n_sites: int) -> list[CriticalPoint]:
    """All level-crossing fields g_c(n), n = 0..N.

    g_c(0) = -1 and g_c(N) = +1 for every N.  The sequence increases
    strictly up to n = N - 1; the final pair coincides, g_c(N-1) = g_c(N)
    = +1 exactly, because the formula evaluated at n = N extrapolates past
    the last physical sector.
    """
    _validate_sites(n_sites, minimum=3)
    return [CriticalPoint(n=n, g_c=gc) for n, gc in enumerate(_crossing_fields(n_sites))]


def _sector_count(n_sites: int, g: float) -> int:
    """Number of physical crossings below g; equals the ground-state filling."""
    fields = _crossing_fields(n_sites)[:n_sites]
    return sum(1 for gc in fields if gc < g)


def ground_sector(n_sites: int, g: float) -> int:
    """Fermion number of the ground state at field g.

    Returns the unique n with g_c(n-1) < g < g_c(n); 0 below g = -1 and N
    above g = +1.  Raises DegenerateAtCrossing when g sits within
    CROSSING_TOLERANCE of a crossing, where two sectors tie.
    """
    _validate_sites(n_sites, minimum=3)
    for gc in _crossing_fields(n_sites):
        if abs(g - gc) <= CROSSING_TOLERANCE:
            raise DegenerateAtCrossing(
                f"g = {g!r} lies on the level crossing at g_c = {gc!r} "
                f"(N = {n_sites}); the ground state is two-fold degenerate"
            )
    return _sector_count(n_sites, g)


def ground_energy_density(n_sites: int, g: float) -> float:
    """Ground-state energy per site: the minimum over all sector lines.

    Total at crossings: both adjacent sectors give the same value there, so
    no degeneracy error is raised.
    """
    _validate_sites(n_sites, minimum=3)
    return min_energy_density(n_sites, _sector_count(n_sites, g), g)


def envelope_energy(n_sites: int, g: float) -> float:
    """Lower envelope of the sector lines (continuous-filling minimum).

    Smooth for |g| < 1/chi_N, equal to -|g| beyond; value and first
    derivative are continuous at the matching points.
    """
    _validate_sites(n_sites, minimum=3)
    chi = finite_size_parameter(n_sites)
    u = g * chi
    if abs(u) >= 1.0:
        return -abs(g)
    return g * (1.0 - 2.0 / math.pi * math.acos(-u)) - (
        2.0 / math.pi
    ) * math.sqrt(1.0 - u * u) / chi


def envelope_second_derivative(n_sites: int, g: float) -> float:
    """Second derivative of the envelope.

    -(2/pi) chi_N / sqrt(1 - g^2 chi_N^2) inside the matching points, zero
    outside; diverges to -infinity as |g| approaches 1/chi_N from inside.
    Raises SingularPoint within SINGULARITY_TOLERANCE of |g| = 1/chi_N.
    """
    _validate_sites(n_sites, minimum=3)
    chi = finite_size_parameter(n_sites)
    u = abs(g) * chi
    if abs(u - 1.0) <= SINGULARITY_TOLERANCE:
        raise SingularPoint(
            f"second derivative of the envelope diverges at |g| = 1/chi_N "
            f"(N = {n_sites}, g = {g!r})"
        )
    if u > 1.0:
        return 0.0
    return -(2.0 / math.pi) * chi / math.sqrt(1.0 - u * u)


def thermodynamic_energy(g: float) -> float:
    """Ground-state energy density of the infinite chain.

    The N -> infinity limit of the envelope; equals the envelope formula
    with chi = 1.
    """
    if abs(g) >= 1.0:
        return -abs(g)
    return g * (1.0 - 2.0 / math.pi * math.acos(-g)) - (
        2.0 / math.pi
    ) * math.sqrt(1.0 - g * g)


def relative_error(n_sites: int) -> float:
    """Relative deviation of the finite-ring energy from the infinite chain.

    -(1/chi_N - 1), evaluated at g = 0; asymptotically -pi^2 / (6 N^2).
    Negative for every finite N and vanishing as N grows.
    """
    _validate_sites(n_sites, minimum=2)
    return -(1.0 / finite_size_parameter(n_sites) - 1.0)
