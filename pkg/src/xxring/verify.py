"""Cross-validation suite: every identity the dense oracle can check.

Each check compares an independent construction against the closed-form
modules (or one operator build against another) and reports the worst
deviation with its tolerance.  The CLI's ``verify`` command runs the whole
suite and fails on the first broken identity.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg

from . import oracle
from .analytic import (
    critical_points,
    ground_energy_density,
)
from .errors import MismatchError
from .statevector import ground_state

#: Grid points this close to a crossing are skipped in energy/state checks.
CROSSING_EXCLUSION = 1e-3

OPERATOR_TOLERANCE = 1e-13
JW_EQUALITY_TOLERANCE = 1e-12
REFLECTION_TOLERANCE = 1e-10
ENERGY_TOLERANCE = 1e-8
OVERLAP_TOLERANCE = 1e-8


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    max_deviation: float
    tolerance: float
    detail: dict = field(default_factory=dict)


@dataclass(frozen=True)
class VerificationReport:
    sites: int
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)


def _result(name, deviation, tolerance, **detail):
    return CheckResult(
        name=name,
        passed=bool(deviation <= tolerance),
        max_deviation=float(deviation),
        tolerance=float(tolerance),
        detail=detail,
    )


def default_field_grid(n_sites: int, points: int = 41, span: float = 1.5) -> list[float]:
    """Uniform field grid with crossing neighborhoods removed."""
    fields = [cp.g_c for cp in critical_points(n_sites)]
    return [
        float(g)
        for g in np.linspace(-span, span, points)
        if min(abs(g - gc) for gc in fields) > CROSSING_EXCLUSION
    ]


def check_pauli_site_algebra(n_sites: int) -> CheckResult:
    """Raising/lowering operators anticommute on site, commute off site."""
    dim = 1 << n_sites
    plus = [
        oracle.site_operator(np.array([[0.0, 0.0], [1.0, 0.0]]), j, n_sites)
        for j in range(n_sites)
    ]
    worst = 0.0
    for i in range(n_sites):
        for j in range(n_sites):
            if i == j:
                worst = max(worst, np.abs(plus[i] @ plus[j] + plus[j] @ plus[i]).max())
            else:
                worst = max(worst, np.abs(plus[i] @ plus[j] - plus[j] @ plus[i]).max())
    return _result("pauli_site_algebra", worst, OPERATOR_TOLERANCE, sites=n_sites, dim=dim)


def check_jw_anticommutation(n_sites: int) -> CheckResult:
    """{c_i, c_j} = 0, {c_i+, c_j+} = 0, {c_i, c_j+} = delta_ij."""
    cs = [oracle.jw_annihilation(n_sites, j) for j in range(n_sites)]
    eye = np.eye(1 << n_sites)
    worst = 0.0
    for i in range(n_sites):
        for j in range(n_sites):
            worst = max(worst, np.abs(cs[i] @ cs[j] + cs[j] @ cs[i]).max())
            mixed = cs[i] @ cs[j].T + cs[j].T @ cs[i]
            expected = eye if i == j else 0.0
            worst = max(worst, np.abs(mixed - expected).max())
    return _result("jw_anticommutation", worst, OPERATOR_TOLERANCE, sites=n_sites)


def check_boundary_operator(n_sites: int) -> CheckResult:
    """Prolonging the string over the whole ring: c_N = (parity of holes) c_0."""
    sigma_z = np.array([[-1.0, 0.0], [0.0, 1.0]])
    sigma_minus = np.array([[0.0, 1.0], [0.0, 0.0]])
    string = np.eye(1 << n_sites)
    for l in range(n_sites):
        string = string @ oracle.site_operator(sigma_z, l, n_sites)
    c_n = string @ oracle.site_operator(sigma_minus, 0, n_sites)
    hole_parity = -oracle.build_parity_operator(n_sites)  # (-1)^(#down)
    deviation = np.abs(c_n - hole_parity @ oracle.jw_annihilation(n_sites, 0)).max()
    return _result("boundary_operator", deviation, OPERATOR_TOLERANCE, sites=n_sites)


def check_parity_commutes(n_sites: int, g: float) -> CheckResult:
    """[P, H] = 0."""
    ham = oracle.build_spin_hamiltonian(n_sites, g)
    parity = oracle.build_parity_operator(n_sites)
    deviation = np.abs(parity @ ham - ham @ parity).max()
    return _result("parity_commutes", deviation, OPERATOR_TOLERANCE, sites=n_sites, g=g)


def check_jw_equals_pauli(n_sites: int, g: float) -> CheckResult:
    """The fermion-operator build reproduces the Pauli build entrywise."""
    deviation = np.abs(
        oracle.build_jw_hamiltonian(n_sites, g) - oracle.build_spin_hamiltonian(n_sites, g)
    ).max()
    return _result("jw_equals_pauli", deviation, JW_EQUALITY_TOLERANCE, sites=n_sites, g=g)


def check_sector_reassembly(n_sites: int, g: float) -> CheckResult:
    """Parity-projected diagonal forms sum back to the Hamiltonian."""
    try:
        report = oracle.verify_sector_hamiltonians(n_sites, g)
    except MismatchError as exc:
        return _result(
            "sector_reassembly",
            exc.max_deviation,
            oracle.SECTOR_AUDIT_TOLERANCE,
            sites=n_sites,
            g=g,
            entry=list(exc.entry) if exc.entry else None,
        )
    return _result(
        "sector_reassembly",
        max(report.reassembly_deviation, report.spectrum_deviation),
        report.tolerance,
        sites=n_sites,
        g=g,
    )


def check_spectrum_reflection(n_sites: int, g: float) -> CheckResult:
    """Flipping the field preserves the spectrum (global spin flip).

    Even rings are bipartite, so their spectrum is additionally negated
    under the reflection; odd rings have no such sublattice rotation.
    """
    direct = np.sort(scipy.linalg.eigvalsh(oracle.build_spin_hamiltonian(n_sites, g)))
    flipped = np.sort(scipy.linalg.eigvalsh(oracle.build_spin_hamiltonian(n_sites, -g)))
    deviation = np.abs(direct - flipped).max()
    if n_sites % 2 == 0:
        deviation = max(deviation, np.abs(direct + flipped[::-1]).max())
    return _result("spectrum_reflection", deviation, REFLECTION_TOLERANCE, sites=n_sites, g=g)


def check_energy_agreement(n_sites: int, field_grid=None) -> CheckResult:
    """Closed-form ground energy against the dense lowest eigenvalue."""
    grid = default_field_grid(n_sites) if field_grid is None else field_grid
    worst = 0.0
    for g in grid:
        pair = oracle.ground_eigenpair(oracle.build_spin_hamiltonian(n_sites, g))
        worst = max(
            worst, abs(n_sites * ground_energy_density(n_sites, g) - pair.energy)
        )
    return _result(
        "energy_agreement", worst, ENERGY_TOLERANCE, sites=n_sites, points=len(grid)
    )


def check_state_overlap(n_sites: int, field_grid=None) -> CheckResult:
    """Analytic ground state against the dense eigenvector, up to phase."""
    grid = default_field_grid(n_sites) if field_grid is None else field_grid
    worst = 0.0
    for g in grid:
        pair = oracle.ground_eigenpair(oracle.build_spin_hamiltonian(n_sites, g))
        state = ground_state(n_sites, g)
        overlap = abs(np.vdot(state.amplitudes, pair.vector))
        worst = max(worst, 1.0 - overlap)
    return _result(
        "state_overlap", worst, OVERLAP_TOLERANCE, sites=n_sites, points=len(grid)
    )


def run_verification(n_sites: int, spot_fields=(0.7, -0.4)) -> VerificationReport:
    """Run every applicable check for one ring size.

    Operator-level audits run at the given spot fields; the energy and
    state comparisons sweep the default grid.  The sector reassembly and
    the fermion-operator build are skipped above their size caps.
    """
    checks: list[CheckResult] = [
        check_pauli_site_algebra(n_sites),
        check_jw_anticommutation(n_sites),
        check_boundary_operator(n_sites),
    ]
    for g in spot_fields:
        checks.append(check_parity_commutes(n_sites, g))
        if n_sites <= oracle.MAX_JW_SITES:
            checks.append(check_jw_equals_pauli(n_sites, g))
        if n_sites <= oracle.MAX_SECTOR_AUDIT_SITES:
            checks.append(check_sector_reassembly(n_sites, g))
        checks.append(check_spectrum_reflection(n_sites, g))
    checks.append(check_energy_agreement(n_sites))
    checks.append(check_state_overlap(n_sites))
    return VerificationReport(sites=n_sites, checks=tuple(checks))
