"""Dual delta-comb transform and fast inversion for constant-mass combs.

Swapping the roles of the gaps ``xi_n = x_{n+1} - x_n`` and the cumulative
masses ``v_n`` turns the delta-comb transform into its dual. For a comb with
one common weight ``1/M`` the masses sit on the grid ``n/M``, so the reduced
dual transform, divided by ``prod cos(xi_n)``, is an Euler-type transform of
size M whose signal is ``-i M tan(xi_n)``. The grid inversion then recovers
the gaps, and hence the pole positions.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import LengthMismatch, NotConstMass, VanishingC
from .exppoly import EPS_C, EPS_F, ExpMat, ExpPoly, em_eval_many, em_identity, em_mul, ep_const
from .nlft_e import EPS_MEMBER, GridMat, idft, peel_step_e
from .su2core import IDENTITY, QMat, compose, dual_phase_factor

EPS_REAL = 1e-7
EPS_C_MIN = 1e-8


@dataclass(frozen=True)
class GapVector:
    """Positive gaps ``xi_0..xi_N`` summing to one."""

    xi: np.ndarray

    def __post_init__(self):
        xi = np.asarray(self.xi, dtype=float).reshape(-1)
        if xi.size == 0 or np.any(xi <= 0.0):
            raise ValueError("gaps must be positive")
        if abs(xi.sum() - 1.0) > 1e-12:
            raise ValueError(f"gaps sum to {xi.sum()!r}, not 1")
        object.__setattr__(self, "xi", xi)

    @property
    def M(self) -> int:
        return self.xi.size

    @property
    def positions(self) -> np.ndarray:
        """Poles ``x_n = xi_0 + ... + xi_{n-1}``, n = 1..N."""
        return np.cumsum(self.xi)[:-1]

    @classmethod
    def from_positions(cls, x) -> "GapVector":
        x = np.asarray(x, dtype=float)
        return cls(np.diff(np.concatenate(([0.0], x, [1.0]))))


@dataclass(frozen=True)
class MassVector:
    """Cumulative masses ``v_0..v_{N+1}`` with ``v_{N+1} = 1``."""

    v: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.v, dtype=float).reshape(-1)
        if v.size < 2 or np.any(np.diff(v) <= 0.0) or v[0] < 0.0 or v[-1] != 1.0:
            raise ValueError("masses must increase from v_0 >= 0 to v_{N+1} = 1")
        object.__setattr__(self, "v", v)

    @classmethod
    def constant(cls, M: int) -> "MassVector":
        """Common weight ``1/M`` with ``u_0 = 0``: ``v_n = n / M``."""
        return cls(np.arange(M + 1) / M)


def forward_dual(xi: GapVector, v: MassVector, z: float) -> QMat:
    """``R(u_{N+1}, z) E(xi_N) ... R(u_1, z) E(xi_0) R(v_0, z)``.

    ``R(w, z)`` is the real rotation by ``pi w z`` and ``E(xi)`` is the
    z-independent phase ``diag(exp(i xi), exp(-i xi))``.
    """
    if v.v.size != xi.xi.size + 1:
        raise LengthMismatch(f"{xi.xi.size} gaps need {xi.xi.size + 1} masses, got {v.v.size}")
    m = IDENTITY
    for n in range(xi.M, 0, -1):
        m = compose(m, dual_phase_factor(v.v[n] - v.v[n - 1], z))
        m = compose(m, QMat(cmath.exp(1j * xi.xi[n - 1]), 0j))
    return compose(m, dual_phase_factor(v.v[0], z))


def hat_forward_dual(xi: GapVector, v_masses, eps_f: float = EPS_F,
                     eps_c: float = EPS_C) -> ExpMat:
    """Reduced dual transform in the variable ``zeta``.

    Ordered product, n = N down to 0, of
    ``[[cos xi_n, -i exp(-2 pi i v_n zeta) sin xi_n], [., cos xi_n]]``.
    Only the first ``M`` masses are used, so a full :class:`MassVector` works.
    """
    v = np.asarray(v_masses.v if isinstance(v_masses, MassVector) else v_masses, dtype=float)
    if v.size < xi.M:
        raise LengthMismatch(f"need {xi.M} masses, got {v.size}")
    m = em_identity()
    for n in range(xi.M - 1, -1, -1):
        f = ExpMat(ep_const(math.cos(xi.xi[n])), ExpPoly([v[n]], [-1j * math.sin(xi.xi[n])]))
        m = em_mul(m, f, eps_f, eps_c)
    return m


def constmass_samples(xi: GapVector) -> GridMat:
    """Hat-transform samples at ``zeta = 0..M-1`` for masses ``n / M``."""
    M = xi.M
    m = hat_forward_dual(xi, np.arange(M) / M)
    zeta = np.arange(M)
    a, b = em_eval_many(m, zeta)
    return GridMat(a, b)


def inverse_dual_constmass(samples, M: int | None = None,
                           eps_member: float = EPS_MEMBER) -> GapVector:
    """Recover the gaps of a constant-mass comb from ``M`` hat-transform samples."""
    g = samples if isinstance(samples, GridMat) else GridMat.from_samples(samples)
    if M is not None and g.N != M:
        raise LengthMismatch(f"expected {M} samples, got {g.N}")
    M = g.N
    c = idft(g.a)[0]
    if abs(c) < EPS_C_MIN:
        raise VanishingC(f"|C| = {abs(c):.3g} below {EPS_C_MIN:g}")
    h = GridMat(g.a / c, g.b / c)
    t = np.empty(M, dtype=complex)
    cur = h
    for k in range(M):
        val, cur = peel_step_e(cur)
        t[M - 1 - k] = val / M
    res = cur.max_diff(h)
    if not res < eps_member:
        raise NotConstMass(f"peeling residual {res:.3g} exceeds {eps_member:g}")
    worst = float(np.abs(t.real).max())
    if worst > EPS_REAL:
        raise NotConstMass(f"recovered values have real part {worst:.3g}")
    xi = np.arctan(-t.imag)
    try:
        return GapVector(xi)
    except ValueError as exc:
        raise NotConstMass(f"recovered gaps are not admissible: {exc}") from exc


def complexity_report(N: int) -> tuple[float, float, float]:
    """Operation-count proxies: ``N^2 ln N`` for the plain inverse against
    ``sum_k k ln k`` (log of the hyperfactorial) for the gap-reducing one."""
    full = N * N * math.log(N)
    modified = math.fsum(k * math.log(k) for k in range(1, N + 1))
    return full, modified, full - modified
