"""Nonlinear Fourier transform of a Dirac comb and its layer-peeling inverse.

The transform of ``u = sum_n u_n delta_{x_n}`` (poles in (0, 1), not
necessarily equidistant) is an exact exponential-polynomial matrix. Its
reduced form is the ordered product, n = N down to 1, of the conjugated
rotations ``E(-x_n, z) R(u_n) E(x_n, z)``, whose off-diagonal entry carries
the frequency ``x_n``.

Inversion reads the rightmost off-diagonal term (always at ``x_N``) and the
zero-frequency diagonal term (the product of ``cos|u_n|``), recovers the last
pole, strips its factor and repeats.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DegenerateGap,
    EmptyOffDiagonal,
    InvalidDistribution,
    NLFTError,
    NotInImage,
    VanishingDiagonal,
)
from .exppoly import (
    EPS_C,
    EPS_F,
    ExpMat,
    ExpPoly,
    em_identity,
    em_mul,
    ep_at_zero,
    ep_coeff_norm,
    ep_const,
    ep_rightmost,
    ep_shift,
    ep_sub,
)
from .su2core import IDENTITY, compose, phase_factor, rotation_factor

EPS_PEEL = 1e-8
EPS_MEMBER = 1e-7


@dataclass(frozen=True)
class DeltaDistribution:
    """Poles ``0 < x_1 < ... < x_N < 1`` with complex weights."""

    x: np.ndarray = field(default_factory=lambda: np.empty(0))
    u: np.ndarray = field(default_factory=lambda: np.empty(0, dtype=complex))

    def __post_init__(self):
        x = np.asarray(self.x, dtype=float).reshape(-1)
        u = np.asarray(self.u, dtype=complex).reshape(-1)
        if x.shape != u.shape:
            raise InvalidDistribution("pole and weight arrays differ in length")
        if x.size:
            if not np.all(np.isfinite(x)) or not np.all(np.isfinite(u)):
                raise InvalidDistribution("non-finite pole or weight")
            if x[0] <= 0.0 or x[-1] >= 1.0:
                raise InvalidDistribution("poles must lie strictly inside (0, 1)")
            if np.any(np.diff(x) <= 0.0):
                raise InvalidDistribution("poles must be strictly increasing")
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "u", u)

    def __len__(self) -> int:
        return self.x.size

    @property
    def poles(self) -> list[tuple[float, complex]]:
        return list(zip(self.x.tolist(), self.u.tolist()))

    def gaps(self) -> np.ndarray:
        """``x_{n+1} - x_n`` for n = 1..N, with ``x_{N+1} = 1``."""
        return np.diff(np.append(self.x, 1.0))


def conjugated_rotation(x: float, u: complex) -> ExpMat:
    """``E(-x, z) R(u) E(x, z)``: constant diagonal, off-diagonal at frequency x."""
    r = abs(u)
    b = cmath.exp(1j * cmath.phase(u)) * math.sin(r) if r > 0 else 0j
    return ExpMat(ep_const(math.cos(r)), ExpPoly([x], [b]) if b != 0 else ExpPoly())


def ad_product(xs, us, eps_f: float = EPS_F, eps_c: float = EPS_C) -> ExpMat:
    """Ordered product of conjugated rotations, largest index on the left.

    No ordering or range checks: the dual transform reuses this with a pole
    at the origin.
    """
    m = em_identity()
    for x, u in zip(np.asarray(xs, dtype=float)[::-1], np.asarray(us, dtype=complex)[::-1]):
        m = em_mul(m, conjugated_rotation(float(x), complex(u)), eps_f, eps_c)
    return m


def reduced_d(dist: DeltaDistribution, eps_f: float = EPS_F, eps_c: float = EPS_C) -> ExpMat:
    """The reduced transform, built directly (no shift roundtrip)."""
    return ad_product(dist.x, dist.u, eps_f, eps_c)


def forward_d(dist: DeltaDistribution, eps_f: float = EPS_F, eps_c: float = EPS_C) -> ExpMat:
    """Full transform ``E(1, z) * reduced``."""
    if not isinstance(dist, DeltaDistribution):
        raise InvalidDistribution("expected a DeltaDistribution")
    m = reduced_d(dist, eps_f, eps_c)
    # E(1, z) = diag(exp(i pi z), .) is the frequency -1/2 in the exp(-2 pi i y z) convention
    return ExpMat(ep_shift(m.a, -0.5), ep_shift(m.b, -0.5))


def reduce_d(m: ExpMat) -> ExpMat:
    """Left-multiply by ``E(-1, z)``."""
    return ExpMat(ep_shift(m.a, 0.5), ep_shift(m.b, 0.5))


def product_form_d(dist: DeltaDistribution, z: float):
    """Direct evaluation at one ``z`` of ``(prod_n E(dx_n) R(u_n)) E(dx_0)``.

    Independent of the exponential-polynomial machinery; used to cross-check
    :func:`forward_d`.
    """
    x = np.concatenate(([0.0], dist.x, [1.0]))
    dx = np.diff(x)
    m = IDENTITY
    for n in range(len(dist), 0, -1):
        m = compose(m, compose(phase_factor(dx[n], z), rotation_factor(dist.u[n - 1])))
    return compose(m, phase_factor(dx[0], z))


def peel_step_d(m: ExpMat, eps_peel: float = EPS_PEEL, eps_f: float = EPS_F,
                eps_c: float = EPS_C) -> tuple[float, complex, ExpMat]:
    """Strip the outermost pole from a reduced transform.

    Returns ``(x, u, next)`` where ``x`` is the rightmost off-diagonal
    frequency, ``u = exp(i arg b) arctan|b / a0|`` and ``next`` is
    ``E(-x) R(u)^{-1} E(x) m``.
    """
    if len(m.b) == 0:
        raise EmptyOffDiagonal("off-diagonal entry is empty; nothing to peel")
    a0 = ep_at_zero(m.a, eps_f)
    if abs(a0) <= eps_peel:
        raise VanishingDiagonal(f"|a(0)| = {abs(a0):.3g} <= {eps_peel:g}")
    x, bk = ep_rightmost(m.b)
    u = cmath.exp(1j * cmath.phase(bk)) * math.atan(abs(bk / a0))
    undo = conjugated_rotation(x, -u)
    return x, u, em_mul(undo, m, eps_f, eps_c)


def _residual(m: ExpMat, eps_f: float) -> float:
    return ep_coeff_norm(ep_sub(m.a, ep_const(1.0), eps_f)) + ep_coeff_norm(m.b)


def inverse_d(m: ExpMat, N_max: int, eps_peel: float = EPS_PEEL,
              eps_member: float = EPS_MEMBER, eps_f: float = EPS_F,
              eps_c: float = EPS_C) -> DeltaDistribution:
    """Recover the distribution whose reduced transform is ``m``."""
    xs, us = [], []
    for _ in range(N_max):
        if len(m.b) == 0:
            break
        x, u, m = peel_step_d(m, eps_peel, eps_f, eps_c)
        xs.append(x)
        us.append(u)
    if len(m.b):
        raise NotInImage(
            f"off-diagonal still has {len(m.b)} terms after {N_max} peels"
        )
    res = _residual(m, eps_f)
    if res >= eps_member:
        raise NotInImage(f"residual {res:.3g} after peeling exceeds {eps_member:g}")
    try:
        return DeltaDistribution(xs[::-1], us[::-1])
    except InvalidDistribution as exc:
        raise NotInImage(f"recovered poles are not admissible: {exc}") from exc


def membership_d(m: ExpMat, N: int, eps_peel: float = EPS_PEEL,
                 eps_member: float = EPS_MEMBER, eps_f: float = EPS_F,
                 eps_c: float = EPS_C) -> bool:
    """True iff exactly N peels succeed and leave the identity."""
    try:
        for _ in range(N):
            _, _, m = peel_step_d(m, eps_peel, eps_f, eps_c)
    except NLFTError:
        return False
    return _residual(m, eps_f) < eps_member


def inverse_d_weighted(m: ExpMat, N_max: int, eps_f: float = EPS_F,
                       **kw) -> DeltaDistribution:
    """Invert the transform of ``sum dx_n u_n delta_{x_n}`` and divide out ``dx_n``."""
    dist = inverse_d(m, N_max, eps_f=eps_f, **kw)
    gaps = dist.gaps()
    if np.any(gaps <= eps_f):
        raise DegenerateGap("recovered poles have a vanishing gap")
    return DeltaDistribution(dist.x, dist.u / gaps)
