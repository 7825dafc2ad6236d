"""Brute-force reference computations.

Nothing here is used by the fast paths. Every routine materializes full 2x2
arrays and enumerates index sets directly, so agreement with the
exponential-polynomial and grid code is a genuine cross-check.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import EpsilonTooLarge, TooLarge
from .exppoly import ExpMat, ep_normalize
from .nlft_d import DeltaDistribution
from .su2core import QMat

DYSON_MAX_N = 14
STRATUM_MAX_N = 20


def _qmat(m: np.ndarray) -> QMat:
    return QMat(complex(m[0, 0]), complex(m[0, 1]))


def _euler_generator(u: complex, n: int, z: int, N: int) -> np.ndarray:
    ph = cmath.exp(-2j * math.pi * n * z / N)
    return np.array([[0.0, ph * u], [-ph.conjugate() * u.conjugate(), 0.0]], dtype=complex)


def dyson_product_e(u, z: int) -> QMat:
    """``I + sum_d N^{-d} sum_{n_d > ... > n_1} L(n_d, z) ... L(n_1, z)``."""
    u = np.asarray(u, dtype=complex).reshape(-1)
    N = u.size
    if N > DYSON_MAX_N:
        raise TooLarge(f"N = {N} exceeds {DYSON_MAX_N}")
    gens = [_euler_generator(complex(u[n]), n, z, N) / N for n in range(N)]
    total = np.eye(2, dtype=complex)

    def walk(last: int, prod: np.ndarray):
        nonlocal total
        for n in range(last + 1, N):
            p = gens[n] @ prod
            total = total + p
            walk(n, p)

    walk(-1, np.eye(2, dtype=complex))
    return _qmat(total)


def dyson_delta_d(dist: DeltaDistribution) -> ExpMat:
    """Reduced delta-comb transform by enumerating all pole subsets.

    Each subset ``n_1 < ... < n_d`` contributes the alternating frequency
    ``x_{n_d} - x_{n_{d-1}} + ...`` with the matrix
    ``(prod_{m not in S} cos r_m) U_{n_d} ... U_{n_1}``.
    """
    N = len(dist)
    if N > DYSON_MAX_N:
        raise TooLarge(f"N = {N} exceeds {DYSON_MAX_N}")
    r = np.abs(dist.u)
    gens = []
    for n in range(N):
        s = cmath.exp(1j * cmath.phase(dist.u[n])) * math.sin(r[n]) if r[n] > 0 else 0j
        gens.append(np.array([[0, s], [-s.conjugate(), 0]], dtype=complex))
    cos = np.cos(r)
    a_terms = [(0.0, complex(np.prod(cos)))]
    b_terms = []
    for d in range(1, N + 1):
        for idx in combinations(range(N), d):
            m = np.eye(2, dtype=complex)
            for n in reversed(idx):
                m = m @ gens[n]
            rest = np.prod([cos[j] for j in range(N) if j not in idx])
            y = 0.0
            sign = 1.0
            for n in reversed(idx):
                y += sign * dist.x[n]
                sign = -sign
            if d % 2:
                b_terms.append((y, complex(rest * m[0, 1])))
            else:
                a_terms.append((y, complex(rest * m[0, 0])))
    return ExpMat(ep_normalize(a_terms), ep_normalize(b_terms))


@dataclass(frozen=True)
class StepProfile:
    """Narrow-step approximation of a delta comb: height ``u_n / eps`` on
    ``[x_n - eps/2, x_n + eps/2]``."""

    dist: DeltaDistribution
    epsilon: float

    def __post_init__(self):
        gaps = np.diff(np.concatenate(([0.0], self.dist.x, [1.0])))
        if not 0.0 < self.epsilon < gaps.min():
            raise EpsilonTooLarge(
                f"epsilon {self.epsilon:g} must be below the smallest gap {gaps.min():g}"
            )


def _spike(u: complex, eps: float, z: float) -> np.ndarray:
    """Closed-form exponential of ``[[i pi eps z, u], [-conj u, -i pi eps z]]``."""
    th = math.pi * eps * z
    A = math.sqrt(abs(u) ** 2 + th * th)
    sinc = math.sin(A) / A if A > 0 else 1.0
    c = math.cos(A)
    return np.array(
        [[c + 1j * th * sinc, u * sinc], [-u.conjugate() * sinc, c - 1j * th * sinc]],
        dtype=complex,
    )


def _free(length: float, z: float) -> np.ndarray:
    p = cmath.exp(1j * math.pi * length * z)
    return np.array([[p, 0], [0, p.conjugate()]], dtype=complex)


def step_transform_array(profile: StepProfile, z: float) -> np.ndarray:
    dist, eps = profile.dist, profile.epsilon
    x = np.concatenate(([0.0], dist.x, [1.0]))
    dx = np.diff(x)
    N = len(dist)
    # the outer free intervals lose eps/2, inner ones a full eps
    shrink = np.full(N + 1, eps)
    shrink[0] = shrink[-1] = eps / 2
    if N == 0:
        shrink[0] = 0.0
    m = _free(dx[N] - shrink[N], z)
    for n in range(N, 0, -1):
        m = m @ _spike(complex(dist.u[n - 1]), eps, z) @ _free(dx[n - 1] - shrink[n - 1], z)
    return m


def step_transform(profile: StepProfile, z: float) -> QMat:
    """Exact transform of the step profile as a product of matrix exponentials."""
    return _qmat(step_transform_array(profile, z))


def gauge_check(profile: StepProfile, n: int) -> tuple[QMat, QMat]:
    """Both sides of the gauge relation at integer ``n``:
    ``G(1, n) F(n)`` and ``(-1)^n F(n)`` with ``G(1, z) = diag(e^{-i pi z}, e^{i pi z})``."""
    f = step_transform_array(profile, n)
    g = np.diag([cmath.exp(-1j * math.pi * n), cmath.exp(1j * math.pi * n)])
    return _qmat(g @ f), _qmat((-1) ** n * f)


def enumerate_stratum(N: int, d: int, l: int) -> list[tuple[int, ...]]:
    """All ``0 <= n_1 < ... < n_d <= N-1`` with ``n_d - n_{d-1} + ... = l``."""
    if N > STRATUM_MAX_N:
        raise TooLarge(f"N = {N} exceeds {STRATUM_MAX_N}")
    out = []
    for idx in combinations(range(N), d):
        s, sign = 0, 1
        for n in reversed(idx):
            s += sign * n
            sign = -sign
        if s == l:
            out.append(idx)
    return out
