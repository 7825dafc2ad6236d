"""Euler-type discrete nonlinear Fourier transform on a uniform grid.

``forward_e(u)(z) = prod_{n=N-1}^{0} (I + L(n, z) / N)`` sampled at integer
``z = 0..N-1``, where ``L(n, z)`` has off-diagonal ``exp(-2 pi i n z / N) u_n``.
Each sample is in quaternion form but its determinant is
``prod_n (1 + |u_n|^2 / N^2)`` rather than 1.

The inverse is a layer-peeling recursion driven by one inverse DFT per step:
the last DFT bin of the off-diagonal entry is exactly ``u_{N-1} / N``. After
removing that factor and shifting the grid phase by one step the remainder is
the transform of the cyclically shifted signal.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .errors import NotInImage, TooLarge
from .su2core import QMat

EPS_MEMBER = 1e-7
EPS_REPRODUCE = 1e-8
STRATA_MAX_N = 14


@dataclass(frozen=True)
class GridMat:
    """Samples ``(a(z), b(z))`` of a quaternion-form matrix at ``z = 0..N-1``."""

    a: np.ndarray
    b: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.a, dtype=complex).reshape(-1)
        b = np.asarray(self.b, dtype=complex).reshape(-1)
        if a.shape != b.shape or a.size == 0:
            raise ValueError("a and b samples must be nonempty and of equal length")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def N(self) -> int:
        return self.a.size

    @property
    def samples(self) -> list[QMat]:
        return [QMat(a, b) for a, b in zip(self.a.tolist(), self.b.tolist())]

    @classmethod
    def from_samples(cls, samples) -> "GridMat":
        samples = list(samples)
        return cls([s.a for s in samples], [s.b for s in samples])

    @classmethod
    def identity(cls, N: int) -> "GridMat":
        return cls(np.ones(N, dtype=complex), np.zeros(N, dtype=complex))

    def det(self) -> np.ndarray:
        return np.abs(self.a) ** 2 + np.abs(self.b) ** 2

    def max_diff(self, other: "GridMat") -> float:
        return float(max(np.abs(self.a - other.a).max(), np.abs(self.b - other.b).max()))


def dft(v) -> np.ndarray:
    """``F[v](z) = sum_l v_l exp(-2 pi i l z / N)``."""
    return np.fft.fft(np.asarray(v, dtype=complex))


def idft(v) -> np.ndarray:
    return np.fft.ifft(np.asarray(v, dtype=complex))


def forward_e(u) -> GridMat:
    u = np.asarray(u, dtype=complex).reshape(-1)
    N = u.size
    if N < 1:
        raise ValueError("signal must have at least one sample")
    z = np.arange(N)
    a = np.ones(N, dtype=complex)
    b = np.zeros(N, dtype=complex)
    # left-multiply the factors n = 0, 1, ..., N-1 in turn
    for n in range(N):
        w = np.exp(-2j * np.pi * n * z / N) * (u[n] / N)
        a, b = a - w * np.conj(b), b + w * np.conj(a)
    return GridMat(a, b)


def peel_step_e(g: GridMat) -> tuple[complex, GridMat]:
    """One layer of the inverse.

    Returns the last signal component ``u_{N-1}`` (read from the last inverse
    DFT bin of ``b``, times N) and the grid of the cyclically shifted signal
    ``(u_{N-1}, u_0, ..., u_{N-2})``.
    """
    N = g.N
    z = np.arange(N)
    u = complex(idft(g.b)[N - 1] * N)
    # remove the outermost factor I + L(N-1, z) / N
    w = np.exp(-2j * np.pi * (N - 1) * z / N) * (u / N)
    d = 1.0 + abs(u / N) ** 2
    a = (g.a + w * np.conj(g.b)) / d
    b = (g.b - w * np.conj(g.a)) / d
    # conjugate by diag phase: frequency index n -> n + 1
    b = b * np.exp(-2j * np.pi * z / N)
    # right-multiply by I + U / N, the n = 0 factor of the shifted signal
    c = u / N
    a, b = a - b * np.conj(c), a * c + b
    return u, GridMat(a, b)


def _peel_all(g: GridMat) -> tuple[np.ndarray, GridMat]:
    N = g.N
    u = np.empty(N, dtype=complex)
    for k in range(N):
        val, g = peel_step_e(g)
        u[N - 1 - k] = val
    return u, g


def inverse_e(g: GridMat, eps: float = EPS_REPRODUCE) -> np.ndarray:
    """Recover ``u`` with ``forward_e(u) == g``; peel k yields ``u_{N-1-k}``."""
    u, _ = _peel_all(g)
    res = forward_e(u).max_diff(g)
    if not res <= eps:
        raise NotInImage(f"reproduction residual {res:.3g} exceeds {eps:g}")
    return u


def membership_e(g: GridMat, eps_member: float = EPS_MEMBER) -> bool:
    """True iff N peels bring the grid back to itself."""
    _, back = _peel_all(g)
    return back.max_diff(g) < eps_member


def stratum_count(N: int, k: int, l: int) -> int:
    """Number of strictly increasing (2k-1)-tuples in [0, N-1] with alternating sum l."""
    if k < 1 or not 0 <= l <= N - 1:
        return 0
    return math.comb(l, k - 1) * math.comb(N - l - 1, k - 1)


def alternating_sum(idx) -> int:
    """``n_d - n_{d-1} + n_{d-2} - ...`` for an increasing tuple."""
    s = 0
    sign = 1
    for n in reversed(idx):
        s += sign * n
        sign = -sign
    return s


def dyson_strata_e(u) -> tuple[np.ndarray, np.ndarray]:
    """Stratified Dyson coefficients by brute-force enumeration.

    Returns ``(alpha, beta)`` indexed by the alternating sum ``l``, so that
    ``1 + dft(alpha)`` and ``dft(beta)`` are the diagonal and off-diagonal
    samples of ``forward_e(u)``.
    """
    u = np.asarray(u, dtype=complex).reshape(-1)
    N = u.size
    if N > STRATA_MAX_N:
        raise TooLarge(f"N = {N} exceeds the enumeration cap {STRATA_MAX_N}")
    alpha = np.zeros(N, dtype=complex)
    beta = np.zeros(N, dtype=complex)
    uc = np.conj(u)
    for d in range(1, N + 1):
        k = (d + 1) // 2
        sign = (-1) ** (k - 1) if d % 2 else (-1) ** k
        scale = sign / N ** d
        for idx in combinations(range(N), d):
            prod = 1.0 + 0j
            # top index unconjugated, then alternate
            for j, n in enumerate(reversed(idx)):
                prod *= u[n] if j % 2 == 0 else uc[n]
            l = alternating_sum(idx)
            if d % 2:
                beta[l] += scale * prod
            else:
                alpha[l] += scale * prod
    return alpha, beta
