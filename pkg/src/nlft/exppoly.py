"""Sparse exponential polynomials ``sum_j c_j exp(-2 pi i y_j z)``.

The frequency ``y_j`` doubles as the location of the delta ``c_j delta_{y_j}``
in the distributional inverse Fourier transform, so reading off the
rightmost term or the term at the origin is a lookup, not a transform.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EmptyPoly
from .su2core import QMat

EPS_F = 1e-9
EPS_C = 1e-12


class ExpPoly:
    """Sorted frequencies with complex coefficients.

    Instances are treated as immutable. Build them through
    :func:`ep_normalize` unless the terms are already normalized.
    """

    __slots__ = ("freqs", "coeffs")

    def __init__(self, freqs=(), coeffs=()):
        self.freqs = np.asarray(freqs, dtype=float).reshape(-1)
        self.coeffs = np.asarray(coeffs, dtype=complex).reshape(-1)
        if self.freqs.shape != self.coeffs.shape:
            raise ValueError("freqs and coeffs must have equal length")

    def __len__(self) -> int:
        return self.freqs.size

    def __iter__(self):
        return iter(zip(self.freqs.tolist(), self.coeffs.tolist()))

    def __repr__(self) -> str:
        return f"ExpPoly({list(self)!r})"

    def __call__(self, z):
        return ep_eval(self, z)

    def terms(self) -> list[tuple[float, complex]]:
        return list(self)


def _as_arrays(raw):
    if isinstance(raw, ExpPoly):
        return raw.freqs, raw.coeffs
    if isinstance(raw, tuple) and len(raw) == 2 and isinstance(raw[0], np.ndarray):
        return np.asarray(raw[0], dtype=float), np.asarray(raw[1], dtype=complex)
    raw = list(raw)
    if not raw:
        return np.empty(0), np.empty(0, dtype=complex)
    f, c = zip(*raw)
    return np.asarray(f, dtype=float), np.asarray(c, dtype=complex)


def ep_normalize(raw, eps_f: float = EPS_F, eps_c: float = EPS_C) -> ExpPoly:
    """Sort, merge frequencies closer than ``eps_f`` and prune tiny terms.

    ``raw`` is an ExpPoly, a ``(freqs, coeffs)`` array pair, or an iterable of
    ``(freq, coeff)`` pairs. A merged cluster takes the magnitude-weighted mean
    frequency; singletons keep their frequency bit for bit.
    """
    f, c = _as_arrays(raw)
    if f.size == 0:
        return ExpPoly()
    order = np.argsort(f, kind="stable")
    f, c = f[order], c[order]
    starts = np.flatnonzero(np.concatenate(([True], np.diff(f) > eps_f)))
    sizes = np.diff(np.append(starts, f.size))
    csum = np.add.reduceat(c, starts)
    fout = f[starts].copy()
    multi = sizes > 1
    if multi.any():
        w = np.abs(c)
        wsum = np.add.reduceat(w, starts)
        wf = np.add.reduceat(w * f, starts)
        plain = np.add.reduceat(f, starts) / sizes
        with np.errstate(invalid="ignore", divide="ignore"):
            weighted = np.where(wsum > 0, wf / np.where(wsum > 0, wsum, 1.0), plain)
        # clusters of bitwise-equal frequencies keep that exact value
        same = np.maximum.reduceat(f, starts) == f[starts]
        fout = np.where(multi & ~same, weighted, fout)
    keep = np.abs(csum) > eps_c
    return ExpPoly(fout[keep], csum[keep])


def ep_const(c: complex = 1.0) -> ExpPoly:
    return ExpPoly([0.0], [c]) if c != 0 else ExpPoly()


def ep_eval(p: ExpPoly, z):
    """Evaluate at a scalar or an array of real ``z``."""
    zz = np.asarray(z, dtype=float)
    if len(p) == 0:
        out = np.zeros(zz.shape, dtype=complex)
    else:
        phase = np.exp(-2j * np.pi * np.multiply.outer(zz, p.freqs))
        out = phase @ p.coeffs
    return complex(out) if zz.ndim == 0 else out


def ep_add(p: ExpPoly, q: ExpPoly, eps_f: float = EPS_F, eps_c: float = EPS_C) -> ExpPoly:
    return ep_normalize(
        (np.concatenate((p.freqs, q.freqs)), np.concatenate((p.coeffs, q.coeffs))),
        eps_f, eps_c,
    )


def ep_scale(p: ExpPoly, s: complex) -> ExpPoly:
    return ExpPoly(p.freqs, p.coeffs * s)


def ep_shift(p: ExpPoly, dy: float) -> ExpPoly:
    """Multiply by ``exp(-2 pi i dy z)``."""
    return ExpPoly(p.freqs + dy, p.coeffs)


def _mul_raw(p: ExpPoly, q: ExpPoly):
    f = np.add.outer(p.freqs, q.freqs).ravel()
    c = np.multiply.outer(p.coeffs, q.coeffs).ravel()
    return f, c


def ep_mul(p: ExpPoly, q: ExpPoly, eps_f: float = EPS_F, eps_c: float = EPS_C) -> ExpPoly:
    """Pointwise product: all pairwise frequency sums, then normalized."""
    return ep_normalize(_mul_raw(p, q), eps_f, eps_c)


def ep_rightmost(p: ExpPoly) -> tuple[float, complex]:
    if len(p) == 0:
        raise EmptyPoly("exponential polynomial has no terms")
    return float(p.freqs[-1]), complex(p.coeffs[-1])


def ep_at_zero(p: ExpPoly, eps_f: float = EPS_F) -> complex:
    hit = np.flatnonzero(np.abs(p.freqs) <= eps_f)
    return complex(p.coeffs[hit].sum()) if hit.size else 0j


def ep_conj_reflect(p: ExpPoly) -> ExpPoly:
    """The polynomial whose values are the complex conjugates at real ``z``."""
    return ExpPoly(-p.freqs[::-1], np.conj(p.coeffs[::-1]))


def ep_coeff_norm(p: ExpPoly) -> float:
    """Sum of coefficient magnitudes (bounds the sup norm over real z)."""
    return float(np.abs(p.coeffs).sum())


def ep_sub(p: ExpPoly, q: ExpPoly, eps_f: float = EPS_F, eps_c: float = 0.0) -> ExpPoly:
    return ep_add(p, ep_scale(q, -1.0), eps_f, eps_c)


@dataclass(frozen=True)
class ExpMat:
    """A z-dependent quaternion-form matrix ``[[a, b], [-conj b, conj a]]``."""

    a: ExpPoly
    b: ExpPoly

    def __call__(self, z) -> QMat:
        return em_eval(self, z)

    def __matmul__(self, other: "ExpMat") -> "ExpMat":
        return em_mul(self, other)


def em_identity() -> ExpMat:
    return ExpMat(ep_const(1.0), ExpPoly())


def em_mul(m1: ExpMat, m2: ExpMat, eps_f: float = EPS_F, eps_c: float = EPS_C) -> ExpMat:
    a2c = ep_conj_reflect(m2.a)
    b2c = ep_conj_reflect(m2.b)
    fa1, ca1 = _mul_raw(m1.a, m2.a)
    fa2, ca2 = _mul_raw(m1.b, b2c)
    fb1, cb1 = _mul_raw(m1.a, m2.b)
    fb2, cb2 = _mul_raw(m1.b, a2c)
    a = ep_normalize((np.concatenate((fa1, fa2)), np.concatenate((ca1, -ca2))), eps_f, eps_c)
    b = ep_normalize((np.concatenate((fb1, fb2)), np.concatenate((cb1, cb2))), eps_f, eps_c)
    return ExpMat(a, b)


def em_eval(m: ExpMat, z) -> QMat:
    return QMat(ep_eval(m.a, z), ep_eval(m.b, z))


def em_eval_many(m: ExpMat, zs) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized evaluation; returns the a- and b-entries over ``zs``."""
    zs = np.atleast_1d(np.asarray(zs, dtype=float))
    return ep_eval(m.a, zs), ep_eval(m.b, zs)
