"""Quaternion-form 2x2 complex matrices and the elementary factors.

A quaternion-form matrix is ``[[a, b], [-conj(b), conj(a)]]`` and is stored
as the pair ``(a, b)``. Products, inverses and determinants are computed on
the pair directly; the full 2x2 array is only built on request.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import SingularMatrix


@dataclass(frozen=True)
class QMat:
    a: complex = 1.0 + 0.0j
    b: complex = 0.0j

    def __matmul__(self, other: "QMat") -> "QMat":
        return compose(self, other)

    def det(self) -> float:
        return abs(self.a) ** 2 + abs(self.b) ** 2

    def to_array(self) -> np.ndarray:
        a, b = complex(self.a), complex(self.b)
        return np.array([[a, b], [-b.conjugate(), a.conjugate()]])

    def scale(self, s: float) -> "QMat":
        return QMat(self.a * s, self.b * s)


IDENTITY = QMat(1.0 + 0.0j, 0.0j)


def compose(m1: QMat, m2: QMat) -> QMat:
    """Matrix product ``m1 @ m2``, kept in quaternion form."""
    a = m1.a * m2.a - m1.b * m2.b.conjugate()
    b = m1.a * m2.b + m1.b * m2.a.conjugate()
    return QMat(a, b)


def invert(m: QMat) -> QMat:
    d = m.det()
    if d < 1e-300:
        raise SingularMatrix(f"determinant {d!r} too small to invert")
    return QMat(m.a.conjugate() / d, -m.b / d)


def phase_factor(x: float, z: float) -> QMat:
    """``diag(exp(i pi x z), exp(-i pi x z))``."""
    return QMat(cmath.exp(1j * math.pi * x * z), 0.0j)


def phase_factor_N(n: int, z: int, N: int) -> QMat:
    """Grid phase ``diag(exp(i pi n z / N), exp(-i pi n z / N))``."""
    return QMat(cmath.exp(1j * math.pi * n * z / N), 0.0j)


def rotation_factor(u: complex) -> QMat:
    """Limit of a delta spike of weight ``u = r exp(i phi)``:
    ``[[cos r, e^{i phi} sin r], [-e^{-i phi} sin r, cos r]]``."""
    r = abs(u)
    phi = cmath.phase(u) if r > 0 else 0.0
    return QMat(complex(math.cos(r)), cmath.exp(1j * phi) * math.sin(r))


def rotation_generator(u: complex) -> QMat:
    return QMat(0.0j, complex(u))


def dual_rotation_factor(xi: float) -> QMat:
    """``cos(xi) I + sin(xi) L`` with ``L = [[0, -i], [-i, 0]]``."""
    return QMat(complex(math.cos(xi)), -1j * math.sin(xi))


def dual_phase_factor(v: float, z: float) -> QMat:
    """Real rotation by the angle ``pi v z``."""
    t = math.pi * v * z
    return QMat(complex(math.cos(t)), complex(math.sin(t)))


# The constant matrix that diagonalizes the real rotations of the dual transform.
A_CONJ = np.array([[1j, -1j], [1.0, 1.0]])
A_CONJ_INV = np.array([[-0.5j, 0.5], [0.5j, 0.5]])


def conjugate_by_A(m) -> np.ndarray:
    """Return ``A^{-1} m A`` as a general 2x2 array."""
    if isinstance(m, QMat):
        m = m.to_array()
    return A_CONJ_INV @ np.asarray(m, dtype=complex) @ A_CONJ
