"""Seeded random instances for the CLI and the test suites."""
from __future__ import annotations

import math

import numpy as np

from .errors import BadConstraints
from .nlft_d import DeltaDistribution
from .nlft_dual import GapVector


def _rng(seed):
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def random_delta(N: int, seed=None, min_gap: float | None = None,
                 umin: float = 0.05, umax: float = 1.2) -> DeltaDistribution:
    """Poles with pairwise gaps >= ``min_gap`` (default ``0.5 / N``), at least
    ``min_gap / 2`` from both ends; weights with ``|u|`` uniform in
    ``[umin, umax]`` and uniform phase."""
    if N < 0:
        raise BadConstraints("N must be nonnegative")
    if not 0 < umin <= umax < math.pi / 2:
        raise BadConstraints("weights need 0 < umin <= umax < pi/2")
    if N == 0:
        return DeltaDistribution()
    g = 0.5 / N if min_gap is None else min_gap
    floor = g * N
    if floor >= 1.0:
        raise BadConstraints(f"min gap {g:g} leaves no room for {N} poles")
    rng = _rng(seed)
    mins = np.full(N + 1, g)
    mins[0] = mins[-1] = g / 2
    gaps = mins + rng.dirichlet(np.ones(N + 1)) * (1.0 - floor)
    x = np.cumsum(gaps)[:N]
    r = rng.uniform(umin, umax, N)
    phi = rng.uniform(0.0, 2 * np.pi, N)
    return DeltaDistribution(x, r * np.exp(1j * phi))


def random_signal(N: int, seed=None, umax: float = 2.0) -> np.ndarray:
    if N < 1:
        raise BadConstraints("N must be at least 1")
    rng = _rng(seed)
    r = rng.uniform(0.0, umax, N)
    return r * np.exp(1j * rng.uniform(0.0, 2 * np.pi, N))


def random_gaps(M: int, seed=None, spread: float = 0.5) -> GapVector:
    """Normalized positive draws; ``spread`` in [0, 1) sets how uneven they are."""
    if M < 1 or not 0 <= spread < 1:
        raise BadConstraints("need M >= 1 and 0 <= spread < 1")
    rng = _rng(seed)
    xi = rng.uniform(1.0 - spread, 1.0 + spread, M)
    return GapVector(xi / xi.sum())


def random_masses(M: int, seed=None) -> np.ndarray:
    """Increasing masses ``0 = v_0 < ... < v_{M-1} < 1`` off the ``n/M`` grid."""
    rng = _rng(seed)
    v = np.sort(rng.uniform(0.0, 1.0, M - 1))
    return np.concatenate(([0.0], v))
