import cmath
import math

import numpy as np
import pytest

from nlft.errors import (
    EmptyOffDiagonal,
    InvalidDistribution,
    NotInImage,
    VanishingDiagonal,
)
from nlft.exppoly import ExpMat, ExpPoly, em_eval, em_identity, ep_at_zero, ep_const, ep_eval
from nlft.generate import random_delta
from nlft.nlft_d import (
    DeltaDistribution,
    forward_d,
    inverse_d,
    inverse_d_weighted,
    membership_d,
    peel_step_d,
    product_form_d,
    reduce_d,
    reduced_d,
)
from nlft.su2core import compose, phase_factor


def test_distribution_validation():
    with pytest.raises(InvalidDistribution):
        DeltaDistribution([0.5, 0.3], [1, 1])
    with pytest.raises(InvalidDistribution):
        DeltaDistribution([0.0, 0.3], [1, 1])
    with pytest.raises(InvalidDistribution):
        DeltaDistribution([0.3, 1.0], [1, 1])
    with pytest.raises(InvalidDistribution):
        DeltaDistribution([0.3], [1, 2])


def test_forward_empty():
    m = forward_d(DeltaDistribution())
    assert m.a.terms() == [(-0.5, 1)]
    assert len(m.b) == 0
    assert abs(em_eval(m, 0.7).a - cmath.exp(1j * math.pi * 0.7)) < 1e-15


def test_forward_single_pole_closed_form():
    x, r, phi = 0.37, 0.8, 2.1
    m = forward_d(DeltaDistribution([x], [r * cmath.exp(1j * phi)]))
    for z in (-3.3, 0.0, 1.25, 7.9):
        v = em_eval(m, z)
        pre = cmath.exp(1j * math.pi * z)
        assert abs(v.a - pre * math.cos(r)) < 1e-14
        assert abs(v.b - pre * cmath.exp(-2j * math.pi * x * z) * cmath.exp(1j * phi) * math.sin(r)) < 1e-14


def test_forward_unit_det(rng):
    m = forward_d(random_delta(6, rng))
    for z in rng.uniform(-50, 50, 32):
        assert em_eval(m, z).det() == pytest.approx(1.0, abs=1e-10)


def test_forward_matches_product_form(rng):
    for N in (1, 3, 7, 12):
        dist = random_delta(N, rng)
        m = forward_d(dist)
        for z in rng.uniform(-20, 20, 8):
            v, p = em_eval(m, z), product_form_d(dist, z)
            assert abs(v.a - p.a) <= 1e-11 and abs(v.b - p.b) <= 1e-11


def test_reduce():
    ident = reduce_d(forward_d(DeltaDistribution()))
    assert ident.a.terms() == [(0.0, 1)] and len(ident.b) == 0
    x, u = 0.4, 0.3 * cmath.exp(0.5j)
    m = reduce_d(forward_d(DeltaDistribution([x], [u])))
    assert m.a.terms() == [(0.0, pytest.approx(math.cos(0.3)))]
    assert len(m.b) == 1 and m.b.freqs[0] == pytest.approx(x, abs=1e-16)
    assert abs(m.b.coeffs[0] - cmath.exp(0.5j) * math.sin(0.3)) < 1e-15


def test_reduce_pointwise(rng):
    full = forward_d(random_delta(5, rng))
    red = reduce_d(full)
    for z in rng.uniform(-10, 10, 32):
        lhs = em_eval(red, z)
        rhs = compose(phase_factor(-1, z), em_eval(full, z))
        assert abs(lhs.a - rhs.a) <= 1e-13 and abs(lhs.b - rhs.b) <= 1e-13


def test_rightmost_frequency_is_last_pole(rng):
    for N in range(1, 11):
        dist = random_delta(N, rng)
        m = reduced_d(dist)
        assert m.b.freqs[-1] == dist.x[-1]


def test_zero_frequency_is_cosine_product(rng):
    for N in range(1, 11):
        dist = random_delta(N, rng)
        m = reduced_d(dist)
        assert ep_at_zero(m.a) == pytest.approx(np.prod(np.cos(np.abs(dist.u))), abs=1e-12)


def test_term_count_bound(rng):
    for N in range(1, 11):
        m = reduced_d(random_delta(N, rng))
        assert len(m.a) <= 2 ** (N - 1)
        assert len(m.b) <= 2 ** (N - 1)


def test_peel_single_pole():
    m = reduce_d(forward_d(DeltaDistribution([0.4], [0.3])))
    x, u, nxt = peel_step_d(m)
    assert x == pytest.approx(0.4, abs=1e-15)
    assert u == pytest.approx(0.3, abs=1e-15)
    assert len(nxt.b) == 0 and nxt.a.terms() == [(0.0, pytest.approx(1.0))]


def test_peel_errors():
    with pytest.raises(EmptyOffDiagonal):
        peel_step_d(em_identity())
    with pytest.raises(VanishingDiagonal):
        peel_step_d(ExpMat(ExpPoly([0.2], [1.0]), ExpPoly([0.5], [1.0])))


def test_peel_reads_last_pole(rng):
    dist = random_delta(5, rng)
    m = reduce_d(forward_d(dist))
    x, u, nxt = peel_step_d(m)
    assert abs(x - dist.x[-1]) < 1e-10 and abs(u - dist.u[-1]) < 1e-10
    rest = reduced_d(DeltaDistribution(dist.x[:-1], dist.u[:-1]))
    for z in rng.uniform(-5, 5, 8):
        p, q = em_eval(nxt, z), em_eval(rest, z)
        assert abs(p.a - q.a) < 1e-12 and abs(p.b - q.b) < 1e-12


def test_inverse_roundtrip(rng):
    dist = random_delta(8, rng, min_gap=0.02, umax=1.2)
    back = inverse_d(reduce_d(forward_d(dist)), 8)
    assert np.abs(back.x - dist.x).max() < 1e-9
    assert np.abs(back.u - dist.u).max() < 1e-9


def test_inverse_identity_is_empty():
    assert len(inverse_d(em_identity(), 5)) == 0


def test_inverse_rejects_perturbed(rng):
    m = reduce_d(forward_d(random_delta(4, rng)))
    coeffs = m.b.coeffs.copy()
    coeffs[np.argmax(np.abs(coeffs))] *= 1.1
    with pytest.raises(NotInImage):
        inverse_d(ExpMat(m.a, ExpPoly(m.b.freqs, coeffs)), 4)


def test_inverse_needs_enough_peels(rng):
    m = reduce_d(forward_d(random_delta(5, rng)))
    with pytest.raises(NotInImage):
        inverse_d(m, 4)


def test_membership(rng):
    dist = random_delta(6, rng)
    m = reduce_d(forward_d(dist))
    assert membership_d(m, 6)
    assert not membership_d(m, 5)
    assert not membership_d(m, 7)
    assert membership_d(em_identity(), 0)
    assert not membership_d(ExpMat(ep_const(1.0), ExpPoly([0.5], [2.0])), 1)


def test_weighted_single_pole():
    m = reduce_d(forward_d(DeltaDistribution([0.25], [0.15])))
    back = inverse_d_weighted(m, 1)
    assert back.u[0] == pytest.approx(0.2, abs=1e-14)


def test_weighted_roundtrip(rng):
    dist = random_delta(6, rng)
    hat = DeltaDistribution(dist.x, dist.gaps() * dist.u)
    back = inverse_d_weighted(reduce_d(forward_d(hat)), 6)
    assert np.abs(back.u - dist.u).max() < 1e-8
    with pytest.raises(NotInImage):
        inverse_d_weighted(reduce_d(forward_d(hat)), 3)


def test_linearization_is_cubic(rng):
    dist = random_delta(5, rng)
    zs = rng.uniform(-5, 5, 16)
    phases = np.exp(-2j * np.pi * np.multiply.outer(zs, dist.x))

    def err(s):
        m = reduced_d(DeltaDistribution(dist.x, s * dist.u), eps_c=0.0)
        return np.abs(ep_eval(m.b, zs) - s * phases @ dist.u).max()

    ratio = err(1e-2) / err(1e-3)
    assert 500 < ratio < 2000
