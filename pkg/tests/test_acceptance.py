"""Acceptance criteria, one test each.

Every test appends a ``[PASS]`` or ``[FAIL]`` line to the terminal summary
before asserting, so a run of this file alone gives a complete report.
"""
import math
import time

import numpy as np

from conftest import ACCEPTANCE_LINES
from nlft.errors import NotConstMass
from nlft.exppoly import ExpMat, ExpPoly, ep_coeff_norm, ep_eval, ep_sub
from nlft.generate import random_delta, random_gaps, random_masses, random_signal
from nlft.nlft_d import ad_product, forward_d, inverse_d, membership_d, reduce_d
from nlft.nlft_dual import (
    complexity_report,
    constmass_samples,
    hat_forward_dual,
    inverse_dual_constmass,
)
from nlft.nlft_e import GridMat, dft, forward_e, inverse_e, membership_e, stratum_count
from nlft.oracle import (
    StepProfile,
    dyson_delta_d,
    dyson_product_e,
    enumerate_stratum,
    gauge_check,
    step_transform,
)


def report(n: int, ok: bool, detail: str):
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {n}: {detail}")
    print(ACCEPTANCE_LINES[-1])
    assert ok, detail


def test_criterion_01_stratum_count():
    t0 = time.perf_counter()
    count = stratum_count(100, 10, 25)
    exact = math.comb(25, 9) * math.comb(74, 9)
    mismatches = 0
    for N in range(1, 13):
        for k in range(1, (N + 1) // 2 + 1):
            for l in range(N):
                mismatches += stratum_count(N, k, l) != len(enumerate_stratum(N, 2 * k - 1, l))
    dt = time.perf_counter() - t0
    ok = abs(count / 2.3e17 - 1) < 0.05 and count == exact and mismatches == 0 and dt < 1.0
    report(1, ok, f"#D_19(25) = {count} (big-int {exact}), {mismatches} enumeration mismatches, {dt:.3f}s")


def test_criterion_02_complexity_anchor():
    t0 = time.perf_counter()
    _, _, diff = complexity_report(1000)
    dt = time.perf_counter() - t0
    ok = abs(diff / 3.7e6 - 1) < 0.05 and dt < 0.1
    report(2, ok, f"difference(1000) = {diff:.6g}, {dt * 1e3:.2f}ms")


def test_criterion_03_delta_roundtrip():
    rng = np.random.default_rng(3)
    t0 = time.perf_counter()
    worst = 0.0
    for i in range(100):
        N = int(rng.integers(1, 13))
        dist = random_delta(N, rng, min_gap=0.5 / N, umin=0.05, umax=1.2)
        back = inverse_d(reduce_d(forward_d(dist)), N)
        worst = max(worst, np.abs(back.x - dist.x).max(), np.abs(back.u - dist.u).max())
    dt = time.perf_counter() - t0
    report(3, worst < 1e-9 and dt < 30, f"max error {worst:.2e} over 100 combs, {dt:.2f}s")


def test_criterion_04_euler_roundtrip():
    rng = np.random.default_rng(4)
    t0 = time.perf_counter()
    worst = 0.0
    for i in range(100):
        N = (4, 16, 64, 128)[i % 4]
        u = random_signal(N, rng, umax=2.0)
        worst = max(worst, np.abs(inverse_e(forward_e(u)) - u).max())
    dt = time.perf_counter() - t0
    report(4, worst < 1e-8 and dt < 60, f"max error {worst:.2e} over 100 signals, {dt:.2f}s")


def _perturb_b(m: ExpMat, rng) -> ExpMat:
    coeffs = m.b.coeffs.copy()
    candidates = np.flatnonzero(np.abs(coeffs) >= 1e-4)
    coeffs[rng.choice(candidates)] *= 1.1
    return ExpMat(m.a, ExpPoly(m.b.freqs, coeffs))


def test_criterion_05_membership():
    rng = np.random.default_rng(5)
    errors = []
    for i in range(100):
        N = int(rng.integers(1, 9))
        m = reduce_d(forward_d(random_delta(N, rng)))
        if not membership_d(m, N):
            errors.append(f"delta image {i} rejected")
        if membership_d(_perturb_b(m, rng), N):
            errors.append(f"delta decoy {i} accepted")
    for i in range(100):
        N = int(rng.choice([2, 4, 16, 64]))
        g = forward_e(random_signal(N, rng))
        if not membership_e(g):
            errors.append(f"grid image {i} rejected")
        b = g.b.copy()
        b[rng.integers(N)] *= 1.1
        if membership_e(GridMat(g.a, b)):
            errors.append(f"grid decoy {i} accepted")
    report(5, not errors, f"{len(errors)} misclassifications in 400 cases {errors[:3]}")


def test_criterion_06_oracle_equivalence():
    rng = np.random.default_rng(6)
    dev_e = 0.0
    for N in range(1, 13):
        u = random_signal(N, rng)
        g = forward_e(u)
        for z in range(N):
            q = dyson_product_e(u, z)
            dev_e = max(dev_e, abs(q.a - g.a[z]), abs(q.b - g.b[z]))
    dev_d = 0.0
    for N in range(0, 11):
        dist = random_delta(N, rng)
        fast, slow = reduce_d(forward_d(dist)), dyson_delta_d(dist)
        dev_d = max(dev_d, ep_coeff_norm(ep_sub(fast.a, slow.a)), ep_coeff_norm(ep_sub(fast.b, slow.b)))
    v = rng.normal(size=32) + 1j * rng.normal(size=32)
    naive = np.array([sum(v[l] * np.exp(-2j * np.pi * l * z / 32) for l in range(32)) for z in range(32)])
    dev_f = np.abs(dft(v) - naive).max()
    ok = dev_e <= 1e-11 and dev_d <= 1e-11 and dev_f <= 1e-12
    report(6, ok, f"grid {dev_e:.1e}, delta {dev_d:.1e}, dft {dev_f:.1e}")


def test_criterion_07_epsilon_limit():
    rng = np.random.default_rng(7)
    ratios = []
    for _ in range(20):
        dist = random_delta(5, rng)
        full = forward_d(dist)
        p3, p4 = StepProfile(dist, 1e-3), StepProfile(dist, 1e-4)
        for z in rng.uniform(0.5, 10, 8) * rng.choice([-1, 1], 8):
            f = full(z)
            e3 = step_transform(p3, z)
            e4 = step_transform(p4, z)
            n3 = np.hypot(abs(e3.a - f.a), abs(e3.b - f.b))
            n4 = np.hypot(abs(e4.a - f.a), abs(e4.b - f.b))
            ratios.append(n3 / n4)
    lo, hi = min(ratios), max(ratios)
    report(7, 8 <= lo and hi <= 12, f"error ratio in [{lo:.2f}, {hi:.2f}] over 160 points")


def test_criterion_08_linearization():
    rng = np.random.default_rng(8)
    dist = random_delta(6, rng)
    zs = rng.uniform(-5, 5, 32)
    lin_d = np.exp(-2j * np.pi * np.multiply.outer(zs, dist.x)) @ dist.u

    def res_d(s):
        m = ad_product(dist.x, s * dist.u, eps_c=0.0)
        return np.abs(ep_eval(m.b, zs) - s * lin_d).max()

    u = random_signal(32, rng)
    lin_e = dft(u) / u.size

    def res_e(s):
        return np.abs(forward_e(s * u).b - s * lin_e).max()

    rd = res_d(1e-2) / res_d(1e-3)
    re = res_e(1e-2) / res_e(1e-3)
    ok = 800 <= rd <= 1200 and 800 <= re <= 1200
    report(8, ok, f"residual shrink factor {rd:.1f} (delta), {re:.1f} (grid)")


def test_criterion_09_duality():
    rng = np.random.default_rng(9)
    worst = 0.0
    for _ in range(50):
        M = int(rng.integers(1, 10))
        xi = random_gaps(M, rng)
        v = random_masses(M, rng)
        hat = hat_forward_dual(xi, v)
        ref = ad_product(v, np.exp(-0.5j * np.pi) * xi.xi)
        worst = max(worst, ep_coeff_norm(ep_sub(hat.a, ref.a)), ep_coeff_norm(ep_sub(hat.b, ref.b)))
        zs = rng.uniform(-5, 5, 8)
        for p, q in ((hat.a, ref.a), (hat.b, ref.b)):
            worst = max(worst, np.abs(ep_eval(p, zs) - ep_eval(q, zs)).max())
    report(9, worst <= 1e-12, f"max entrywise deviation {worst:.1e} over 50 configurations")


def test_criterion_10_constant_mass():
    rng = np.random.default_rng(10)
    t0 = time.perf_counter()
    worst = 0.0
    for _ in range(50):
        M = int(rng.integers(4, 17))
        xi = random_gaps(M, rng)
        back = inverse_dual_constmass(constmass_samples(xi), M)
        worst = max(worst, np.abs(back.positions - xi.positions).max())
    flagged = 0
    for _ in range(20):
        M = int(rng.integers(4, 17))
        hat = hat_forward_dual(random_gaps(M, rng), random_masses(M, rng))
        zeta = np.arange(M)
        g = GridMat(ep_eval(hat.a, zeta), ep_eval(hat.b, zeta))
        try:
            inverse_dual_constmass(g, M)
        except NotConstMass:
            flagged += 1
    dt = time.perf_counter() - t0
    ok = worst < 1e-8 and flagged == 20 and dt < 30
    report(10, ok, f"max position error {worst:.1e}, {flagged}/20 decoys flagged, {dt:.2f}s")


def test_criterion_11_gauge():
    rng = np.random.default_rng(11)
    worst = 0.0
    for _ in range(10):
        dist = random_delta(int(rng.integers(1, 8)), rng)
        prof = StepProfile(dist, 1e-3)
        for n in range(9):
            lhs, rhs = gauge_check(prof, n)
            worst = max(worst, abs(lhs.a - rhs.a), abs(lhs.b - rhs.b))
    report(11, worst <= 1e-11, f"max gauge deviation {worst:.1e} over 10 profiles")
