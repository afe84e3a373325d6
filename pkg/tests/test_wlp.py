from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from fatpoints.closed_forms import r_degree
from fatpoints.hilbert import ci_hilbert, diff
from fatpoints.linalg import Field
from fatpoints.oracle import general_points, power_ideal_dim
from fatpoints.wlp import (
    Verdict,
    applicable,
    check_r_degree_identity,
    decompose,
    literature_verdict,
    p_poly,
    p_poly_via_hilbert,
    scan_failure,
    theorem63_value,
    witness_degree,
    wlp_failure_witness,
)


@pytest.mark.parametrize("m,q,t,want", [(2, 0, 0, 1), (2, 1, 0, 4), (7, 1, 0, -208)])
def test_p_poly_values(m, q, t, want):
    assert p_poly(m, q, t) == want


@pytest.mark.parametrize("m,q,t", [(2, 1, 0), (2, 0, 1), (3, 2, 1)])
def test_two_paths(m, q, t):
    assert p_poly(m, q, t) == p_poly_via_hilbert(m, q, t)


def test_regression_constants():
    assert p_poly(2, 0, 1) == -34
    assert p_poly(3, 2, 1) == -16380


@pytest.mark.parametrize("args", [(1, 0, 0), (2, 5, 0), (2, 0, -1)])
def test_domain(args):
    with pytest.raises(ValueError):
        p_poly(*args)


def test_identity_grid():
    for m in range(2, 9):
        for q in range(2 * m + 1):
            for t in range(7):
                assert p_poly(m, q, t) == p_poly_via_hilbert(m, q, t), (m, q, t)


@pytest.mark.parametrize("n,d,want", [(4, 3, 5), (3, 6, 12), (2, 1, 0)])
def test_r_degree_literal(n, d, want):
    assert r_degree(n, d) == want


def test_r_degree_decomposition_for_wlp():
    # A/lA has 2m variables, so the test degree is r_degree(2m-1, d)
    assert r_degree(3, 3) == 4 == witness_degree(2, 2, 0)
    assert all(check_r_degree_identity(m, d) for m in range(2, 12) for d in range(1, 500))


@pytest.mark.parametrize("m,want", [(4, 15), (6, 0), (7, -208)])
def test_d2_value(m, want):
    closed, direct = theorem63_value(m)
    assert closed == direct == want


def test_d2_value_sign_pattern():
    for m in range(2, 41):
        closed, direct = theorem63_value(m)
        assert closed == direct
        assert (closed > 0) == (m < 6) and (closed == 0) == (m == 6)


def test_witness_examples():
    v = wlp_failure_witness(14, 2)
    assert (v.m, v.q, v.t, v.witness, v.verdict) == (7, 1, 0, -208, Verdict.UNKNOWN)
    v = wlp_failure_witness(8, 2)
    assert v.witness == 15 and v.verdict is Verdict.UNKNOWN


def test_zero_witness():
    # P_{6,1}(0) = 0 sits at d = 2, where the test degree is not known to be nonzero
    v = wlp_failure_witness(12, 2)
    assert (v.q, v.t, v.witness) == (1, 0, 0)
    assert v.verdict is Verdict.UNKNOWN and v.clause == "outside known regularity range"
    v = wlp_failure_witness(12, 145)
    assert (v.q, v.applicable, v.verdict) == (1, True, Verdict.FAILS)
    assert all(p_poly(6, 1, t) < 0 for t in range(1, 33))


def test_n12_d14_uses_q0():
    v = wlp_failure_witness(12, 14)
    assert (v.q, v.t, v.clause, v.verdict) == (0, 1, "n+1 divides d-1", Verdict.FAILS)
    assert v.witness == p_poly(6, 0, 1) == -790659941422


def test_n14_q1_progression():
    for s in range(1, 27):
        v = wlp_failure_witness(14, 2 + 15 * s)
        assert v.q == 1 and v.witness < 0
        assert (v.verdict is Verdict.FAILS) == (2 + 15 * s >= 184)


def test_witness_rejects_bad_n():
    for n in (7, 9, 6):
        with pytest.raises(ValueError):
            wlp_failure_witness(n, 3)


@given(st.integers(4, 10).map(lambda m: 2 * m), st.integers(2, 600))
def test_verdict_invariant(n, d):
    v = wlp_failure_witness(n, d)
    assert v.applicable == applicable(n, d)
    assert (v.verdict is Verdict.FAILS) == (v.applicable and v.witness <= 0)
    t, q = decompose(n // 2, d)
    assert (v.t, v.q) == (t, q)


def test_scan_n12_divisible():
    rep = scan_failure([12], range(2, 401))
    rows = [r for r in rep.rows if (r.d - 1) % 13 == 0]
    assert rows and all(r.verdict is Verdict.FAILS for r in rows)


def test_scan_density_grows():
    rep = scan_failure(range(10, 21, 2), range(2, 401))
    fails = [sum(1 for r in rep.rows if r.verdict is Verdict.FAILS and lo <= r.d < lo + 100) for lo in (2, 302)]
    assert fails[0] < fails[1]


def test_scan_rejects_odd():
    with pytest.raises(ValueError):
        scan_failure([9], range(2, 5))


def test_literature_table():
    assert literature_verdict(2, 7) == (True, "known for all d")
    assert literature_verdict(3, 3)[0] is False
    assert literature_verdict(4, 3)[0] is True
    assert literature_verdict(6, 3)[0] is False
    assert literature_verdict(8, 2) == (False, "known")
    assert literature_verdict(8, 3) == (False, "conjectured")
    assert literature_verdict(9, 1)[0] is True


@pytest.mark.parametrize("n,d", [(4, 6), (6, 3), (6, 4)])
def test_witness_matches_oracle(n, d):
    # Δh_A(r) from the complete-intersection table against ranks for random forms
    m = n // 2
    r = r_degree(n - 1, d)
    v = n + 2
    want = diff(ci_hilbert(v, [d] * v), 2)[r]
    pts = general_points(n, n + 2, seed=0, field=Field())
    h = [power_ideal_dim(pts, [d] * (n + 2), j) for j in (r - 1, r)]
    assert h[1] - h[0] == want
    if (d - 1) % (n + 1) == 0 or d >= n * n - n + 2:
        t, q = decompose(m, d)
        assert want == p_poly(m, q, t)
