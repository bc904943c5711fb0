from functools import reduce

import pytest

from qaffine.scalars import QScalar, q_power
from qaffine.rational import ZetaRational
from qaffine.linalg import OpMatrix, Grid, hat_and_check, kron
from qaffine.reference import (
    PrefactorTag, reference_matrix, list_variants, r0_matrix, r0_hat_matrix,
    decompose_L, scan_linear_exponents, grid_inverse, op_inverse,
    apply_two_copy_normalization,
)
from qaffine.engine import EngineParams, assemble

ONE = QScalar.ONE
ZR_ONE = ZetaRational.const(ONE)


def zr(num, den=None):
    return ZetaRational(num, den if den is not None else {0: ONE}, ONE)


def test_r_a1_symmetric_entry():
    # at (s, s1) = (-2, -1) the raising-lowering entry reads
    # (1 - q^-2) z^-1 / (1 - q^-2 z^-2)
    ref = reference_matrix("r", "a1", s=-2, s1=-1)
    got = ref.matrix.entry(1, 2)  # E12 x E21 slot
    expect = zr({-1: ONE - q_power(-2)}, {0: ONE, -2: -q_power(-2)})
    assert got == expect
    assert ref.matrix.entry(0, 0) == ZR_ONE
    # prefactor tag: q^(1/2) e^(lambda2(q z^s) - lambda2(q^-1 z^s))
    assert ref.tag == PrefactorTag(3, ((2, 6, -2, 1), (2, -6, -2, -1)))


def test_r_hat_index_relation():
    ref = reference_matrix("r", "a1", s=1, s1=0)
    rhat, _ = hat_and_check(ref.matrix)
    # hat entry (12,12) equals plain entry (12,21)
    assert rhat.entry(1, 1) == ref.matrix.entry(1, 2)
    expect = zr({0: ONE - q_power(-2)}, {0: ONE, 1: -q_power(-2)})
    assert rhat.entry(1, 1) == expect


def test_l_a1_hat_entries():
    ref = reference_matrix("l", "a1", "hat", s=1, s1=0, d=6)
    m22 = ref.matrix.entry(1, 1)
    # q^-D - q^D z^s on each Fock state
    for n in range(6):
        assert m22.entry(n, n) == zr({0: q_power(-n), 1: -q_power(n)})
    m12 = ref.matrix.entry(0, 1)
    for n in range(1, 6):
        assert m12.entry(n - 1, n) == zr({1: (ONE - q_power(2 * n))
                                          * q_power(-n)})


def test_unsupported_variant_rejected():
    with pytest.raises(ValueError) as e:
        reference_matrix("l", "a1", "hat-3")
    assert "supported" in str(e.value)


def grid_product(factors):
    return reduce(lambda a, b: a * b, factors)


def fock_window(grid, d, kmax, copies=1):
    def keep(i):
        for _ in range(copies):
            if i % d > kmax:
                return False
            i //= d
        return True
    return grid.restrict(keep)


def test_a1_factor_products_match_displays():
    # products of the printed factors reproduce the printed assembled form
    # away from the truncated top state, where a a-dagger is cut off
    d = 6
    for variant in ("hat", "check"):
        ref = reference_matrix("l", "a1", variant, s=2, s1=1, d=d)
        assert ref.factors is not None
        prod = grid_product(ref.factors)
        assert fock_window(prod, d, d - 2) == fock_window(ref.matrix, d, d - 2)


def test_a2_factor_products_match_displays():
    d = 4
    for variant in ("hat-1", "check-1"):
        for exps in ((1, 0, 0), (2, 1, 0)):
            ref = reference_matrix("l", "a2", variant, *exps, d=d)
            prod = grid_product(ref.factors)
            assert fock_window(prod, d, d - 2, copies=2) == \
                fock_window(ref.matrix, d, d - 2, copies=2)


def test_grid_inverse_roundtrip():
    d = 5
    ref = reference_matrix("l", "a1", "hat", s=1, s1=0, d=d)
    inv = grid_inverse(ref.matrix)
    eye = Grid.identity(2, d, ZR_ONE)
    assert ref.matrix * inv == eye
    assert inv * ref.matrix == eye


def test_grid_inverse_a2():
    d = 3
    ref = reference_matrix("l", "a2", "hat-2", s=1, s1=0, s2=0, d=d)
    inv = grid_inverse(ref.matrix)
    eye = Grid.identity(3, d * d, ZR_ONE)
    assert ref.matrix * inv == eye


def test_check_inv_derivation_chain():
    # the printed check-type operator is the inverse of the hat-type one at
    # inverted argument, after the oscillator-pair rescaling
    d = 4
    s, s1, s2 = 1, 0, 0
    hat = reference_matrix("l", "a2", "hat-1", s, s1, s2, d=d)
    inv = grid_inverse(hat.matrix)
    inv = inv.map_values(lambda v: v.subs_power(-1), ZR_ONE)
    normalized = apply_two_copy_normalization(inv, d)
    printed = reference_matrix("l", "a2", "check-inv", s, s1, s2, d=d)
    assert fock_window(normalized, d, d - 3, copies=2) == \
        fock_window(printed.matrix, d, d - 3, copies=2)
    # the tag of the printed form is the inverse tag at inverted argument
    assert printed.tag == hat.tag.inverse().subs_zeta_power(-1)


def test_hat2_inverse_variant():
    d = 3
    ref = reference_matrix("l", "a2", "hat-2-inv", s=1, s1=0, s2=0, d=d)
    hat2 = reference_matrix("l", "a2", "hat-2", s=1, s1=0, s2=0, d=d)
    back = ref.matrix.map_values(lambda v: v.subs_power(-1), ZR_ONE)
    assert hat2.matrix * back == Grid.identity(3, d * d, ZR_ONE)


def test_r0_matrices():
    r0 = r0_matrix(2)
    # diag entries q, 1, 1, q and the single raising-lowering coupling
    assert r0.entry(0, 0) == q_power(1)
    assert r0.entry(1, 1) == ONE
    assert r0.entry(1, 2) == q_power(1) - q_power(-1)
    assert r0.entry(2, 1) == QScalar.ZERO
    r0h = r0_hat_matrix(3)
    assert r0h.entry(0, 0) == q_power(1)
    # E_ab x E_ba lands at row (a,b), column (b,a)
    assert r0h.entry(1, 3) == ONE
    assert r0h.entry(1, 1) == q_power(1) - q_power(-1)


def test_scan_finds_linear_exponents():
    got = scan_linear_exponents("hat", "a1", range(-2, 3), range(-1, 2))
    assert sorted(t for t, _ in got) == [(-2, 0), (2, 0)]
    got_check = scan_linear_exponents("check", "a1", range(-2, 3),
                                      range(-1, 2))
    assert sorted(t for t, _ in got_check) == [(-2, 0), (2, 0)]


def test_decompose_hat_and_projector():
    d = 6
    ref = reference_matrix("l", "a1", "hat", s=2, s1=0, d=d)
    lp, lm, pi, c = decompose_L(ref, invert="minus")
    assert c == 1
    # plus part degenerate (zero column), minus part invertible diagonal
    assert (0, 0) not in lp.entries
    assert pi * pi == pi
    # the wrong triangularity raises
    bad = reference_matrix("l", "a1", "hat", s=-2, s1=0, d=d)
    with pytest.raises(ValueError):
        decompose_L(bad, invert="minus")


def test_decompose_check_projector():
    d = 6
    ref = reference_matrix("l", "a1", "check", s=-2, s1=0, d=d)
    lp, lm, pi, c = decompose_L(ref, invert="plus")
    assert c == -1
    assert pi * pi == pi


def test_engine_matches_reference_a1_hat():
    order, d = 5, 7
    ref = reference_matrix("l", "a1", "hat", s=1, s1=0, d=d)
    pref, eng = assemble(EngineParams("a1", 1, 0, order=order, left="chi",
                                      fock_dim=d), split_prefactor=True)
    assert pref == ref.tag.to_series(order)
    assert eng == ref.expand(order, include_tag=False)


def test_engine_matches_reference_a1_r():
    order = 6
    ref = reference_matrix("r", "a1", s=1, s1=0)
    full = assemble(EngineParams("a1", 1, 0, order=order))
    assert full == ref.expand(order, include_tag=True)


def test_variant_list_complete():
    vs = list_variants()
    assert ("l", "a2", "check-inv") in vs
    assert ("r", "a2", "plain") in vs
    assert len(vs) == 12
