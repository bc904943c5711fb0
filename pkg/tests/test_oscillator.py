import random

from fractions import Fraction

import pytest

from qaffine.scalars import QScalar, q_power
from qaffine.linalg import OpMatrix, kron
from qaffine.qgroup import check_defining_relations
from qaffine.oscillator import (
    FockRep, fock_rep, chi_images, psi_images, osc_automorphism,
    two_copy_automorphism, tau_matrix, gamma_scaling, OscParams,
)

ONE = QScalar.ONE
D = 8


def test_fock_basis_relations():
    f = fock_rep(D)
    a, ad, qd = f.lowering(), f.raising(), f.q_number_power(2)
    # a |0> = 0
    assert all(j != 0 for (_, j) in a.entries)
    # a'a = 1 - q^(2D) on every state
    lhs = ad * a
    expect = OpMatrix.diagonal([ONE - q_power(2 * n) for n in range(D)], ONE)
    assert lhs == expect
    # a a'|n> = (1 - q^2 q^(2n))|n> below the top state only
    prod = a * ad
    for n in range(D - 1):
        assert prod.entry(n, n) == ONE - q_power(2 * n + 2)
    assert prod.entry(D - 1, D - 1) != ONE - q_power(2 * D)
    # [D, a] = -a, [D, a'] = a'
    num = f.number()
    assert num.commutator(a) == -a
    assert num.commutator(ad) == ad
    # a'a |2> explicit
    assert lhs.entry(2, 2) == ONE - q_power(4)
    with pytest.raises(ValueError):
        fock_rep(1)


def test_chi_a1_matches_specialization():
    img = chi_images("a1", 1, 0, d=D)
    c = (q_power(1) - q_power(-1)).inverse()
    f = fock_rep(D)
    assert img.e_mats[1] == f.raising().scale(c)
    assert img.e_mats[0] == f.lowering().scale(c)
    assert img.h_diags[1][3] == 6  # 2D on |3>
    assert check_defining_relations(img) == []


def test_psi_a1_matches_specialization():
    img = psi_images("a1", 1, 0, d=D)
    c = (q_power(1) - q_power(-1)).inverse()
    f = fock_rep(D)
    assert img.f_mats[0] == f.raising().scale(c)
    assert img.f_mats[1] == f.lowering().scale(c)
    assert check_defining_relations(img) == []


def test_chi_a2_families_both_satisfy_serre():
    # the two inequivalent solutions of the quadratic Serre relations
    for fam in (1, 2):
        img = chi_images("a2", 1, 0, 0, d=5, family=fam)
        assert check_defining_relations(img) == []
        psi = psi_images("a2", 1, 0, 0, d=5, family=fam)
        assert check_defining_relations(psi) == []


def test_chi_a2_family1_explicit_images():
    d = 4
    img = chi_images("a2", 1, 0, 0, d=d, family=1)
    f = fock_rep(d)
    eye = OpMatrix.identity(d, ONE)
    c = (q_power(1) - q_power(-1)).inverse()
    a1, a2 = kron(f.lowering(), eye), kron(eye, f.lowering())
    a1d, a2d = kron(f.raising(), eye), kron(eye, f.raising())
    qd = lambda c1, c2: kron(f.q_number_power(c1), f.q_number_power(c2))
    assert img.e_mats[0] == (a1 * a2 * qd(-1, -2)).scale(c)
    assert img.e_mats[1] == a1d.scale(c)
    assert img.e_mats[2] == (qd(1, 0) * a2d).scale(c)
    # chi(h_beta) = -D1 + 2 D2 on |n1 n2>
    assert img.h_diags[2][1 * d + 2] == -1 + 4


def test_psi_a2_family2_explicit_images():
    d = 4
    img = psi_images("a2", 1, 0, 0, d=d, family=2)
    f = fock_rep(d)
    eye = OpMatrix.identity(d, ONE)
    c = (q_power(1) - q_power(-1)).inverse()
    a2 = kron(eye, f.lowering())
    qd = lambda c1, c2: kron(f.q_number_power(c1), f.q_number_power(c2))
    # psi(f_beta) = c a_2 q^(-D1)
    assert img.f_mats[2] == (a2 * qd(-1, 0)).scale(c)


def test_parameter_freedom_is_an_automorphism_orbit():
    # rebuilding with shifted (mu, nu) equals conjugating by the
    # one-copy automorphism with kappa = q^2, xi = 2
    d = 6
    kappa, xi = q_power(2), 2
    c = q_power(1) - q_power(-1)
    base = chi_images("a1", 1, 0, d=d)
    shifted = chi_images("a1", 1, 0, d=d,
                         params=OscParams((c * c).inverse(), [c * kappa],
                                          [Fraction(xi)]))
    s, s_inv = osc_automorphism(d, kappa, xi)
    for i in (0, 1):
        assert s * base.e_mats[i] * s_inv == shifted.e_mats[i]
    assert check_defining_relations(shifted) == []


def test_two_copy_automorphism_consistency():
    d = 4
    f = fock_rep(d)
    eye = OpMatrix.identity(d, ONE)
    a1 = kron(f.lowering(), eye)
    a2 = kron(eye, f.lowering())
    k1, k2 = q_power(1), q_power(-2)
    xi1, xi2, xi3 = 2, 4, 6
    s, s_inv = two_copy_automorphism(d, (k1, k2), (xi1, xi2, xi3))
    qd = lambda c1, c2: kron(f.q_number_power(c1), f.q_number_power(c2))
    assert s * a1 * s_inv == (a1 * qd(xi1, xi2)).scale(k1)
    assert s * a2 * s_inv == (a2 * qd(xi2, xi3)).scale(k2)
    # D_i are fixed
    d1 = kron(f.number(), eye)
    assert s * d1 * s_inv == d1


def test_tau_is_an_anti_involution_swapping_ladder_ops():
    d = 6
    f = fock_rep(d)
    a, ad = f.lowering(), f.raising()
    assert tau_matrix(a, d) == ad
    assert tau_matrix(ad, d) == a
    assert tau_matrix(f.number(), d) == f.number()
    # anti-homomorphism: tau(a a') = tau(a') tau(a) = a a'
    assert tau_matrix(a * ad, d) == a * ad
    rng = random.Random(4)
    for _ in range(5):
        m = OpMatrix(d, {(rng.randrange(d), rng.randrange(d)):
                         q_power(rng.randint(-2, 2)) for _ in range(6)}, ONE)
        n = OpMatrix(d, {(rng.randrange(d), rng.randrange(d)):
                         q_power(rng.randint(-1, 1)) for _ in range(6)}, ONE)
        assert tau_matrix(tau_matrix(m, d), d) == m
        assert tau_matrix(m * n, d) == tau_matrix(n, d) * tau_matrix(m, d)


def test_gamma_scaling_exponents():
    expo = gamma_scaling(2, 4, (2, 3))
    # raising copy 1: row - col = (1, 0) -> exponent 2
    assert expo(1 * 4 + 0, 0) == 2
    # lowering copy 2: exponent -3
    assert expo(0, 1) == -3
    assert expo(5, 5) == 0


def test_zero_kappa_rejected():
    with pytest.raises(ValueError):
        osc_automorphism(4, QScalar.ZERO, 0)
