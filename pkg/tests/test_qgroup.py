import itertools

import pytest

from qaffine.scalars import QScalar, q_power
from qaffine.linalg import OpMatrix
from qaffine.qgroup import (
    phi_zeta, dynkin_twist, check_defining_relations, check_omega_transfer,
)

ONE = QScalar.ONE


def test_a1_images_match_fundamental():
    img = phi_zeta("a1", 2, 1)
    assert img.e_mats[1] == OpMatrix.unit(2, 1, 2, ONE)
    assert img.e_mats[0] == OpMatrix.unit(2, 2, 1, ONE)
    assert img.exps == (1, 1)  # (s - s1, s1) = (1, 1)
    e = img.e_op(1)
    assert e.zexp == 1 and e.mat == OpMatrix.unit(2, 1, 2, ONE)
    f = img.f_op(0)
    assert f.zexp == -1


def test_a2_images_match_fundamental():
    img = phi_zeta("a2", 1, 0, 0)
    assert img.e_mats[0] == OpMatrix.unit(3, 3, 1, ONE)
    assert img.f_mats[0] == OpMatrix.unit(3, 1, 3, ONE)
    assert img.exps == (1, 0, 0)
    assert img.h_diags[0] == (-1, 0, 1)


def test_defining_relations_hold():
    for algebra, exps in (("a1", (1, 0)), ("a1", (3, 2)), ("a2", (1, 0, 0)),
                          ("a2", (2, -1, 1))):
        img = phi_zeta(algebra, *exps)
        assert check_defining_relations(img) == []


def test_e_f_commutator_is_forced():
    img = phi_zeta("a1", 1, 0)
    lhs = img.e_mats[1].commutator(img.f_mats[1])
    assert lhs == OpMatrix.diagonal([ONE, -ONE], ONE)


def test_omega_transfer():
    assert check_omega_transfer(phi_zeta("a1", 2, 1))
    assert check_omega_transfer(phi_zeta("a2", 1, 0, 0))


def test_twist_is_group_action_and_preserves_relations():
    img = phi_zeta("a2", 1, 0, 0)
    perms = list(itertools.permutations(range(3)))
    for s in perms:
        twisted = dynkin_twist(img, s)
        assert check_defining_relations(twisted) == []
        for t in perms:
            st = tuple(s[t[i]] for i in range(3))
            lhs = dynkin_twist(dynkin_twist(img, s), t)
            rhs = dynkin_twist(img, st)
            assert lhs.e_mats == rhs.e_mats
            assert lhs.h_diags == rhs.h_diags


def test_identity_twist_is_identity():
    img = phi_zeta("a1", 1, 0)
    same = dynkin_twist(img, (0, 1))
    assert same.e_mats == img.e_mats
    with pytest.raises(ValueError):
        dynkin_twist(img, (0, 0))


def test_twist_keeps_zeta_dressing_on_node():
    img = phi_zeta("a1", 1, 0)
    sw = dynkin_twist(img, (1, 0))
    # after the swap, node 1 carries the old node-0 matrix but still zeta^s1
    assert sw.e_mats[1] == OpMatrix.unit(2, 2, 1, ONE)
    assert sw.e_op(1).zexp == 0
