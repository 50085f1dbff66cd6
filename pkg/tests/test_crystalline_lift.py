"""Tests for crystalline character tuples, the averaging operator, and the
lift construction."""
from __future__ import annotations

import random

import pytest

from tamelift.crystalline_lift import (
    CrysCharTuple,
    averaged_scale_matrix,
    frobenius_shift,
    kernel_membership,
    lift_inertia,
    lift_to_dict,
    make_crys_tuple,
    reduction,
    simple_trick_check,
    weyl_act,
    xi_operator,
)
from tamelift.errors import (
    GuardError,
    InvalidPairError,
    LiftHypothesisError,
)
from tamelift.lattice import identity_matrix, mat_pow, mat_vec, vec_mod
from tamelift.root_datum import (
    build_root_datum,
    weyl_from_word,
    weyl_group_elements,
    weyl_identity,
)
from tamelift.tame_reps import make_pair

GL2 = build_root_datum("GL2")
GL3 = build_root_datum("GL3")
SWAP = weyl_from_word(GL2, [0])


def random_tuple(rng, datum, q, f):
    slots = [tuple(rng.randrange(-4, 5) for _ in range(datum.rank))
             for _ in range(f)]
    return make_crys_tuple(datum, q, slots)


def elements_of_order_dividing(datum, f):
    ident = identity_matrix(datum.rank)
    return [w for w in weyl_group_elements(datum)
            if mat_pow(w.matrix, f) == ident]


def test_tuple_constructor_guards():
    with pytest.raises(ValueError):
        CrysCharTuple(datum=GL2, q=3, f=0, slots=())
    with pytest.raises(ValueError):
        CrysCharTuple(datum=GL2, q=3, f=2, slots=((1, 0),))
    with pytest.raises(ValueError):
        CrysCharTuple(datum=GL2, q=3, f=1, slots=((1, 0, 0),))


def test_frobenius_shift_examples():
    v = make_crys_tuple(GL2, 3, [(1, 0), (0, 1)])
    assert frobenius_shift(v).slots == ((0, 1), (1, 0))

    v3 = make_crys_tuple(GL2, 3, [(1, 1), (2, 2), (3, 3)])
    assert frobenius_shift(v3).slots == ((3, 3), (1, 1), (2, 2))

    v1 = make_crys_tuple(GL2, 3, [(5, 7)])
    assert frobenius_shift(v1).slots == v1.slots


def test_weyl_act_examples():
    v = make_crys_tuple(GL2, 3, [(1, 0), (2, 3)])
    assert weyl_act(SWAP, v).slots == ((0, 1), (3, 2))
    assert weyl_act(weyl_identity(GL2), v).slots == v.slots
    assert weyl_act(SWAP, weyl_act(SWAP, v)) == v
    with pytest.raises(ValueError):
        weyl_act(weyl_from_word(GL3, [0]), v)


def test_xi_operator_examples():
    v = make_crys_tuple(GL2, 3, [(1, 0), (0, 0)])
    assert xi_operator(SWAP, v).slots == ((0, 1), (1, 0))

    # for the identity element the operator is shift plus identity
    rng = random.Random(3)
    for _ in range(10):
        u = random_tuple(rng, GL2, 3, 2)
        shifted = frobenius_shift(u)
        expected = tuple(tuple(a + b for a, b in zip(s, t))
                         for s, t in zip(shifted.slots, u.slots))
        assert xi_operator(weyl_identity(GL2), u).slots == expected

    u1 = make_crys_tuple(GL2, 3, [(4, 7)])
    assert xi_operator(SWAP, u1) == u1


def test_xi_output_always_satisfies_kernel_condition():
    rng = random.Random(5)
    for name in ["GL2", "GL3", "Sp4", "G2"]:
        datum = build_root_datum(name)
        for f in (1, 2, 3):
            for w in elements_of_order_dividing(datum, f):
                for _ in range(5):
                    v = random_tuple(rng, datum, 3, f)
                    assert kernel_membership(w, xi_operator(w, v))


def test_reduction_examples():
    assert reduction(make_crys_tuple(GL2, 3, [(1, 0), (0, 1)])) == (1, 3)
    assert reduction(make_crys_tuple(GL2, 3, [(0, 0), (0, 0)])) == (0, 0)
    assert reduction(make_crys_tuple(GL2, 3, [(0, 0), (8, 0)])) == (0, 0)


def test_reduction_equivariance():
    rng = random.Random(9)
    for name in ["GL2", "Sp4"]:
        datum = build_root_datum(name)
        for q, f in [(2, 2), (3, 2), (3, 3)]:
            n = q ** f - 1
            for w in weyl_group_elements(datum):
                v = random_tuple(rng, datum, q, f)
                red = reduction(v)
                assert reduction(frobenius_shift(v)) == \
                    vec_mod(tuple(q * c for c in red), n)
                assert reduction(weyl_act(w, v)) == vec_mod(w.apply(red), n)


def test_kernel_membership_examples():
    assert kernel_membership(SWAP, make_crys_tuple(GL2, 3, [(1, 0), (0, 1)]))
    assert not kernel_membership(SWAP, make_crys_tuple(GL2, 3, [(1, 0), (1, 0)]))
    assert kernel_membership(SWAP, make_crys_tuple(GL2, 3, [(0, 0), (0, 0)]))


def test_lift_inertia_worked_example():
    result = lift_inertia(GL2, make_pair(GL2, 3, 2, (1, 3), SWAP))
    assert result.tuple.slots == ((1, 0), (0, 1))
    assert result.kernel_checked and result.reduction_checked
    assert result.regular


def test_lift_inertia_zero_vbar():
    result = lift_inertia(GL2, make_pair(GL2, 3, 2, (0, 0), SWAP))
    assert result.tuple.slots == ((0, 0), (0, 0))
    assert not result.regular


def test_lift_inertia_degree_one():
    result = lift_inertia(GL2, make_pair(GL2, 3, 1, (1, 0), weyl_identity(GL2)))
    assert result.tuple.slots == ((1, 0),)
    assert result.kernel_checked and result.reduction_checked
    assert result.regular


def test_lift_inertia_rejects_bad_order():
    cycle = weyl_from_word(GL3, [0, 1])
    with pytest.raises(LiftHypothesisError):
        lift_inertia(GL3, make_pair(GL3, 3, 2, (0, 0, 0), cycle))


def test_lift_inertia_rejects_invalid_pair():
    with pytest.raises(InvalidPairError):
        lift_inertia(GL2, make_pair(GL2, 3, 2, (1, 5), SWAP))


def test_lift_soundness_sweep():
    rng = random.Random(17)
    for name in ["GL2", "GL3", "Sp4", "G2"]:
        datum = build_root_datum(name)
        for q in (2, 3):
            for f in (1, 2):
                n = q ** f - 1
                for w in elements_of_order_dividing(datum, f):
                    xi_bar = averaged_scale_matrix(w.matrix, q, f)
                    for _ in range(10):
                        x = tuple(rng.randrange(n) for _ in range(datum.rank))
                        vbar = vec_mod(mat_vec(xi_bar, x), n)
                        p = make_pair(datum, q, f, vbar, w)
                        result = lift_inertia(datum, p)
                        assert kernel_membership(w, result.tuple)
                        assert reduction(result.tuple) == p.vbar


def test_simple_trick_examples():
    assert simple_trick_check(GL2, 3, 2, SWAP, method="exhaustive")
    assert simple_trick_check(GL2, 3, 2, weyl_identity(GL2), method="exhaustive")
    cycle = weyl_from_word(GL3, [0, 1])
    assert simple_trick_check(GL3, 2, 3, cycle, method="snf")
    assert simple_trick_check(GL3, 2, 3, cycle, method="exhaustive")


def test_simple_trick_methods_agree():
    for name in ["GL2", "Sp4"]:
        datum = build_root_datum(name)
        for q in (2, 3):
            for f in (1, 2):
                for w in elements_of_order_dividing(datum, f):
                    r1 = simple_trick_check(datum, q, f, w, method="exhaustive")
                    r2 = simple_trick_check(datum, q, f, w, method="snf")
                    r3 = simple_trick_check(datum, q, f, w, method="sample")
                    assert r1 and r2 and r3


def test_simple_trick_trivial_modulus():
    assert simple_trick_check(GL2, 2, 1, weyl_identity(GL2))


def test_simple_trick_guard_and_method_errors():
    gl4 = build_root_datum("GL4")
    with pytest.raises(GuardError):
        simple_trick_check(gl4, 5, 3, weyl_identity(gl4), method="exhaustive")
    assert simple_trick_check(gl4, 5, 3, weyl_identity(gl4), method="snf")
    with pytest.raises(LiftHypothesisError):
        simple_trick_check(GL3, 3, 2, weyl_from_word(GL3, [0, 1]))
    with pytest.raises(ValueError):
        simple_trick_check(GL2, 3, 2, SWAP, method="guess")


def test_lift_to_dict():
    result = lift_inertia(GL2, make_pair(GL2, 3, 2, (1, 3), SWAP))
    assert lift_to_dict(result) == {
        "slots": [[1, 0], [0, 1]],
        "q": 3,
        "f": 2,
        "checks": {"kernel": True, "reduction": True, "regular": True},
    }
