from fractions import Fraction

import numpy as np
import pytest

from wkit.quiverkac import (
    TooLarge,
    build_nminus_polyD,
    cartan_matrix,
    cross_check_base_change,
    double_and_triple,
    euler_form,
    galois_field,
    gl_order,
    jordan_quiver,
    kac_bruteforce,
    kac_mass_count,
    kac_to_bps_character,
    loop_quiver,
    parse_quiver,
    positive_roots,
    root_multiplicities,
)

A2 = parse_quiver("1->2")
KRONECKER = parse_quiver("1->2,1->2")


# -- quivers and Euler form -----------------------------------------------------------------

def test_euler_form_examples():
    assert euler_form(jordan_quiver(), 1, 1) == 0
    for d in range(1, 5):
        assert euler_form(loop_quiver(3), d, d) == -2 * d * d
    assert euler_form(A2, (1, 0), (0, 1)) == -1
    assert euler_form(A2, (0, 1), (1, 0)) == 0


def test_double_and_triple_jordan():
    doubled, tripled = double_and_triple(jordan_quiver())
    assert doubled == loop_quiver(2)
    assert tripled == loop_quiver(3)


def test_double_and_triple_point():
    point = parse_quiver("1")
    doubled, tripled = double_and_triple(point)
    assert doubled == point
    assert tripled == jordan_quiver()


def test_parse_quiver_text_roundtrip():
    Q = parse_quiver("1-1,1->2,3")
    assert parse_quiver(Q.text()) == Q
    assert Q.loops(1) == 1


def test_parse_quiver_rejects_ambiguous_edge():
    with pytest.raises(ValueError):
        parse_quiver("1-2")


# -- finite fields ---------------------------------------------------------------------------

@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_field_axioms(q):
    F = galois_field(q)
    add, mul = F.add, F.mul
    for a in range(q):
        assert add[a, 0] == a and mul[a, 1] == a
        if a:
            assert (mul[a] == 1).sum() == 1
    assert (add == add.T).all() and (mul == mul.T).all()
    for a in range(q):
        for b in range(q):
            for c in range(q):
                assert mul[a, add[b, c]] == add[mul[a, b], mul[a, c]]


def test_gl_orders():
    assert gl_order(1, 2) == 1
    assert gl_order(2, 2) == 6
    assert gl_order(2, 3) == 48


# -- Kac counts ------------------------------------------------------------------------------

@pytest.mark.parametrize("q", [2, 3, 4, 5])
@pytest.mark.parametrize("d", [1, 2])
def test_jordan_count_is_q(q, d):
    assert kac_bruteforce(jordan_quiver(), d, q).count == q


def test_jordan_d2_q2_orbits():
    sample = kac_bruteforce(jordan_quiver(), 2, 2)
    assert sample.count == 2
    assert sample.representations == 16
    # conjugacy classes of 2x2 matrices over F_2
    assert sample.orbits == 6


def test_jordan_d3():
    assert kac_bruteforce(jordan_quiver(), 3, 2).count == 2


def test_a2_examples():
    assert kac_bruteforce(A2, (1, 1), 2).count == 1
    for q in (2, 3):
        assert kac_bruteforce(A2, (2, 0), q).count == 0
    assert kac_bruteforce(A2, (2, 1), 2).count == 0


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_kronecker_11(q):
    # P^1(F_q) worth of indecomposables
    assert kac_bruteforce(KRONECKER, (1, 1), q).count == q + 1


@pytest.mark.parametrize("q", [2, 3])
def test_three_loop_dimension_one(q):
    assert kac_bruteforce(loop_quiver(3), 1, q).count == q**3


@pytest.mark.parametrize("Q,d,q", [(jordan_quiver(), 2, 3), (A2, (1, 1), 3), (KRONECKER, (1, 1), 2),
                                   (loop_quiver(2), 2, 2)])
def test_mass_count_agrees(Q, d, q):
    assert kac_mass_count(Q, d, q) == Fraction(kac_bruteforce(Q, d, q).count)


@pytest.mark.parametrize("Q,d,q", [(jordan_quiver(), 2, 2), (A2, (1, 1), 2), (parse_quiver("1->2,2->3"), (1, 1, 1), 2)])
def test_base_change_cross_check(Q, d, q):
    assert cross_check_base_change(Q, d, q)


def test_ade_counts_match_root_multiplicities():
    A3 = parse_quiver("1->2,2->3")
    for d in [(1, 1, 1), (1, 2, 1), (0, 1, 1), (1, 0, 1)]:
        assert kac_bruteforce(A3, d, 2).count == root_multiplicities("A", 3, d)


def test_guard():
    with pytest.raises(TooLarge):
        kac_bruteforce(loop_quiver(3), 3, 5)


def test_q_restricted():
    with pytest.raises(ValueError):
        kac_bruteforce(jordan_quiver(), 1, 7)


# -- root data -------------------------------------------------------------------------------------

@pytest.mark.parametrize("type_,rank,count", [("A", 1, 1), ("A", 2, 3), ("A", 4, 10), ("D", 4, 12),
                                              ("D", 5, 20), ("E", 6, 36), ("E", 7, 63), ("E", 8, 120)])
def test_number_of_positive_roots(type_, rank, count):
    assert len(positive_roots(type_, rank)) == count


def test_root_multiplicity_examples():
    assert root_multiplicities("A", 2, (1, 1)) == 1
    assert root_multiplicities("A", 2, (2, 1)) == 0
    assert root_multiplicities("A", 1, (1,)) == 1


def test_d4_highest_root():
    assert (1, 2, 1, 1) in positive_roots("D", 4)


def test_cartan_matrix_symmetric_positive_definite():
    C = cartan_matrix("E", 8)
    assert (C == C.T).all()
    assert np.all(np.linalg.eigvalsh(C) > 0)


@pytest.mark.parametrize("type_,rank", [("A", 1), ("A", 2), ("A", 3), ("D", 4)])
def test_nminus_checks(type_, rank):
    L = build_nminus_polyD(type_, rank, 2)
    assert L.check_jacobi()
    assert L.check_derivations()
    assert L.check_heisenberg()


def test_nminus_a2_bracket():
    L = build_nminus_polyD("A", 2, 2)
    F1, F2 = {((1, 0), 0): Fraction(1)}, {((0, 1), 1): Fraction(1)}
    assert L.bracket(F1, F2) == {((1, 1), 1): Fraction(-1)}


def test_nminus_dims_per_weight():
    L = build_nminus_polyD("A", 2, 3)
    assert L.dims_by_weight() == {(1, 0): 4, (0, 1): 4, (1, 1): 4}


# -- BPS degrees ------------------------------------------------------------------------------

def test_kac_to_bps_examples():
    assert kac_to_bps_character([0, 1]) == [(-2, 1)]
    assert kac_to_bps_character([1]) == [(0, 1)]
    assert kac_to_bps_character([0]) == []
    assert kac_to_bps_character({2: 1, 0: 3}) == [(-4, 1), (0, 3)]


def test_kac_to_bps_rejects_negative():
    with pytest.raises(ValueError):
        kac_to_bps_character([1, -1])
