import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import box_points, lattice_member, random_ideal
from seminorm.ideals import (
    BoxCertificationError,
    MonomialIdeal,
    contains,
    default_box,
    exponents_in_box,
    integral_closure,
    power_contains,
)
from seminorm.lattice import carrier_face
from seminorm.weak import (
    CharSpec,
    OracleVerdict,
    face_group,
    in_weak_closure_char0,
    is_prime,
    star_face,
    weak_closure_char0,
    weak_closure_charp,
    wsi_membership_oracle_char0,
)

RUNNING = MonomialIdeal([(6, 0), (2, 4), (0, 6)])

gen2 = st.tuples(st.integers(0, 6), st.integers(0, 6)).filter(any)
ideal2 = st.lists(gen2, min_size=1, max_size=4).map(MonomialIdeal).filter(lambda I: not I.is_unit)


def edge_family(n):
    return MonomialIdeal([(n, 0), (2, n - 2), (0, n)])


def oblique_edge(I):
    return next(F for F in I.newton_polyhedron.faces if F.dim == 1 and F.is_bounded)


def test_charspec_and_primes():
    assert CharSpec(0).exponent == 1 and CharSpec(7).exponent == 7
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]
    with pytest.raises(ValueError):
        CharSpec(4)
    with pytest.raises(ValueError):
        CharSpec(-3)


def test_running_example_weak_closure():
    W = weak_closure_char0(RUNNING)
    assert W.generators == ((0, 6), (2, 4), (4, 2), (6, 0))
    added = exponents_in_box(W, (7, 7)) - exponents_in_box(RUNNING, (7, 7))
    assert added == {(4, 2), (4, 3), (5, 2), (5, 3)}
    assert in_weak_closure_char0(RUNNING, (4, 2))
    assert not in_weak_closure_char0(RUNNING, (1, 5))
    assert not in_weak_closure_char0(RUNNING, (3, 3))


def test_face_group_of_oblique_edge():
    F = oblique_edge(RUNNING)
    G = face_group(RUNNING, F)
    assert (4, 2) in G and (3, 3) not in G and (2, 4) in G


@pytest.mark.parametrize("n, members", [
    (5, [(1, 4), (2, 3), (3, 2), (4, 1)]),
    (6, [(2, 4), (4, 2)]),
    (7, [(1, 6), (2, 5), (3, 4), (4, 3), (5, 2), (6, 1)]),
    (8, [(2, 6), (4, 4), (6, 2)]),
])
def test_star_face_edge_family(n, members):
    I = edge_family(n)
    result = star_face(I, oblique_edge(I))
    assert sorted(result.members) == members


def test_star_face_rejects_foreign_face():
    other = MonomialIdeal([(3, 0), (0, 3)])
    with pytest.raises(ValueError):
        star_face(RUNNING, oblique_edge(other))


@settings(max_examples=30)
@given(ideal2)
def test_face_group_matches_gamma_points_on_face(I):
    # the box reaches one step past every generator, so each ray direction shows up
    P = I.newton_polyhedron
    box = default_box(I)
    for F in P.faces:
        on_face = [p for p in box_points(tuple(b + 1 for b in box))
                   if contains(I, p) and F.active <= P.active_set(p)]
        G = face_group(I, F)
        for v in [(1, 0), (0, 1), (1, -1), (2, 1), (3, -3), (1, 1)]:
            assert (v in G) == lattice_member(on_face, v, 2)


@given(ideal2)
def test_weak_closure_sandwich_and_idempotence(I):
    W = weak_closure_char0(I)
    C = integral_closure(I)
    assert I <= W <= C
    assert weak_closure_char0(W) == W


@given(ideal2)
def test_weak_closure_pointwise_agrees_with_box(I):
    W = weak_closure_char0(I)
    for p in box_points(default_box(I)):
        assert contains(W, p) == in_weak_closure_char0(I, p)


def test_weak_closure_box_too_small():
    with pytest.raises(BoxCertificationError) as info:
        weak_closure_char0(RUNNING, box=(4, 4))
    assert info.value.box == (4, 4)


def test_char_two_closure_is_integral_closure():
    W, certified = weak_closure_charp(RUNNING, 2)
    assert certified and W == integral_closure(RUNNING)
    # (5,1) needs m = 2: 4 (5,1) = (20,4) lies in I^4, while 2 (5,1) is not in I^2
    assert not power_contains(RUNNING, 2, (10, 2)) and power_contains(RUNNING, 4, (20, 4))


def test_char_p_small_bound_is_uncertified():
    W, certified = weak_closure_charp(RUNNING, 2, m_max=1)
    assert not certified
    assert RUNNING <= W <= integral_closure(RUNNING)
    assert contains(W, (1, 5)) and not contains(W, (5, 1))


def test_char_p_rejects_bad_arguments():
    with pytest.raises(ValueError):
        weak_closure_charp(RUNNING, 6)
    with pytest.raises(ValueError):
        weak_closure_charp(RUNNING, 2, m_max=-1)


def test_char_three_running_example():
    W, certified = weak_closure_charp(RUNNING, 3)
    # every char-0 member has x^(n gamma) in I^n for large n, so some power of 3 works
    assert RUNNING <= W <= integral_closure(RUNNING)
    assert weak_closure_char0(RUNNING) <= W


def test_char_p_accepts_high_power_members():
    rng = random.Random(7)
    for _ in range(10):
        I = MonomialIdeal(random_ideal(rng, max_coord=6))
        if I.is_unit:
            continue
        W, _ = weak_closure_charp(I, 2, m_max=3)
        C = integral_closure(I)
        for p in box_points(default_box(I)):
            if contains(C, p) and all(power_contains(I, m, tuple(m * x for x in p)) for m in range(1, 9)):
                assert contains(W, p)


def test_oracle_verdicts():
    assert wsi_membership_oracle_char0(RUNNING, (4, 2), 20, 40).all_pass
    v = wsi_membership_oracle_char0(RUNNING, (1, 5), 20, 40)
    assert not v.all_pass and 20 <= v.failed_at <= 40
    assert repr(wsi_membership_oracle_char0(RUNNING, (2, 4), 1, 9)) == "AllPass"
    assert repr(OracleVerdict(21)) == "FailsAt(21)"
    assert wsi_membership_oracle_char0(RUNNING, (1, 5), 20, 40) == OracleVerdict(21)
    with pytest.raises(ValueError):
        wsi_membership_oracle_char0(RUNNING, (1, 5), 5, 4)


def test_carrier_faces_of_added_points_are_on_edge():
    P = RUNNING.newton_polyhedron
    assert carrier_face(P, (4, 2)).dim == 1
    assert carrier_face(P, (5, 3)).dim == 2
