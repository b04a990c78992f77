import pytest
from hypothesis import given, settings, strategies as st

from gzschubert import chars as C
from gzschubert import mitosis as M
from gzschubert import perm as P
from gzschubert.gzface import dual_kogan_vertex, enumerate_reduced_kogan, kogan_vertex, lattice_points

WEIGHTS = [(0, 1), (0, 1, 2), (0, 2, 5), (0, 1, 2, 3), (0, 1, 3, 6)]

characters = st.dictionaries(
    st.tuples(st.integers(-3, 6), st.integers(-3, 6)), st.integers(-3, 3).filter(bool), max_size=6
)


def test_weight_of_pattern_examples():
    assert C.weight_of_pattern(lattice_points((0, 1, 2), kogan_vertex(3))[0]) == (1, 0)
    assert C.weight_of_pattern(((0, 1, 2), (1, 2), (2,))) == (3, 2)
    assert lattice_points((0, 1, 2), dual_kogan_vertex(3)) == [((0, 1, 2), (1, 2), (2,))]
    assert C.weight_of_pattern(((0, 1), (0,))) == (0,)


def test_character_of_faces_examples():
    assert C.total(C.character_of_faces((0, 1, 2))) == 8
    assert C.character_of_faces((0, 1, 2), [kogan_vertex(3)]) == {(1, 0): 1}
    assert C.total(C.character_of_faces((0, 1, 2), enumerate_reduced_kogan(3, (1, 3, 2)))) == 5


def test_s_action_examples():
    assert C.s_action(1, {(1, 0): 1}, 3) == {(2, 0): 1}
    assert C.s_action(2, {(3, 2): 1}, 3) == {(3, 1): 1}


@given(characters, st.integers(1, 2), st.integers(-4, 8))
def test_s_action_is_involution(c, i, u0):
    assert C.s_action(i, C.s_action(i, c, u0), u0) == c


def test_demazure_operator_examples():
    # fixed point of s_1 when u_0 = 2 and u_1 = 1
    assert C.demazure_T(1, "minus", {(1,): 1}, 2) == {(1,): 1}
    assert C.demazure_T(1, "minus", {(0,): 1}, 1) == {(0,): 1, (1,): 1}
    once = C.demazure_T(1, "minus", {(0,): 1}, 1)
    assert C.demazure_T(1, "minus", once, 1) == once


@settings(max_examples=100, deadline=None)
@given(characters, st.integers(1, 2), st.integers(-4, 8), st.sampled_from(["plus", "minus"]))
def test_demazure_operator_clears_denominators_and_is_idempotent(c, i, u0, sign):
    # demazure_T itself checks (1 - e^a) T f = f - e^a s_i f
    once = C.demazure_T(i, sign, c, u0)
    assert C.demazure_T(i, sign, once, u0) == once


def test_demazure_operator_rejects_bad_sign():
    with pytest.raises(ValueError):
        C.demazure_T(1, "both", {(0,): 1}, 1)


def test_demazure_character_examples():
    assert C.demazure_character((0, 1, 2), (3, 2, 1)) == {(1, 0): 1}
    assert C.total(C.demazure_character((0, 1, 2), (1, 2, 3))) == 8
    a = C.demazure_character((0, 1, 2), (1, 3, 2), "faces")
    b = C.demazure_character((0, 1, 2), (1, 3, 2), "operators")
    assert a == b and C.total(a) == 5


@pytest.mark.parametrize("lam", WEIGHTS)
def test_faces_equal_operators(lam):
    for w in P.all_perms(len(lam)):
        assert C.demazure_character(lam, w, "faces") == C.demazure_character(lam, w, "operators")


@pytest.mark.parametrize("lam", WEIGHTS)
def test_dual_faces_and_w0_twist(lam):
    n = len(lam)
    w0 = P.longest(n)
    for w in P.all_perms(n):
        upper = C.demazure_character(lam, P.multiply(w0, w), "faces")
        assert C.demazure_character(lam, w, "dual_faces") == C.w_action(w0, upper, sum(lam))


@pytest.mark.parametrize("lam", [(0, 1, 2), (0, 2, 5), (0, 1, 3, 6)])
def test_operator_route_is_word_independent(lam):
    n = len(lam)
    w0 = P.longest(n)
    for w in P.all_perms(n):
        v = P.multiply(w0, w)
        values = [C.demazure_operators(lam, w, word) for word in P.reduced_words(v)]
        assert all(x == values[0] for x in values)


@pytest.mark.parametrize("lam", WEIGHTS)
def test_whole_character_is_symmetric(lam):
    whole = C.character_of_faces(lam)
    for i in range(1, len(lam)):
        assert C.s_action(i, whole, sum(lam)) == whole


@pytest.mark.parametrize("lam", WEIGHTS)
def test_weyl_dimension_oracle(lam):
    assert C.total(C.demazure_character(lam, P.identity(len(lam)))) == C.weyl_dimension(lam)


@pytest.mark.parametrize("lam", WEIGHTS)
def test_kempf_case(lam):
    for w in P.all_perms(len(lam)):
        faces = enumerate_reduced_kogan(len(lam), w)
        if len(faces) == 1:
            assert C.demazure_character(lam, w) == C.character_of_faces(lam, faces)


@pytest.mark.parametrize("lam", [(0, 1), (0, 1, 2), (0, 2, 5), (0, 1, 3, 6)])
def test_demazure_operator_matches_mitosis(lam):
    n = len(lam)
    for w in P.all_perms(n):
        faces = enumerate_reduced_kogan(n, w)
        for i in range(1, n):
            if P.left_descent(w, i):
                lhs = C.demazure_T(i, "minus", C.character_of_faces(lam, faces), sum(lam))
                assert lhs == C.character_of_faces(lam, M.mitosis_of_set(faces, i))


def test_hilbert_examples():
    lam = (0, 1, 2)
    assert C.hilbert_function(lam, (1, 2, 3), 2) == 27
    assert [C.hilbert_function(lam, (3, 2, 1), k) for k in (1, 2, 3)] == [1, 1, 1]
    assert C.hilbert_function(lam, (1, 3, 2), 1) == 5
    with pytest.raises(ValueError):
        C.hilbert_function(lam, (1, 2, 3), 0)


def test_json_round_trip():
    c = C.demazure_character((0, 2, 5), (1, 3, 2))
    data = C.to_json(c)
    assert [d["u"] for d in data] == sorted(d["u"] for d in data)
    assert C.from_json(data) == c


def test_rank_mismatch():
    with pytest.raises(ValueError):
        C.demazure_character((0, 1, 2), (2, 1))
    with pytest.raises(ValueError):
        C.demazure_character((0, 1, 2), (1, 2, 3), "bogus")
