import itertools
import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from gzschubert import parabox as B

boxes = st.integers(1, 5).flatmap(
    lambda m: st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)).map(sorted), min_size=m, max_size=m)
).map(lambda pairs: B.Parallelepiped(tuple(a for a, _ in pairs), tuple(b for _, b in pairs)))

laurent = st.dictionaries(st.integers(-6, 6), st.integers(-4, 4), max_size=5).map(B.clean)


def test_s_pi_examples():
    assert B.s_pi(B.Parallelepiped((0,), (1,))) == {0: 1, 1: 1}
    assert B.s_pi(B.Parallelepiped((0, 0), (1, 1))) == {0: 1, 1: 2, 2: 1}
    assert B.s_pi(B.Parallelepiped((2,), (2,))) == {2: 1}


def test_parallelepiped_validation():
    with pytest.raises(ValueError):
        B.Parallelepiped((1,), (0,))


def test_star_dual_examples():
    assert B.star_dual({0: 1, 1: 1}, 1) == {0: 1, 1: 1}
    assert B.star_dual({0: 1}, 3) == {3: 1}
    assert B.star_dual({0: 1, 1: 2, 2: 1}, 2) == {0: 1, 1: 2, 2: 1}


def test_t_operator_examples():
    # S_Gamma for Gamma = {0} x [0,1] inside [0,1]^2
    assert B.t_operator({0: 1, 1: 1}, 2) == {0: 1, 1: 2, 2: 1}
    assert B.t_operator({0: 1}, 0) == {0: 1}
    once = B.t_operator({0: 1, 1: 1}, 2)
    assert B.t_operator(once, 2) == once


@settings(max_examples=200, deadline=None)
@given(boxes)
def test_sum_formula_duality_and_face_recursion(box):
    f = B.s_pi(box)
    assert f == B.s_pi_product(box) == B.s_pi_enumerate(box)
    assert B.star_dual(f, box.C) == f
    assert B.t_operator(B.s_pi(box.lower_face()), box.C) == f


@settings(max_examples=200, deadline=None)
@given(laurent, st.integers(-8, 8))
def test_t_idempotent_and_star_involution(f, C):
    assert B.star_dual(B.star_dual(f, C), C) == f
    Tf = B.t_operator(f, C)
    assert B.t_operator(Tf, C) == Tf


def test_laurent_division_is_exact_or_raises():
    assert B.ldivide({0: 1, 2: -1}, {0: 1, 1: -1}) == {0: 1, 1: 1}
    with pytest.raises(ArithmeticError):
        B.ldivide({0: 1, 1: 1}, {0: 1, 1: -1})


def test_decomposition_examples():
    p = "000" + "111*00" + "*00" + "11*" + "*" + "111"
    boxes_ = B.decompose_paraboxes(p)
    assert boxes_.initial == "000"
    assert boxes_.introns == ("111*00", "*00", "11*", "*")
    assert boxes_.final == "111"
    assert boxes_.join() == p
    assert B.decompose_paraboxes("00") == B.Paraboxes("00", (), "")
    assert B.decompose_paraboxes("*") == B.Paraboxes("", ("*",), "")
    with pytest.raises(ValueError):
        B.decompose_paraboxes("10")


@pytest.mark.parametrize("m", range(0, 7))
def test_decomposition_round_trip(m):
    for p in B.all_reduced_diagrams(m):
        assert B.decompose_paraboxes(p).join() == p


def test_l_class_examples():
    assert B.l_class("*0") == {"*0", "1*"}
    assert B.l_class("00") == {"00"}
    assert len(B.l_class("*0*0")) == 4


@pytest.mark.parametrize("m", range(1, 7))
def test_l_classes_are_intron_products(m):
    for A in B.all_l_classes(m):
        boundaries = {B.decompose_paraboxes(p).boundaries() for p in A}
        assert len(boundaries) == 1
        assert all(B.l_class_product(p) == A for p in A)


def test_paramitosis_examples():
    assert B.paramitosis("00*0") == {"*0*0", "1**0"}
    assert B.paramitosis("1*") == frozenset()
    assert B.paramitosis("0") == {"*"}


def test_simplex_vertex_examples():
    assert B.simplex_vertices(B.l_class("*")) == {"0", "1"}
    assert B.simplex_vertices(B.l_class("00")) == {"00"}
    counts = [0] * 4
    for A in B.all_l_classes(3):
        counts[len(B.simplex_vertices(A)) - 1] += 1
    assert counts == [4, 6, 4, 1]


@pytest.mark.parametrize("m", range(1, 7))
def test_cubic_bijection(m):
    classes = B.all_l_classes(m)
    verts = [B.simplex_vertices(A) for A in classes]
    assert len(set(verts)) == len(classes) == 2 ** (m + 1) - 1
    for k in range(m + 1):
        assert sum(1 for v in verts if len(v) == k + 1) == math.comb(m + 1, k + 1)
    for A, v in zip(classes, verts):
        assert B.class_of_vertices(v) == A


@pytest.mark.parametrize("m", [1, 2, 3])
def test_intersections_of_classes(m):
    box = B.Parallelepiped((0,) * m, (2,) * m)
    classes = B.all_l_classes(m)

    def pts(A):
        return set().union(*(B.face_points(p, box) for p in A))

    for A1, A2 in itertools.combinations(classes, 2):
        common = B.simplex_vertices(A1) & B.simplex_vertices(A2)
        inter = pts(A1) & pts(A2)
        assert inter == (pts(B.class_of_vertices(common)) if common else set())


def test_sc_sum_examples():
    box = B.Parallelepiped((0, 0), (1, 1))
    assert B.sc_sum(["11"], box) == {2: 1}
    assert B.sc_sum(["*0"], box) == {0: 1, 1: 1}
    assert B.sc_sum(["*0", "1*"], box) == {0: 1, 1: 1, 2: 1}
    with pytest.raises(ValueError):
        B.sc_sum(["*"], B.Parallelepiped((1,), (1,)))


def test_paramitosis_of_class_is_class():
    for m in range(1, 6):
        for A in B.all_l_classes(m):
            if next(iter(A)).startswith("0"):
                M = B.paramitosis_class(A)
                assert M == B.l_class(next(iter(M)))


def _strict_box(rng, m):
    pairs = [sorted(rng.sample(range(-3, 4), 2)) for _ in range(m)]
    return B.Parallelepiped(tuple(a for a, _ in pairs), tuple(b for _, b in pairs))


@pytest.mark.parametrize("seed", range(20))
def test_paramitosis_sum_rule(seed):
    rng = random.Random(seed)
    m = rng.randint(1, 5)
    box = _strict_box(rng, m)
    for A in B.all_l_classes(m):
        p = next(iter(A))
        if not p.startswith("0"):
            continue
        M = B.paramitosis_class(A)
        assert B.sc_sum(M, box) == B.t_operator(B.sc_sum(A, box), B.image_constant(p, box))
        if not B.decompose_paraboxes(p).final:
            assert B.image_constant(p, box) == box.C


def test_final_parabox_shifts_the_constant():
    # with trailing 1s the operator of the whole box is the wrong one
    box = B.Parallelepiped((-3, -3), (1, -1))
    A = B.l_class("01")
    M = B.paramitosis_class(A)
    assert M == {"*1"}
    assert B.sc_sum(M, box) != B.t_operator(B.sc_sum(A, box), box.C)
    assert B.sc_sum(M, box) == B.t_operator(B.sc_sum(A, box), B.image_constant("01", box))


def test_json_round_trip():
    f = {-2: 3, 0: 1, 5: -1}
    data = B.to_json(f)
    assert [d["exp"] for d in data] == sorted(f)
    assert B.from_json(data) == f


def test_closure_and_containment():
    assert B.closure(["*0"]) == {"00", "10", "*0"}
    assert B.face_contains("*0", "10")
    assert not B.face_contains("*0", "11")
