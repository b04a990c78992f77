import pytest

from gzschubert import mitosis as M
from gzschubert import parabox as B
from gzschubert import perm as P
from gzschubert.gzface import FaceDiagram, enumerate_reduced_kogan, face_perm, is_reduced_face, lattice_points


def F(n, *cols):
    """Kogan face from (row, column) pairs in the mitosis convention."""
    return FaceDiagram.of(n, [(r - 1, c, "L") for r, c in cols])


W0_FACE = F(3, (1, 1), (1, 2), (2, 1))
# row 1 with edges in columns 1, 2, 4 and nothing below: fiber paradiagram 00*0
FIGURE_FACE = F(5, (1, 1), (1, 2), (1, 4))


def test_w0_face_offspring():
    assert M.mirror_mitosis(W0_FACE, 1) == [F(3, (1, 1), (2, 1))]
    assert face_perm(F(3, (1, 1), (2, 1))) == P.multiply(P.simple(3, 1), P.longest(3))


def test_no_first_column_edge_gives_nothing():
    face = F(4, (1, 2), (2, 2))
    assert is_reduced_face(face)
    assert M.mirror_mitosis(face, 1) == []


def test_figure_face():
    assert M.fiber_paradiagram(FIGURE_FACE, 1) == "00*0"
    kids = M.mirror_mitosis(FIGURE_FACE, 1)
    assert len(kids) == 2
    assert sorted(M.fiber_paradiagram(G, 1) for G in kids) == sorted(B.paramitosis("00*0"))


def test_mitosis_rejects_bad_input():
    with pytest.raises(ValueError):
        M.mirror_mitosis(F(3, (1, 2), (2, 1)), 1)  # word 2,2 is not reduced
    with pytest.raises(ValueError):
        M.mirror_mitosis(W0_FACE, 3)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_mitosis_generates_faces_of_si_w(n):
    for w in P.all_perms(n):
        faces = enumerate_reduced_kogan(n, w)
        for i in range(1, n):
            if P.left_descent(w, i):
                got = M.mitosis_of_set(faces, i)
                assert got == enumerate_reduced_kogan(n, P.multiply(P.simple(n, i), w))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_offspring_count_and_paramitosis(n):
    for w in P.all_perms(n):
        for face in enumerate_reduced_kogan(n, w):
            for i in range(1, n):
                kids = M.mirror_mitosis(face, i)
                k = M.initial_run(face, i)
                kp = sum(M.has_edge(face, i + 1, c) for c in range(1, k + 1))
                assert len(kids) == k - kp
                p = M.fiber_paradiagram(face, i)
                assert B.is_reduced(p)
                # fibers never end in 1: the last column of row i+1 does not exist
                assert not B.decompose_paraboxes(p).final
                assert sorted(M.fiber_paradiagram(G, i) for G in kids) == sorted(B.paramitosis(p))


def test_fiber_examples():
    assert M.fiber_diagonals(W0_FACE, 1) == [(1, 1), (1, 0)]
    assert M.fiber_paradiagram(W0_FACE, 1) == "0"
    assert M.fiber_paradiagram(F(4), 1) == "***"


def test_fiber_box_matches_combinatorial_paradiagram():
    lam = (0, 2, 5, 9)
    for w in P.all_perms(4):
        for face in enumerate_reduced_kogan(4, w):
            for i in range(1, 4):
                for z in lattice_points(lam, face):
                    got = M.fiber_box(face, i, z)
                    assert got is not None
                    box, diagram = got
                    assert len(diagram) == box.m
                    if all(a < b for a, b in zip(box.mu, box.nu)) and box.m == len(M.fiber_paradiagram(face, i)):
                        assert diagram == M.fiber_paradiagram(face, i)


def test_ladder_examples():
    a, b = F(3, (2, 1)), F(3, (1, 2))
    assert M.ladder_moves(b, 1) == [a]
    assert M.inverse_ladder_moves(a, 1) == [b]
    assert M.ladder_moves(F(3), 1) == []


@pytest.mark.parametrize("n", [3, 4, 5])
def test_ladder_moves_preserve_permutation(n):
    for w in P.all_perms(n):
        for face in enumerate_reduced_kogan(n, w):
            for i in range(1, n):
                for G in M.ladder_moves(face, i):
                    assert face_perm(G) == w and is_reduced_face(G)
                    assert face in M.inverse_ladder_moves(G, i)


@pytest.mark.parametrize("n", [3, 4])
def test_global_witness(n):
    for w in P.all_perms(n):
        for i in range(1, n):
            if not P.left_descent(w, i):
                continue
            for face in enumerate_reduced_kogan(n, w):
                if M.fiber_paradiagram(face, i).startswith("0"):
                    continue
                G = M.global_witness(face, i)
                assert M.is_witness(face, G, i)


def test_literal_construction_can_miss():
    # the exchange-property face is not always a witness; a search finds one
    face = F(4, (1, 2), (1, 3), (2, 2))
    assert face_perm(face) == (1, 4, 3, 2)
    literal = M.literal_witness(face, 2)
    assert not M.is_witness(face, literal, 2)
    assert M.global_witness(face, 2) == F(4, (1, 2), (2, 1), (2, 2))


def test_literal_witness_preconditions():
    with pytest.raises(ValueError):
        M.literal_witness(W0_FACE, 1)  # initial parabox already nonempty
