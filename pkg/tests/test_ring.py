import itertools
import random
from fractions import Fraction

import pytest

from gzschubert import perm as P
from gzschubert import ring as R
from gzschubert.gzface import face_volume
from gzschubert.poly import Poly, schubert

S1, S2 = (2, 1, 3), (1, 3, 2)
S1S2, S2S1, W0 = (2, 3, 1), (3, 1, 2), (3, 2, 1)


def d(n, i):
    return Poly.var(n, i - 1)


def test_volume_polynomial_examples():
    assert R.volume_polynomial(2) == d(2, 2) - d(2, 1)
    a, b, c = d(3, 1), d(3, 2), d(3, 3)
    assert R.volume_polynomial(3) == (b - a) * (c - b) * (c - a) * Fraction(1, 2)
    assert R.volume_polynomial(3).evaluate((0, 1, 2)) == 1


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_volume_polynomial_invariants(n):
    vol = R.volume_polynomial(n)
    assert vol.is_homogeneous() and vol.degree() == n * (n - 1) // 2
    assert not sum((vol.partial(i) for i in range(n)), Poly(n))


@pytest.mark.parametrize("lam", [(0, 1), (0, 1, 2), (0, 2, 5), (0, 1, 2, 3), (0, 1, 3, 6), (-1, 0, 4, 5)])
def test_volume_polynomial_matches_face_volume(lam):
    assert Fraction(R.volume_polynomial(len(lam)).evaluate(lam)) == face_volume(lam)


def test_schubert_operator_examples():
    assert R.schubert_operator(3, S1) == -d(3, 1)
    assert R.schubert_operator(3, W0) == -(d(3, 1) ** 2 * d(3, 2))
    assert R.schubert_operator(3, (1, 2, 3)) == Poly.const(3, 1)


def test_degree_polynomial_examples():
    assert R.degree_polynomial(3, (1, 2, 3)) == R.volume_polynomial(3)
    for n in (2, 3, 4):
        assert R.degree_polynomial(n, P.longest(n)) == Poly.const(n, 1)
    assert R.degree_polynomial(3, S1, "operator", (0, 1, 2)) == Fraction(3, 2)
    assert R.degree_polynomial(3, S1, "volume", (0, 1, 2)) == Fraction(3, 2)
    assert R.degree_polynomial(3, S1, "dual_volume", (0, 1, 2)) == Fraction(3, 2)
    assert R.degree((0, 1, 2), (1, 2, 3)) == 6
    with pytest.raises(ValueError):
        R.degree_polynomial(3, S1, "volume")


def test_pairing_examples():
    op = R.schubert_operator
    assert R.pairing([op(3, W0)]) == 1
    assert R.pairing([op(3, S1), op(3, S1S2)]) == 1
    assert R.pairing([op(3, S1), op(3, S2S1)]) == 0
    with pytest.raises(ValueError):
        R.pairing([op(3, S1)])


@pytest.mark.parametrize("n", [2, 3, 4])
def test_orthonormality(n):
    w0 = P.longest(n)
    for u, v in itertools.product(P.all_perms(n), repeat=2):
        if P.length(u) + P.length(v) == n * (n - 1) // 2:
            assert R.schubert_pairing(n, u, v) == (1 if v == P.multiply(w0, u) else 0)


def test_structure_constant_examples():
    assert R.structure_constant(3, S1, S2, S1S2) == 1
    assert R.structure_constant(3, S1, S1, S2S1) == 1
    assert R.structure_constant(3, S1, S1, S1S2) == 0
    for w in P.all_perms(3):
        assert R.structure_constant(3, w, (1, 2, 3), w) == 1
    with pytest.raises(ValueError):
        R.structure_constant(3, S1, S1, W0)


def test_expansion_oracle():
    # x1 * (x1 + x2) = S_{s2 s1} + S_{s1 s2}
    prod = schubert(S1, 3) * schubert(S2, 3)
    assert R.schubert_expansion(prod) == {S1S2: 1, S2S1: 1}
    # x1^3 leaves S_3 and needs a fourth strand
    assert R.schubert_expansion(d(3, 1) ** 3) == {(4, 1, 2, 3): 1}


@pytest.mark.parametrize("n", [2, 3, 4])
def test_structure_constants_against_expansion(n):
    perms = P.all_perms(n)
    for w, u, v in itertools.product(perms, repeat=3):
        if P.length(w) + P.length(u) == P.length(v):
            c = R.structure_constant(n, w, u, v)
            assert c >= 0
            assert c == R.structure_constant(n, u, w, v) == R.structure_constant_expansion(n, w, u, v)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_monk(n):
    perms = P.all_perms(n)
    for r in range(1, n):
        for w in perms:
            lhs = sorted(
                v for v in perms
                if P.length(v) == P.length(w) + 1 and R.structure_constant(n, P.simple(n, r), w, v)
            )
            assert lhs == R.monk(n, r, w)


def test_richardson_examples():
    assert R.richardson_vertex_count(3, (0, 1, 2), W0, (1, 2, 3)) == 1
    assert R.richardson_vertex_count(3, (0, 1, 2), S1S2, S1) == 1
    with pytest.raises(ValueError):
        R.richardson_vertex_count(3, (0, 1, 2), S1, S1)


def test_richardson_two_candidates_one_vertex():
    lam = (0, 1, 2)
    pairs = R.richardson_pairs(3, S1S2, S1)
    assert len(pairs) == 2
    vertices = [R.solve_vertex(lam, F.union(G)) for F, G in pairs]
    assert sorted(v is not None for v in vertices) == [False, True]
    assert [v for v in vertices if v] == [((0, 1, 2), (0, 1), (1,))]


@pytest.mark.parametrize("lam", [(0, 1, 2), (0, 2, 5), (-3, 1, 4)])
def test_richardson_n3_exhaustive(lam):
    for w, u in itertools.product(P.all_perms(3), repeat=2):
        if P.length(w) + P.length(u) == 3:
            rep = R.richardson_report(3, lam, w, u)
            assert rep["agree"], rep


def test_richardson_n4_sample():
    pairs = [(w, u) for w in P.all_perms(4) for u in P.all_perms(4) if P.length(w) + P.length(u) == 6]
    for w, u in random.Random(1).sample(pairs, 30):
        rep = R.richardson_report(4, (0, 1, 3, 6), w, u)
        assert rep["agree"], rep
