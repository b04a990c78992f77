"""Gelfand-Zetlin patterns and the faces of the GZ polytope.

Coordinates are ``lam[i][j]`` for rows ``i = 0..n-1`` and ``j = 1..n-i``; row 0
is the fixed weight ``lambda_1 < ... < lambda_n``. Interlacing reads
``lam[i-1][j] <= lam[i][j] <= lam[i-1][j+1]``.

A face is a set of edges ``(i, j, kind)``:

* ``"L"``: ``lam[i][j] == lam[i+1][j]`` (facet Gamma_{i,j}), ``1 <= j <= n-i-1``
* ``"R"``: ``lam[i][j] == lam[i+1][j-1]`` (facet Gamma^-_{i,j}), ``2 <= j <= n-i``

Pure L faces are Kogan faces, pure R faces are dual Kogan faces.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from . import perm as P
from .poly import Poly, lagrange_coefficients

Edge = tuple[int, int, str]
Pattern = tuple[tuple[int, ...], ...]


def check_weight(lam: Sequence[int]) -> tuple[int, ...]:
    lam = tuple(int(x) for x in lam)
    if len(lam) < 1 or any(a >= b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"weight must be strictly increasing: {lam}")
    return lam


def dim(n: int) -> int:
    return n * (n - 1) // 2


def edge_in_range(n: int, edge: Edge) -> bool:
    i, j, kind = edge
    if kind == "L":
        return 0 <= i <= n - 2 and 1 <= j <= n - i - 1
    if kind == "R":
        return 0 <= i <= n - 2 and 2 <= j <= n - i
    return False


@dataclass(frozen=True)
class FaceDiagram:
    n: int
    edges: frozenset[Edge]

    def __post_init__(self):
        edges = frozenset((int(i), int(j), str(k)) for i, j, k in self.edges)
        object.__setattr__(self, "edges", edges)
        for e in edges:
            if not edge_in_range(self.n, e):
                raise ValueError(f"edge {e} out of range for n={self.n}")

    @classmethod
    def of(cls, n: int, edges: Iterable[Sequence]) -> FaceDiagram:
        return cls(n, frozenset(tuple(e) for e in edges))

    @property
    def kinds(self) -> set[str]:
        return {k for _, _, k in self.edges}

    @property
    def is_kogan(self) -> bool:
        return self.kinds <= {"L"}

    @property
    def is_dual(self) -> bool:
        return self.kinds <= {"R"}

    def sort_key(self):
        return (len(self.edges), sorted(self.edges))

    def mirror(self) -> FaceDiagram:
        """Reflect the diagram in a vertical line (Kogan <-> dual Kogan)."""
        n = self.n
        out = set()
        for i, j, k in self.edges:
            if k == "L":
                out.add((i, n - i - j + 1, "R"))
            else:
                out.add((i, n - i - j + 1, "L"))
        return FaceDiagram(n, frozenset(out))

    def union(self, other: FaceDiagram) -> FaceDiagram:
        """The face cut out by both equation systems (intersection of faces)."""
        return FaceDiagram(self.n, self.edges | other.edges)

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in sorted(self.edges)]}

    @classmethod
    def from_json(cls, data: dict) -> FaceDiagram:
        return cls.of(data["n"], data["edges"])


def whole(n: int) -> FaceDiagram:
    return FaceDiagram(n, frozenset())


def kogan_edges(n: int) -> list[Edge]:
    """L-edges in reading order: bottom row first, left to right."""
    return [(i, j, "L") for i in range(n - 2, -1, -1) for j in range(1, n - i)]


def dual_edges(n: int) -> list[Edge]:
    """R-edges in reading order: bottom row first, right to left."""
    return [(i, j, "R") for i in range(n - 2, -1, -1) for j in range(n - i, 1, -1)]


def kogan_vertex(n: int) -> FaceDiagram:
    return FaceDiagram(n, frozenset(kogan_edges(n)))


def dual_kogan_vertex(n: int) -> FaceDiagram:
    return FaceDiagram(n, frozenset(dual_edges(n)))


def edge_letter(n: int, edge: Edge) -> int:
    i, j, kind = edge
    return i + j if kind == "L" else n - j + 1


def face_word(F: FaceDiagram) -> P.Word:
    if F.is_kogan:
        order = kogan_edges(F.n)
    elif F.is_dual:
        order = dual_edges(F.n)
    else:
        raise ValueError("face word is defined only for Kogan or dual Kogan faces")
    return tuple(edge_letter(F.n, e) for e in order if e in F.edges)


def face_perm(F: FaceDiagram) -> P.Perm:
    return P.product_of_word(F.n, face_word(F))


def is_reduced_face(F: FaceDiagram) -> bool:
    return P.is_reduced(F.n, face_word(F))


@lru_cache(maxsize=None)
def _reduced_faces_by_perm(n: int, dual: bool) -> dict[P.Perm, tuple[FaceDiagram, ...]]:
    order = dual_edges(n) if dual else kogan_edges(n)
    letters = [edge_letter(n, e) for e in order]
    found: dict[P.Perm, list[FaceDiagram]] = {}

    # depth-first over edge subsets in reading order; prune non-reduced prefixes
    def walk(pos: int, w: list[int], chosen: list[Edge]):
        if pos == len(order):
            found.setdefault(tuple(w), []).append(FaceDiagram(n, frozenset(chosen)))
            return
        walk(pos + 1, w, chosen)
        a = letters[pos]
        if w[a - 1] < w[a]:
            w[a - 1], w[a] = w[a], w[a - 1]
            chosen.append(order[pos])
            walk(pos + 1, w, chosen)
            chosen.pop()
            w[a - 1], w[a] = w[a], w[a - 1]

    walk(0, list(range(1, n + 1)), [])
    return {w: tuple(sorted(fs, key=FaceDiagram.sort_key)) for w, fs in found.items()}


def enumerate_reduced_kogan(n: int, w: P.Perm, dual: bool = False) -> list[FaceDiagram]:
    """All reduced Kogan (or dual Kogan) faces F with ``w(F) == w``, canonically sorted."""
    w = P.check_perm(w)
    if len(w) != n:
        raise ValueError("permutation rank does not match n")
    return list(_reduced_faces_by_perm(n, dual).get(w, ()))


def enumerate_reduced_kogan_bruteforce(n: int, w: P.Perm, dual: bool = False) -> list[FaceDiagram]:
    """Same as :func:`enumerate_reduced_kogan` by scanning all 2^d edge subsets."""
    order = dual_edges(n) if dual else kogan_edges(n)
    out = []
    for mask in range(1 << len(order)):
        F = FaceDiagram(n, frozenset(e for b, e in enumerate(order) if mask >> b & 1))
        if is_reduced_face(F) and face_perm(F) == tuple(w):
            out.append(F)
    return sorted(out, key=FaceDiagram.sort_key)


def schubert_fk(n: int, w: P.Perm) -> Poly:
    """Sum over reduced Kogan faces of ``prod x_j`` over edges ``(i, j, L)``."""
    total = Poly(n)
    for F in enumerate_reduced_kogan(n, w):
        e = [0] * n
        for _, j, _ in F.edges:
            e[j - 1] += 1
        total = total + Poly.monomial(e)
    return total


# lattice points


def _row_candidates(n: int, upper: Sequence[int], i: int, F: FaceDiagram) -> Iterator[tuple[int, ...]]:
    """Integer rows ``lam[i]`` interlacing ``upper = lam[i-1]`` and satisfying F."""
    ranges = []
    for j in range(1, n - i + 1):
        lo, hi = upper[j - 1], upper[j]
        if (i - 1, j, "L") in F.edges:
            lo = max(lo, upper[j - 1])
            hi = min(hi, upper[j - 1])
        if (i - 1, j + 1, "R") in F.edges:
            lo = max(lo, upper[j])
            hi = min(hi, upper[j])
        if lo > hi:
            return
        ranges.append(range(lo, hi + 1))
    yield from itertools.product(*ranges)


def lattice_points(lam: Sequence[int], F: FaceDiagram | None = None) -> list[Pattern]:
    """All integer GZ patterns (row 0 included) lying on the face F, row-major order."""
    lam = tuple(lam)
    n = len(lam)
    F = F or whole(n)
    if F.n != n:
        raise ValueError("face and weight have different rank")
    out: list[Pattern] = []

    def grow(rows: list[tuple[int, ...]]):
        i = len(rows)
        if i == n:
            out.append(tuple(rows))
            return
        for row in _row_candidates(n, rows[-1], i, F):
            rows.append(row)
            grow(rows)
            rows.pop()

    grow([lam])
    return out


def is_pattern(pattern: Pattern) -> bool:
    n = len(pattern[0])
    if [len(r) for r in pattern] != list(range(n, 0, -1)):
        return False
    return all(
        pattern[i - 1][j] <= pattern[i][j] <= pattern[i - 1][j + 1]
        for i in range(1, n)
        for j in range(n - i)
    )


def on_face(pattern: Pattern, F: FaceDiagram) -> bool:
    for i, j, k in F.edges:
        other = pattern[i + 1][j - 1] if k == "L" else pattern[i + 1][j - 2]
        if pattern[i][j - 1] != other:
            return False
    return True


def _var_index(n: int) -> dict[tuple[int, int], int]:
    idx = {(0, j): j - 1 for j in range(1, n + 1)}
    k = n
    for i in range(1, n):
        for j in range(1, n - i + 1):
            idx[(i, j)] = k
            k += 1
    return idx


def _row_sweep(F: FaceDiagram, step) -> Poly:
    """Eliminate pattern coordinates bottom row first.

    Each row, given the row above, ranges over a box, so integrating or summing
    a polynomial over it stays polynomial. Tied coordinates are substituted.
    """
    n = F.n
    if not (F.is_kogan or F.is_dual):
        raise ValueError("only pure Kogan or dual Kogan faces have a row sweep")
    idx = _var_index(n)
    nv = n + dim(n)
    f = Poly.const(nv, 1)
    for i in range(n - 1, 0, -1):
        for j in range(1, n - i + 1):
            v = idx[(i, j)]
            if (i - 1, j, "L") in F.edges:
                f = f.substitute(v, Poly.var(nv, idx[(i - 1, j)]))
            elif (i - 1, j + 1, "R") in F.edges:
                f = f.substitute(v, Poly.var(nv, idx[(i - 1, j + 1)]))
            else:
                f = step(f, v, Poly.var(nv, idx[(i - 1, j)]), Poly.var(nv, idx[(i - 1, j + 1)]))
    return f.truncate(n)


@lru_cache(maxsize=None)
def count_polynomial(F: FaceDiagram) -> Poly:
    """Lattice-point count of F in P_lambda as a polynomial in lambda_1..lambda_n.

    Valid for every weakly increasing integer lambda.
    """
    return _row_sweep(F, lambda f, v, lo, hi: f.sum_over(v, lo, hi))


@lru_cache(maxsize=None)
def volume_polynomial_of_face(F: FaceDiagram) -> Poly:
    """Euclidean volume in the free coordinates of F, by iterated integration.

    An independent route to the lattice-normalized volume of a Kogan or dual
    Kogan face (its free coordinates are a basis of the face lattice).
    """
    return _row_sweep(F, lambda f, v, lo, hi: f.integrate(v, lo, hi))


def _components(n: int, F: FaceDiagram) -> tuple[int, bool]:
    """(number of free components, consistent) of the equation graph of F."""
    parent: dict = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j, k in F.edges:
        a = (i, j)
        b = (i + 1, j) if k == "L" else (i + 1, j - 1)
        parent[find(a)] = find(b)
    roots: dict = {}
    for i in range(n):
        for j in range(1, n - i + 1):
            r = find((i, j))
            roots.setdefault(r, []).append((i, j))
    free = 0
    consistent = True
    for members in roots.values():
        anchors = [m for m in members if m[0] == 0]
        if not anchors:
            free += 1
        elif len(anchors) > 1:
            consistent = False
    return free, consistent


def dimension_bound(F: FaceDiagram) -> int:
    """``d - rank`` of the equation system of F: an upper bound for dim F."""
    return _components(F.n, F)[0]


def count_lattice_points(lam: Sequence[int], F: FaceDiagram) -> int:
    if F.is_kogan or F.is_dual:
        return int(count_polynomial(F).evaluate(tuple(lam)))
    return len(lattice_points(lam, F))


@dataclass(frozen=True)
class Ehrhart:
    coefficients: tuple[Fraction, ...]  # constant term first

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, k: int) -> Fraction:
        return sum((c * k**a for a, c in enumerate(self.coefficients)), Fraction(0))

    @property
    def leading(self) -> Fraction:
        return self.coefficients[-1]


def ehrhart(lam: Sequence[int], F: FaceDiagram | None = None, counter=None) -> Ehrhart:
    """Ehrhart polynomial k -> |kF cap Z^d| of the face F of P_lam.

    Counts at k = 0..D+1 (D = dimension bound) are interpolated exactly and
    the result is checked against the count at k = D+2.
    """
    lam = check_weight(lam)
    n = len(lam)
    F = F or whole(n)
    counter = counter or count_lattice_points
    bound = dimension_bound(F)
    ks = list(range(bound + 2))
    counts = [counter(tuple(k * x for x in lam), F) for k in ks]
    if counts[1] == 0:
        raise ValueError("face has no lattice points: inconsistent equations")
    coefs = tuple(lagrange_coefficients(ks, counts))
    poly = Ehrhart(coefs)
    extra = bound + 2
    if poly(extra) != counter(tuple(extra * x for x in lam), F):
        raise ArithmeticError("lattice-point counts are not polynomial in the dilation")
    return poly


def face_volume(lam: Sequence[int], F: FaceDiagram | None = None) -> Fraction:
    """Lattice-normalized volume of F: the leading Ehrhart coefficient."""
    return Fraction(ehrhart(lam, F).leading)


def face_dimension(lam: Sequence[int], F: FaceDiagram | None = None) -> int:
    return ehrhart(lam, F).degree
