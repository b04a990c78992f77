"""Mirror mitosis on Kogan faces, fiber diagrams and ladder moves.

Row/column language here follows the mitosis convention: the diagram has an
edge in row ``r`` and column ``c`` when ``lam[r-1][c] == lam[r][c]``, i.e. the
gzface edge ``(r - 1, c, "L")``. Row r has columns ``1..n-r``.

Ordinary (non-mirror) mitosis is the transpose of this operation and is not
provided separately.
"""

from __future__ import annotations

from typing import Sequence

from . import perm as P
from .gzface import (
    FaceDiagram,
    Pattern,
    enumerate_reduced_kogan,
    face_perm,
    is_reduced_face,
    kogan_edges,
)
from .parabox import Parallelepiped, face_contains, paramitosis

Diagonal = tuple[int, int]

_PARA = {(0, 0): "*", (0, 1): "1", (1, 0): "0"}


def has_edge(F: FaceDiagram, row: int, col: int) -> bool:
    return (row - 1, col, "L") in F.edges


def _require_reduced_kogan(F: FaceDiagram):
    if not F.is_kogan or not is_reduced_face(F):
        raise ValueError("mitosis is defined on reduced Kogan faces")


def _require_row(F: FaceDiagram, i: int):
    if not 1 <= i <= F.n - 1:
        raise ValueError(f"row {i} out of range 1..{F.n - 1}")


def initial_run(F: FaceDiagram, i: int) -> int:
    """Largest k such that row i has edges in columns 1..k."""
    k = 0
    while k < F.n - i and has_edge(F, i, k + 1):
        k += 1
    return k


def mirror_mitosis(F: FaceDiagram, i: int) -> list[FaceDiagram]:
    """The offspring ``F_{i,j}`` of F at row i, canonically sorted."""
    _require_reduced_kogan(F)
    _require_row(F, i)
    k = initial_run(F, i)
    out = []
    for j in range(1, k + 1):
        if has_edge(F, i + 1, j):
            continue
        edges = set(F.edges)
        edges.discard((i - 1, j, "L"))
        for c in range(1, j):
            # shift south-east only onto a vacant spot
            if not has_edge(F, i + 1, c):
                edges.discard((i - 1, c, "L"))
                edges.add((i, c, "L"))
        out.append(FaceDiagram(F.n, frozenset(edges)))
    return sorted(out, key=FaceDiagram.sort_key)


def mitosis_of_set(faces, i: int) -> list[FaceDiagram]:
    out = set()
    for F in faces:
        out.update(mirror_mitosis(F, i))
    return sorted(out, key=FaceDiagram.sort_key)


def fiber_diagonals(F: FaceDiagram, i: int) -> list[Diagonal]:
    """Diagonal types ``(edge rows i-1..i, edge rows i..i+1)`` for columns 1..n-i."""
    _require_row(F, i)
    return [
        (int(has_edge(F, i, c)), int(has_edge(F, i + 1, c))) for c in range(1, F.n - i + 1)
    ]


def fiber_paradiagram(F: FaceDiagram, i: int) -> str:
    """Paradiagram of the row-i fiber; type (1,1) diagonals are dropped."""
    return "".join(_PARA[t] for t in fiber_diagonals(F, i) if t != (1, 1))


def fiber_box(F: FaceDiagram, i: int, pattern: Pattern) -> tuple[Parallelepiped, str] | None:
    """The row-i fiber through ``pattern`` and the paradiagram of F's fiber in it.

    Rows other than i are read from ``pattern``; degenerate directions
    (``mu' == nu'``) are dropped from both. Returns None when F's fiber is empty.
    """
    n = F.n
    _require_row(F, i)
    up = pattern[i - 1]
    down = pattern[i + 1] if i + 1 < n else ()
    mu, nu, diagram = [], [], []
    for c in range(1, n - i + 1):
        lo = up[c - 1]
        if c >= 2:
            lo = max(lo, down[c - 2])
        hi = up[c]
        if c <= len(down):
            hi = min(hi, down[c - 1])
        fixed = set()
        if has_edge(F, i, c):
            fixed.add(up[c - 1])
        if has_edge(F, i + 1, c):
            fixed.add(down[c - 1])
        if len(fixed) > 1 or any(not lo <= v <= hi for v in fixed):
            return None
        if lo == hi:
            continue
        mu.append(lo)
        nu.append(hi)
        if not fixed:
            diagram.append("*")
        else:
            v = fixed.pop()
            diagram.append("0" if v == lo else "1" if v == hi else None)
            if diagram[-1] is None:
                return None
    return Parallelepiped(tuple(mu), tuple(nu)), "".join(diagram)


def ladder_moves(F: FaceDiagram, i: int) -> list[FaceDiagram]:
    """Apply one ladder move ``(0,0)+k(1,1)+(1,0) -> (0,1)+k(1,1)+(0,0)`` in rows i-1..i+1."""
    _require_reduced_kogan(F)
    t = fiber_diagonals(F, i)
    out = []
    for a in range(len(t)):
        if t[a] != (0, 0):
            continue
        b = a + 1
        while b < len(t) and t[b] == (1, 1):
            b += 1
        if b < len(t) and t[b] == (1, 0):
            edges = set(F.edges)
            edges.discard((i - 1, b + 1, "L"))
            edges.add((i, a + 1, "L"))
            out.append(FaceDiagram(F.n, frozenset(edges)))
    return sorted(out, key=FaceDiagram.sort_key)


def inverse_ladder_moves(F: FaceDiagram, i: int) -> list[FaceDiagram]:
    """Undo a ladder move: ``(0,1)+k(1,1)+(0,0) -> (0,0)+k(1,1)+(1,0)``."""
    _require_reduced_kogan(F)
    t = fiber_diagonals(F, i)
    out = []
    for a in range(len(t)):
        if t[a] != (0, 1):
            continue
        b = a + 1
        while b < len(t) and t[b] == (1, 1):
            b += 1
        if b < len(t) and t[b] == (0, 0):
            edges = set(F.edges)
            edges.discard((i, a + 1, "L"))
            edges.add((i - 1, b + 1, "L"))
            out.append(FaceDiagram(F.n, frozenset(edges)))
    return sorted(out, key=FaceDiagram.sort_key)


def literal_witness(F: FaceDiagram, i: int) -> FaceDiagram:
    """Exchange-property candidate for :func:`global_witness`.

    Splits the face word into the part from rows at or below i and the part
    ``w2`` from rows above, strips the first letter of ``w2`` that the exchange
    property allows for ``s_{i+q}``, and adds the edge in row i, column q+1,
    where q counts the leading (1,1) diagonals. The result is not always a
    valid witness; :func:`is_witness` decides.
    """
    _require_reduced_kogan(F)
    _require_row(F, i)
    n = F.n
    w = face_perm(F)
    if not P.left_descent(w, i):
        raise ValueError("need l(s_i w) < l(w)")
    if fiber_paradiagram(F, i).startswith("0"):
        raise ValueError("initial parabox is already nonempty")
    t = fiber_diagonals(F, i)
    q = 0
    while t[q] == (1, 1):
        q += 1
    upper = [e for e in kogan_edges(n) if e in F.edges and e[0] <= i - 2]
    w2 = [e[0] + e[1] for e in upper]
    target = P.product_of_word(n, (i + q,) + tuple(w2))
    if P.length(target) >= len(w2):
        raise ArithmeticError("s_{i+q} is not a left descent of w2")
    for r in range(len(w2)):
        if P.product_of_word(n, w2[:r] + w2[r + 1 :]) == target:
            edges = set(F.edges)
            edges.discard(upper[r])
            edges.add((i - 1, q + 1, "L"))
            return FaceDiagram(n, frozenset(edges))
    raise ArithmeticError("exchange property failed")


def is_witness(F: FaceDiagram, Fp: FaceDiagram, i: int) -> bool:
    """F' is reduced with w(F') = w(F), has a nonempty row-i initial parabox,
    and the row-i fiber of F lies in the paramitosis of the fiber of F'."""
    return (
        Fp.is_kogan
        and is_reduced_face(Fp)
        and face_perm(Fp) == face_perm(F)
        and fiber_paradiagram(Fp, i).startswith("0")
        and witness_contains(F, Fp, i)
    )


def global_witness(F: FaceDiagram, i: int) -> FaceDiagram:
    """A face F' certifying that F's fiber is produced by paramitosis (row i).

    Tries :func:`literal_witness` first; when that candidate fails the
    postconditions, the reduced faces of w(F) are searched in canonical order.
    """
    candidate = literal_witness(F, i)
    if is_witness(F, candidate, i):
        return candidate
    for E in enumerate_reduced_kogan(F.n, face_perm(F)):
        if is_witness(F, E, i):
            return E
    raise ArithmeticError("no witness face exists")


def witness_contains(F: FaceDiagram, Fp: FaceDiagram, i: int) -> bool:
    """Fiber of F lies in a face of the paramitosis of F'-fiber (row i)."""
    small = fiber_paradiagram(F, i)
    return any(face_contains(big, small) for big in paramitosis(fiber_paradiagram(Fp, i)))


def descents_left(w: Sequence[int]) -> list[int]:
    return [i for i in range(1, len(w)) if P.left_descent(tuple(w), i)]
