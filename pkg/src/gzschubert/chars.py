"""Characters of face unions and Demazure operators.

Weights are kept in u-coordinates: ``u_i`` is the sum of row i of a pattern,
for i = 1..n-1. The ambient constants ``u_0 = sum(lam)`` and ``u_n = 0`` are
passed explicitly wherever the Weyl group acts.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

from . import perm as P
from .gzface import (
    FaceDiagram,
    Pattern,
    check_weight,
    enumerate_reduced_kogan,
    kogan_vertex,
    lattice_points,
)

Weight = tuple[int, ...]
Character = dict[Weight, int]


def weight_of_pattern(z: Pattern) -> Weight:
    return tuple(sum(row) for row in z[1:])


def add_to(c: Character, u: Weight, m: int) -> None:
    m += c.get(u, 0)
    if m:
        c[u] = m
    else:
        c.pop(u, None)


def character_of_points(points: Iterable[Pattern]) -> Character:
    c: Character = {}
    for z in points:
        add_to(c, weight_of_pattern(z), 1)
    return c


def character_of_faces(lam: Sequence[int], faces: Iterable[FaceDiagram] | None = None) -> Character:
    """Character of the union of faces; ``None`` means the whole polytope.

    A point lying on several faces is counted once.
    """
    lam = check_weight(lam)
    if faces is None:
        return character_of_points(lattice_points(lam))
    pts = set()
    for F in faces:
        pts.update(lattice_points(lam, F))
    return character_of_points(pts)


def total(c: Character) -> int:
    return sum(c.values())


def _reflect(i: int, u: Weight, u0: int) -> int:
    left = u0 if i == 1 else u[i - 2]
    right = 0 if i == len(u) else u[i]
    return left + right - u[i - 1]


def _check_index(i: int, c: Character):
    for u in c:
        if not 1 <= i <= len(u):
            raise ValueError(f"simple reflection {i} out of range")
        return


def s_action(i: int, c: Character, u0: int) -> Character:
    """``u_i -> u_{i-1} + u_{i+1} - u_i`` on every exponent."""
    _check_index(i, c)
    out: Character = {}
    for u, m in c.items():
        v = list(u)
        v[i - 1] = _reflect(i, u, u0)
        add_to(out, tuple(v), m)
    return out


def w_action(w: P.Perm, c: Character, u0: int) -> Character:
    """Action of w through a reduced word, rightmost letter first."""
    for i in reversed(P.reduced_word(tuple(w))):
        c = s_action(i, c, u0)
    return c


def shift(c: Character, i: int, k: int) -> Character:
    """Multiply by ``e^{k alpha_i}``."""
    out: Character = {}
    for u, m in c.items():
        v = list(u)
        v[i - 1] += k
        add_to(out, tuple(v), m)
    return out


def _string(i: int, u: Weight, lo: int, hi: int, m: int, out: Character):
    v = list(u)
    for a in range(lo, hi + 1):
        v[i - 1] = a
        add_to(out, tuple(v), m)


def demazure_T(i: int, sign: str, c: Character, u0: int, check: bool = True) -> Character:
    """``T_i`` (sign "plus") or ``T_i^-`` (sign "minus") on a character.

    Each exponent is replaced by the signed string between it and its
    reflection; with ``check`` the result is multiplied back by
    ``1 - e^{+-alpha_i}`` and compared with ``f - e^{+-alpha_i} s_i f``.
    """
    if sign not in ("plus", "minus"):
        raise ValueError("sign must be 'plus' or 'minus'")
    _check_index(i, c)
    out: Character = {}
    for u, m in c.items():
        a = u[i - 1]
        b = _reflect(i, u, u0)
        if sign == "minus":
            if a <= b:
                _string(i, u, a, b, m, out)
            elif a > b + 1:
                _string(i, u, b + 1, a - 1, -m, out)
        else:
            if a >= b:
                _string(i, u, b, a, m, out)
            elif a < b - 1:
                _string(i, u, a + 1, b - 1, -m, out)
    if check:
        e = 1 if sign == "minus" else -1
        lhs = dict(out)
        for u, m in shift(out, i, e).items():
            add_to(lhs, u, -m)
        rhs = dict(c)
        for u, m in shift(s_action(i, c, u0), i, e).items():
            add_to(rhs, u, -m)
        if lhs != rhs:
            raise ArithmeticError("Demazure operator left a remainder")
    return out


def kogan_weight(lam: Sequence[int]) -> Weight:
    """``p`` of the Kogan vertex: ``u_i = lam_1 + ... + lam_{n-i}``."""
    lam = tuple(lam)
    n = len(lam)
    return tuple(sum(lam[: n - i]) for i in range(1, n))


def demazure_operators(lam: Sequence[int], w: P.Perm, word: Sequence[int] | None = None) -> Character:
    """``T^-_{n-i_1} ... T^-_{n-i_l} e^{w0 lam}`` for a reduced word of ``v = w0 w``."""
    lam = check_weight(lam)
    n = len(lam)
    v = P.multiply(P.longest(n), tuple(w))
    if word is None:
        word = P.reduced_word(v)
    elif P.product_of_word(n, word) != v or not P.is_reduced(n, word):
        raise ValueError("word is not a reduced word of w0 w")
    u0 = sum(lam)
    c: Character = {kogan_weight(lam): 1}
    if n == 1:
        return c
    for i in reversed(word):
        c = demazure_T(n - i, "minus", c, u0)
    return c


def demazure_character(lam: Sequence[int], w: P.Perm, method: str = "faces") -> Character:
    """``faces`` and ``operators`` give chi^w(lam); ``dual_faces`` gives chi_w(lam)."""
    lam = check_weight(lam)
    n = len(lam)
    w = tuple(w)
    P.check_perm(w)
    if len(w) != n:
        raise ValueError("permutation and weight have different rank")
    if method == "faces":
        return character_of_faces(lam, enumerate_reduced_kogan(n, w))
    if method == "operators":
        return demazure_operators(lam, w)
    if method == "dual_faces":
        target = P.multiply(w, P.longest(n))
        return character_of_faces(lam, enumerate_reduced_kogan(n, target, dual=True))
    raise ValueError(f"unknown method {method!r}")


def hilbert_function(lam: Sequence[int], w: P.Perm, k: int) -> int:
    """Lattice points in the union of the dilated faces ``k F``."""
    if k < 1:
        raise ValueError("k must be positive")
    lam = check_weight(lam)
    return total(demazure_character(tuple(k * x for x in lam), w, "faces"))


def weyl_dimension(lam: Sequence[int]) -> int:
    """Number of patterns with top row lam, by the product formula.

    The factors carry the usual shift by ``j - i``.
    """
    lam = tuple(lam)
    n = len(lam)
    num = math.prod(lam[j] - lam[i] + j - i for i in range(n) for j in range(i + 1, n))
    den = math.prod(j - i for i in range(n) for j in range(i + 1, n))
    q, r = divmod(num, den)
    assert r == 0
    return q


def kogan_vertex_character(lam: Sequence[int]) -> Character:
    return character_of_faces(lam, [kogan_vertex(len(lam))])


def to_json(c: Character) -> list[dict]:
    return [{"u": list(u), "mult": m} for u, m in sorted(c.items())]


def from_json(data) -> Character:
    out: Character = {}
    for item in data:
        add_to(out, tuple(item["u"]), int(item["mult"]))
    return out
