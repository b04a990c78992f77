"""The Gelfand-Zetlin polytope ring through its volume polynomial.

Elements of the ring are represented by constant-coefficient differential
operators in d/d lambda_1..d/d lambda_n, i.e. polynomials in n variables; the
ring is never materialized as a quotient. Two operators are equal in the ring
iff they act identically on the volume polynomial, so all products, degrees
and structure constants are read off by differentiating it.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from . import perm as P
from .gzface import (
    FaceDiagram,
    check_weight,
    dim,
    enumerate_reduced_kogan,
    face_volume,
    is_pattern,
)
from .poly import Poly, apply_diff_operator, negate_variables, schubert


@lru_cache(maxsize=None)
def volume_polynomial(n: int) -> Poly:
    """``prod_{i<j} (lambda_j - lambda_i) / prod_{k<n} k!``."""
    if n < 1:
        raise ValueError("n must be positive")
    f = Poly.const(n, 1)
    for i in range(n):
        for j in range(i + 1, n):
            f = f * (Poly.var(n, j) - Poly.var(n, i))
    norm = math.prod(math.factorial(k) for k in range(1, n))
    return f * Fraction(1, norm)


def schubert_operator(n: int, w: P.Perm) -> Poly:
    """The Schubert class of X^w: its Schubert polynomial at x_i = -d/d lambda_i."""
    return negate_variables(schubert(tuple(w), n))


@lru_cache(maxsize=None)
def degree_polynomial_operator(n: int, w: P.Perm) -> Poly:
    return apply_diff_operator(schubert_operator(n, w), volume_polynomial(n))


def degree_volume(lam: Sequence[int], w: P.Perm, dual: bool = False) -> Fraction:
    """Sum of normalized volumes of the reduced (dual) Kogan faces for w.

    The dual sum runs over faces F* with ``w(F*) = w0 w w0^{-1}``.
    """
    lam = check_weight(lam)
    n = len(lam)
    target = P.w0_conjugate(tuple(w)) if dual else tuple(w)
    return sum(
        (face_volume(lam, F) for F in enumerate_reduced_kogan(n, target, dual=dual)), Fraction(0)
    )


def degree_polynomial(n: int, w: P.Perm, method: str = "operator", lam: Sequence[int] | None = None):
    """Degree polynomial D_w.

    ``method="operator"`` returns the polynomial; ``"volume"`` and
    ``"dual_volume"`` return its value at ``lam`` from face volumes.
    """
    if method == "operator":
        poly = degree_polynomial_operator(n, tuple(w))
        return poly if lam is None else Fraction(poly.evaluate(tuple(lam)))
    if lam is None:
        raise ValueError("the volume methods evaluate at a given weight")
    if method == "volume":
        return degree_volume(lam, w)
    if method == "dual_volume":
        return degree_volume(lam, w, dual=True)
    raise ValueError(f"unknown method {method!r}")


def degree(lam: Sequence[int], w: P.Perm) -> Fraction:
    """``deg_lambda(X^w) = (d - l(w))! D_w(lambda)``."""
    n = len(lam)
    return math.factorial(dim(n) - P.length(tuple(w))) * Fraction(
        degree_polynomial_operator(n, tuple(w)).evaluate(tuple(lam))
    )


def pairing(ops: Iterable[Poly]) -> Fraction:
    """Apply the product of operators to the volume polynomial; must be constant."""
    ops = list(ops)
    if not ops:
        raise ValueError("empty product")
    n = ops[0].nvars
    prod = Poly.const(n, 1)
    for op in ops:
        prod = prod * op
    if not prod.is_homogeneous() or (prod and prod.degree() != dim(n)):
        raise ValueError(f"total degree must be {dim(n)}")
    value = apply_diff_operator(prod, volume_polynomial(n))
    if not value.is_constant():
        raise ValueError("pairing is not a constant")
    return Fraction(value.constant_term())


def schubert_pairing(n: int, *perms: P.Perm) -> Fraction:
    return pairing(schubert_operator(n, w) for w in perms)


def structure_constant(n: int, w: P.Perm, u: P.Perm, v: P.Perm) -> int:
    """Coefficient of [X^v] in [X^w][X^u], paired against the dual class [X^{w0 v}]."""
    w, u, v = tuple(w), tuple(u), tuple(v)
    if P.length(w) + P.length(u) != P.length(v):
        raise ValueError("need l(w) + l(u) = l(v)")
    dual = P.multiply(P.longest(n), v)
    c = schubert_pairing(n, w, u, dual)
    if c.denominator != 1 or c < 0:
        raise ArithmeticError(f"structure constant {c} is not a nonnegative integer")
    return int(c)


def schubert_expansion(f: Poly) -> dict[P.Perm, int]:
    """Expand a polynomial in the Schubert basis of the polynomial ring.

    Repeatedly strips the lex-smallest monomial ``x^c``, which is the leading
    term ``x^{code(v)}`` of exactly one Schubert polynomial. Permutations are
    returned in the smallest S_N that holds them.
    """
    out: dict[P.Perm, int] = {}
    nv = f.nvars
    while f:
        e = min(f.terms)
        c = f.terms[e]
        v = P.from_code(e)
        s = schubert(v, max(nv, len(v)))
        if s.nvars > nv:
            f = f.extend(s.nvars)
            nv = s.nvars
        s = s.extend(nv)
        e = e + (0,) * (nv - len(e))
        if s.terms.get(e) != 1:
            raise ArithmeticError("code monomial is not the leading term")
        out[v] = out.get(v, 0) + c
        f = f - s * c
    return out


def structure_constant_expansion(n: int, w: P.Perm, u: P.Perm, v: P.Perm) -> int:
    """Oracle: coefficient of the Schubert polynomial of v in the polynomial product."""
    prod = schubert(tuple(w), n) * schubert(tuple(u), n)
    coeffs = schubert_expansion(prod)
    total = 0
    for x, c in coeffs.items():
        if len(x) <= n and P.embed(x, n) == tuple(v):
            total += c
        elif len(x) > n and x[n:] == tuple(range(n + 1, len(x) + 1)) and x[:n] == tuple(v):
            total += c
    return total


def monk(n: int, r: int, w: P.Perm) -> list[P.Perm]:
    """Monk's rule: the v in S_n with [X^{s_r}][X^w] = sum [X^v]."""
    w = tuple(w)
    out = []
    lw = P.length(w)
    for a in range(1, r + 1):
        for b in range(r + 1, n + 1):
            v = list(w)
            v[a - 1], v[b - 1] = v[b - 1], v[a - 1]
            v = tuple(v)
            if P.length(v) == lw + 1:
                out.append(v)
    return sorted(out)


def solve_vertex(lam: Sequence[int], F: FaceDiagram) -> tuple[tuple[int, ...], ...] | None:
    """The unique pattern of the equation system of F if it has rank d and lies in P_lam."""
    lam = tuple(lam)
    n = len(lam)
    parent: dict = {}

    def find(x):
        parent.setdefault(x, x)
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j, k in F.edges:
        b = (i + 1, j) if k == "L" else (i + 1, j - 1)
        parent[find((i, j))] = find(b)
    value: dict = {}
    for j in range(1, n + 1):
        r = find((0, j))
        if r in value and value[r] != lam[j - 1]:
            return None
        value[r] = lam[j - 1]
    rows = []
    for i in range(n):
        row = []
        for j in range(1, n - i + 1):
            r = find((i, j))
            if r not in value:
                return None
            row.append(value[r])
        rows.append(tuple(row))
    pattern = tuple(rows)
    return pattern if is_pattern(pattern) else None


def richardson_pairs(n: int, w: P.Perm, u: P.Perm) -> list[tuple[FaceDiagram, FaceDiagram]]:
    kog = enumerate_reduced_kogan(n, tuple(w))
    dual = enumerate_reduced_kogan(n, P.w0_conjugate(tuple(u)), dual=True)
    return [(F, G) for F in kog for G in dual]


def richardson_vertex_count(n: int, lam: Sequence[int], w: P.Perm, u: P.Perm) -> int:
    """Pairs (F, F*) whose joint equations pin down a single vertex of P_lam."""
    lam = check_weight(lam)
    if P.length(tuple(w)) + P.length(tuple(u)) != dim(n):
        raise ValueError("need l(w) + l(u) = d")
    return sum(1 for F, G in richardson_pairs(n, w, u) if solve_vertex(lam, F.union(G)) is not None)


def richardson_report(n: int, lam: Sequence[int], w: P.Perm, u: P.Perm) -> dict:
    count = richardson_vertex_count(n, lam, w, u)
    oracle = structure_constant(n, w, u, P.longest(n))
    return {
        "w": list(w),
        "u": list(u),
        "lambda": list(lam),
        "vertex_count": count,
        "structure_constant": oracle,
        "agree": count == oracle,
    }
