"""Exact multivariate polynomials, divided differences and Schubert polynomials.

Coefficients are ``int`` or ``fractions.Fraction``; nothing is ever rounded.
Terms are stored as a dict from dense exponent tuples to nonzero coefficients.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational
from typing import Iterable, Mapping, Sequence

from . import perm as P

Exps = tuple[int, ...]


def _normalize_coef(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


class Poly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exps, Rational] | None = None):
        self.nvars = nvars
        clean: dict[Exps, Rational] = {}
        if terms:
            for e, c in terms.items():
                if len(e) != nvars:
                    raise ValueError(f"exponent {e} does not match nvars={nvars}")
                if c:
                    clean[tuple(e)] = _normalize_coef(c)
        self.terms = clean

    # constructors

    @classmethod
    def const(cls, nvars: int, c: Rational = 1) -> Poly:
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def var(cls, nvars: int, i: int) -> Poly:
        """The variable with 0-based index ``i``."""
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def monomial(cls, exps: Sequence[int], c: Rational = 1) -> Poly:
        return cls(len(exps), {tuple(exps): c})

    # arithmetic

    def _coerce(self, other) -> Poly:
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError("polynomials over different variable counts")
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly(self.nvars, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exps, Rational] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = Poly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Poly.const(self.nvars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"Poly({self.nvars}, {self.sorted_terms()})"

    def __str__(self):
        return self.format()

    # inspection

    def sorted_terms(self) -> list[tuple[Exps, Rational]]:
        """Terms in graded-lex order (higher degree first, then lex descending)."""
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-a for a in t[0])))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def homogeneous_part(self, deg: int) -> Poly:
        return Poly(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == deg})

    def constant_term(self) -> Rational:
        return self.terms.get((0,) * self.nvars, 0)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def coefficient_sum(self) -> Rational:
        return sum(self.terms.values())

    def format(self, names: Sequence[str] | None = None) -> str:
        if not self.terms:
            return "0"
        names = names or [f"x{i + 1}" for i in range(self.nvars)]
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                names[i] if a == 1 else f"{names[i]}^{a}" for i, a in enumerate(e) if a
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    # variable manipulation

    def extend(self, nvars: int) -> Poly:
        """Append unused variables."""
        pad = (0,) * (nvars - self.nvars)
        return Poly(nvars, {e + pad: c for e, c in self.terms.items()})

    def truncate(self, nvars: int) -> Poly:
        """Drop trailing variables, which must not occur."""
        out = {}
        for e, c in self.terms.items():
            if any(e[nvars:]):
                raise ValueError("dropped variable occurs in polynomial")
            out[e[:nvars]] = c
        return Poly(nvars, out)

    def swap(self, i: int, j: int) -> Poly:
        """Interchange the variables with 0-based indices i and j."""
        out = {}
        for e, c in self.terms.items():
            f = list(e)
            f[i], f[j] = f[j], f[i]
            out[tuple(f)] = c
        return Poly(self.nvars, out)

    def evaluate(self, point: Sequence[Rational]) -> Rational:
        if all(isinstance(x, int) for x in point):
            return self._evaluate_int(tuple(point))
        total = 0
        for e, c in self.terms.items():
            term = c
            for x, a in zip(point, e):
                if a:
                    term *= x**a
            total += term
        return _normalize_coef(Fraction(total)) if isinstance(total, Fraction) else total

    def _evaluate_int(self, point: tuple[int, ...]) -> Rational:
        # integer arithmetic over a common denominator, one division at the end
        den = 1
        for c in self.terms.values():
            if isinstance(c, Fraction):
                den = den * c.denominator // math.gcd(den, c.denominator)
        total = 0
        for e, c in self.terms.items():
            term = c * den
            if isinstance(term, Fraction):
                term = term.numerator
            for x, a in zip(point, e):
                if a:
                    term *= x**a
            total += term
        return _normalize_coef(Fraction(total, den))

    def substitute(self, i: int, value: Poly) -> Poly:
        """Replace variable i by the polynomial ``value``."""
        powers = {0: Poly.const(self.nvars, 1)}
        out = Poly(self.nvars)
        grouped: dict[int, dict[Exps, Rational]] = {}
        for e, c in self.terms.items():
            f = list(e)
            a = f[i]
            f[i] = 0
            grouped.setdefault(a, {})[tuple(f)] = c
        for a, rest in grouped.items():
            if a not in powers:
                powers[a] = value**a
            out = out + Poly(self.nvars, rest) * powers[a]
        return out

    def partial(self, i: int) -> Poly:
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                out[tuple(f)] = c * e[i]
        return Poly(self.nvars, out)

    def integrate(self, i: int, lo: Poly, hi: Poly) -> Poly:
        """Definite integral in variable i between polynomial bounds."""
        grouped = self._split(i)
        out = Poly(self.nvars)
        for a, rest in grouped.items():
            anti = (hi ** (a + 1) - lo ** (a + 1)) * Fraction(1, a + 1)
            out = out + rest * anti
        return out

    def sum_over(self, i: int, lo: Poly, hi: Poly) -> Poly:
        """``sum_{x_i = lo}^{hi} f`` as a polynomial, valid whenever hi >= lo - 1."""
        grouped = self._split(i)
        out = Poly(self.nvars)
        for a, rest in grouped.items():
            s = power_sum_poly(a)
            upper = _compose_univariate(s, hi)
            lower = _compose_univariate(s, lo - 1)
            out = out + rest * (upper - lower)
        return out

    def _split(self, i: int) -> dict[int, Poly]:
        grouped: dict[int, dict[Exps, Rational]] = {}
        for e, c in self.terms.items():
            f = list(e)
            a = f[i]
            f[i] = 0
            grouped.setdefault(a, {})[tuple(f)] = c
        return {a: Poly(self.nvars, t) for a, t in grouped.items()}

    # serialization

    def to_json(self) -> list[dict]:
        return [{"exps": list(e), "coef": str(Fraction(c))} for e, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: list[dict], nvars: int | None = None) -> Poly:
        if nvars is None:
            if not data:
                raise ValueError("nvars required for the zero polynomial")
            nvars = len(data[0]["exps"])
        return cls(nvars, {tuple(t["exps"]): Fraction(t["coef"]) for t in data})


@lru_cache(maxsize=None)
def power_sum_poly(m: int) -> tuple[Fraction, ...]:
    """Coefficients of ``S_m(N) = sum_{x=0}^{N} x^m`` as a polynomial in N.

    Obtained by exact Lagrange interpolation through N = 0..m+1.
    """
    pts = list(range(m + 2))
    vals = []
    acc = 0
    for x in pts:
        acc += x**m
        vals.append(acc)
    return tuple(lagrange_coefficients(pts, vals))


@lru_cache(maxsize=None)
def _lagrange_basis(xs: tuple[int, ...]) -> tuple[tuple[Fraction, ...], ...]:
    k = len(xs)
    out = []
    for a in range(k):
        basis = [Fraction(1)]
        denom = 1
        for b in range(k):
            if b == a:
                continue
            basis = [Fraction(0)] + basis
            for t in range(len(basis) - 1):
                basis[t] -= xs[b] * basis[t + 1]
            denom *= xs[a] - xs[b]
        out.append(tuple(c / denom for c in basis))
    return tuple(out)


def lagrange_coefficients(xs: Sequence[int], ys: Sequence[Rational]) -> list[Fraction]:
    """Monomial coefficients (constant first) of the interpolating polynomial."""
    k = len(xs)
    coefs = [Fraction(0)] * k
    for basis, y in zip(_lagrange_basis(tuple(xs)), ys):
        if y:
            for t in range(k):
                coefs[t] += basis[t] * y
    while len(coefs) > 1 and coefs[-1] == 0:
        coefs.pop()
    return coefs


def _compose_univariate(coefs: Sequence[Fraction], arg: Poly) -> Poly:
    out = Poly(arg.nvars)
    for c in reversed(coefs):
        out = out * arg + c
    return out


def divide_linear(f: Poly, i: int, j: int) -> Poly:
    """Exact quotient ``f / (x_i - x_j)`` (0-based indices); raises on a remainder."""
    n = f.nvars
    # synthetic division in x_i with root x_j
    by_power: dict[int, Poly] = {}
    for e, c in f.terms.items():
        g = list(e)
        a = g[i]
        g[i] = 0
        by_power.setdefault(a, Poly(n))
        by_power[a] = by_power[a] + Poly(n, {tuple(g): c})
    if not by_power:
        return Poly(n)
    top = max(by_power)
    xj = Poly.var(n, j)
    xi = Poly.var(n, i)
    q: dict[int, Poly] = {}
    carry = Poly(n)
    for k in range(top, 0, -1):
        carry = by_power.get(k, Poly(n)) + xj * carry
        q[k - 1] = carry
    remainder = by_power.get(0, Poly(n)) + xj * carry
    if remainder:
        raise ArithmeticError(f"division by x{i + 1} - x{j + 1} left remainder {remainder}")
    out = Poly(n)
    for k, coef in q.items():
        out = out + coef * xi**k
    return out


def divided_difference(i: int, f: Poly) -> Poly:
    """``A_i f = (f - s_i f) / (x_i - x_{i+1})`` with 1-based ``i``."""
    if not 1 <= i <= f.nvars - 1:
        raise ValueError(f"divided difference A_{i} needs at least {i + 1} variables")
    return divide_linear(f - f.swap(i - 1, i), i - 1, i)


def staircase(n: int, nvars: int | None = None) -> Poly:
    nvars = n if nvars is None else nvars
    exps = [max(n - 1 - k, 0) for k in range(nvars)]
    return Poly.monomial(exps)


def schubert_bgg(n: int, w: P.Perm, word: Iterable[int] | None = None, nvars: int | None = None) -> Poly:
    """Schubert polynomial from divided differences applied to the staircase.

    ``word`` may supply any reduced word of ``w^{-1} w0``; otherwise one is chosen.
    The result lives in ``nvars`` variables (default n).
    """
    w = P.check_perm(w)
    if len(w) != n:
        raise ValueError("permutation rank does not match n")
    target = P.multiply(P.inverse(w), P.longest(n))
    if word is None:
        word = P.reduced_word(target)
    else:
        word = tuple(word)
        if P.product_of_word(n, word) != target or not P.is_reduced(n, word):
            raise ValueError("word is not a reduced word of w^-1 w0")
    f = staircase(n, nvars)
    for a in reversed(word):
        f = divided_difference(a, f)
    return f


@lru_cache(maxsize=None)
def _schubert_cached(w: P.Perm, nvars: int) -> Poly:
    return schubert_bgg(len(w), w, nvars=nvars)


def schubert(w: P.Perm, nvars: int | None = None) -> Poly:
    """Cached BGG Schubert polynomial of ``w`` in ``nvars`` variables (default len(w))."""
    w = tuple(w)
    return _schubert_cached(w, len(w) if nvars is None else nvars)


def apply_diff_operator(op: Poly, f: Poly) -> Poly:
    """Act by ``op`` read as a constant-coefficient differential operator."""
    if op.nvars != f.nvars:
        raise ValueError("operator and polynomial over different variable counts")
    out = Poly(f.nvars)
    cache: dict[Exps, Poly] = {}
    for e, c in op.terms.items():
        if e not in cache:
            g = f
            for i, a in enumerate(e):
                for _ in range(a):
                    g = g.partial(i)
                    if not g:
                        break
            cache[e] = g
        out = out + cache[e] * c
    return out


def negate_variables(f: Poly) -> Poly:
    """``f(-x_1, ..., -x_n)``."""
    return Poly(f.nvars, {e: c * (-1) ** sum(e) for e, c in f.terms.items()})
