"""Exponential sums over coordinate parallelepipeds, paradiagrams and paramitosis.

Laurent polynomials in one variable t are dicts ``{exponent: coefficient}``
with zero coefficients removed. A paradiagram is a string over ``"01*"``:
``0`` pins a coordinate to its lower bound, ``1`` to its upper bound, ``*``
leaves it free.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

Laurent = dict[int, int]


def clean(f: dict) -> Laurent:
    return {k: c for k, c in f.items() if c}


def ladd(*fs: Laurent) -> Laurent:
    out: dict[int, int] = {}
    for f in fs:
        for k, c in f.items():
            out[k] = out.get(k, 0) + c
    return clean(out)


def lscale(f: Laurent, c: int) -> Laurent:
    return clean({k: v * c for k, v in f.items()})


def lshift(f: Laurent, s: int) -> Laurent:
    return {k + s: c for k, c in f.items()}


def lmul(f: Laurent, g: Laurent) -> Laurent:
    out: dict[int, int] = {}
    for a, x in f.items():
        for b, y in g.items():
            out[a + b] = out.get(a + b, 0) + x * y
    return clean(out)


def ldivide(f: Laurent, g: Laurent) -> Laurent:
    """Exact quotient ``f / g``; raises ArithmeticError on a remainder."""
    g = clean(g)
    if not g:
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    f = clean(dict(f))
    gtop = max(g)
    gc = g[gtop]
    glow = min(g)
    q: dict[int, int] = {}
    while f:
        top = max(f)
        if top - gtop < min(f) - glow:
            break
        c, r = divmod(f[top], gc)
        if r:
            raise ArithmeticError("non-integral quotient")
        s = top - gtop
        q[s] = c
        f = ladd(f, lscale(lshift(g, s), -c))
    if f:
        raise ArithmeticError(f"division left remainder {to_json(f)}")
    return clean(q)


def to_json(f: Laurent) -> list[dict]:
    return [{"exp": k, "coef": c} for k, c in sorted(f.items())]


def from_json(data: list[dict]) -> Laurent:
    return clean({int(t["exp"]): int(t["coef"]) for t in data})


# parallelepipeds


@dataclass(frozen=True)
class Parallelepiped:
    mu: tuple[int, ...]
    nu: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mu", tuple(self.mu))
        object.__setattr__(self, "nu", tuple(self.nu))
        if len(self.mu) != len(self.nu):
            raise ValueError("mu and nu differ in length")
        if any(a > b for a, b in zip(self.mu, self.nu)):
            raise ValueError("need mu_k <= nu_k")

    @property
    def m(self) -> int:
        return len(self.mu)

    @property
    def C(self) -> int:
        """The duality constant ``sum(mu_k + nu_k)``."""
        return sum(self.mu) + sum(self.nu)

    def points(self) -> Iterable[tuple[int, ...]]:
        return itertools.product(*(range(a, b + 1) for a, b in zip(self.mu, self.nu)))

    def lower_face(self) -> Parallelepiped:
        """The face ``y_1 = mu_1``."""
        return Parallelepiped((self.mu[0],) + self.mu[1:], (self.mu[0],) + self.nu[1:])


def s_pi_enumerate(box: Parallelepiped) -> Laurent:
    out: dict[int, int] = {}
    for y in box.points():
        s = sum(y)
        out[s] = out.get(s, 0) + 1
    return out


def s_pi_product(box: Parallelepiped) -> Laurent:
    """``prod (t^{nu+1} - t^mu) / (t - 1)`` by exact polynomial division."""
    num: Laurent = {0: 1}
    den: Laurent = {0: 1}
    for a, b in zip(box.mu, box.nu):
        num = lmul(num, ladd({b + 1: 1}, {a: -1}))
        den = lmul(den, {1: 1, 0: -1})
    return ldivide(num, den)


def s_pi(box: Parallelepiped) -> Laurent:
    """Sum of t^(y_1+...+y_m) over the integer points, checked against the product formula."""
    direct = s_pi_enumerate(box)
    if direct != s_pi_product(box):
        raise ArithmeticError("enumeration and product formula disagree")
    return direct


def star_dual(f: Laurent, C: int) -> Laurent:
    """``t^C f(1/t)``."""
    return {C - k: c for k, c in f.items()}


def t_operator(f: Laurent, C: int) -> Laurent:
    """``(f - t f^*) / (1 - t)``."""
    return ldivide(ladd(f, lscale(lshift(star_dual(f, C), 1), -1)), {0: 1, 1: -1})


# paradiagrams


def is_reduced(p: str) -> bool:
    if set(p) - set("01*"):
        raise ValueError(f"bad paradiagram {p!r}")
    return "10" not in p


def _need_reduced(p: str):
    if not is_reduced(p):
        raise ValueError(f"paradiagram {p!r} is not reduced")


@dataclass(frozen=True)
class Paraboxes:
    initial: str
    introns: tuple[str, ...]
    final: str

    def join(self) -> str:
        return self.initial + "".join(self.introns) + self.final

    def boundaries(self) -> tuple[int, ...]:
        """Start positions of the intron paraboxes and of the final parabox."""
        out = []
        pos = len(self.initial)
        for box in self.introns:
            out.append(pos)
            pos += len(box)
        out.append(pos)
        return tuple(out)


def decompose_paraboxes(p: str) -> Paraboxes:
    _need_reduced(p)
    k = 0
    while k < len(p) and p[k] == "0":
        k += 1
    initial = p[:k]
    introns = []
    while k < len(p):
        start = k
        while k < len(p) and p[k] == "1":
            k += 1
        if k == len(p):
            return Paraboxes(initial, tuple(introns), p[start:])
        # a reduced diagram cannot have 0 right after a run of 1s
        k += 1  # the star
        while k < len(p) and p[k] == "0":
            k += 1
        introns.append(p[start:k])
    return Paraboxes(initial, tuple(introns), "")


def l_moves(p: str) -> set[str]:
    """Diagrams reachable by one L-move (``*0 -> 1*``) or its inverse."""
    out = set()
    for k in range(len(p) - 1):
        pair = p[k : k + 2]
        if pair == "*0":
            out.add(p[:k] + "1*" + p[k + 2 :])
        elif pair == "1*":
            out.add(p[:k] + "*0" + p[k + 2 :])
    return out


def l_class(p: str) -> frozenset[str]:
    """Closure of ``{p}`` under L-moves and inverse L-moves."""
    _need_reduced(p)
    seen = {p}
    queue = deque([p])
    while queue:
        q = queue.popleft()
        for r in l_moves(q):
            if r not in seen:
                seen.add(r)
                queue.append(r)
    return frozenset(seen)


def intron_fillings(size: int) -> list[str]:
    """All intron paraboxes of a given length: ``1^a * 0^(size-1-a)``."""
    return ["1" * a + "*" + "0" * (size - 1 - a) for a in range(size)]


def l_class_product(p: str) -> frozenset[str]:
    """The L-class of p as the product of star positions inside each intron."""
    boxes = decompose_paraboxes(p)
    choices = [intron_fillings(len(b)) for b in boxes.introns]
    return frozenset(boxes.initial + "".join(c) + boxes.final for c in itertools.product(*choices))


def paramitosis(p: str) -> frozenset[str]:
    boxes = decompose_paraboxes(p)
    q = len(boxes.initial)
    rest = p[q:]
    return frozenset(fill + rest for fill in intron_fillings(q)) if q else frozenset()


def image_constant(p: str, box: Parallelepiped) -> int:
    """Duality constant seen by the parabox-sum projection of p's class.

    The final parabox projects to the single value ``sum(nu)`` over its
    positions, so it contributes twice that instead of ``mu + nu``. Equals
    ``box.C`` when the final parabox is empty.
    """
    start = len(p) - len(decompose_paraboxes(p).final)
    return box.C + sum(box.nu[k] - box.mu[k] for k in range(start, len(p)))


def paramitosis_set(diagrams: Iterable[str]) -> frozenset[str]:
    out: set[str] = set()
    for p in diagrams:
        out |= paramitosis(p)
    return frozenset(out)


def paramitosis_class(A: Iterable[str]) -> frozenset[str]:
    """M(A) for an L-class A, computed memberwise and checked to be one L-class."""
    M = paramitosis_set(A)
    if M and l_class(next(iter(M))) != M:
        raise ArithmeticError("paramitosis of an L-class is not an L-class")
    return M


def reduced_vertices(m: int) -> list[str]:
    return ["0" * a + "1" * (m - a) for a in range(m, -1, -1)]


def simplex_vertices(A: Iterable[str]) -> frozenset[str]:
    """Reduced vertices of a class: fill the first i introns with 0s, the rest with 1s."""
    p = next(iter(A))
    boxes = decompose_paraboxes(p)
    k = len(boxes.introns)
    out = set()
    for i in range(k + 1):
        body = "".join(
            "0" * len(b) if t < i else "1" * len(b) for t, b in enumerate(boxes.introns)
        )
        out.add(boxes.initial + body + boxes.final)
    return frozenset(out)


def class_of_vertices(vertices: Iterable[str]) -> frozenset[str]:
    """Inverse of :func:`simplex_vertices`: the L-class spanned by reduced vertices."""
    verts = sorted(set(vertices), key=lambda v: v.count("0"))
    if not verts:
        raise ValueError("empty vertex set")
    m = len(verts[0])
    zeros = [v.count("0") for v in verts]
    for v, z in zip(verts, zeros):
        if v != "0" * z + "1" * (m - z):
            raise ValueError(f"{v!r} is not a reduced vertex")
    p = "0" * zeros[0]
    for a, b in zip(zeros, zeros[1:]):
        p += "*" + "0" * (b - a - 1)
    p += "1" * (m - zeros[-1])
    return l_class(p)


def all_reduced_diagrams(m: int) -> list[str]:
    return ["".join(t) for t in itertools.product("01*", repeat=m) if "10" not in "".join(t)]


def all_l_classes(m: int) -> list[frozenset[str]]:
    seen: set[str] = set()
    out = []
    for p in all_reduced_diagrams(m):
        if p not in seen:
            A = l_class(p)
            seen |= A
            out.append(A)
    return out


# faces of a parallelepiped


def face_ranges(p: str, box: Parallelepiped) -> list[range]:
    if len(p) != box.m:
        raise ValueError("paradiagram length differs from the parallelepiped dimension")
    out = []
    for ch, a, b in zip(p, box.mu, box.nu):
        if ch == "0":
            out.append(range(a, a + 1))
        elif ch == "1":
            out.append(range(b, b + 1))
        else:
            if a == b:
                raise ValueError("free position on a degenerate direction")
            out.append(range(a, b + 1))
    return out


def face_points(p: str, box: Parallelepiped) -> set[tuple[int, ...]]:
    return set(itertools.product(*face_ranges(p, box)))


def _sum_points(points: Iterable[tuple[int, ...]]) -> Laurent:
    out: dict[int, int] = {}
    for y in points:
        s = sum(y)
        out[s] = out.get(s, 0) + 1
    return out


def sc_union(A: Iterable[str], box: Parallelepiped) -> Laurent:
    pts: set = set()
    for p in A:
        pts |= face_points(p, box)
    return _sum_points(pts)


def sc_inclusion_exclusion(A: Iterable[str], box: Parallelepiped) -> Laurent:
    faces = [face_ranges(p, box) for p in A]
    total: Laurent = {}
    for r in range(1, len(faces) + 1):
        for group in itertools.combinations(faces, r):
            inter = []
            for k in range(box.m):
                lo = max(g[k].start for g in group)
                hi = min(g[k].stop for g in group)
                if lo >= hi:
                    break
                inter.append(range(lo, hi))
            else:
                total = ladd(total, lscale(_sum_points(itertools.product(*inter)), (-1) ** (r - 1)))
    return total


def sc_sum(A: Iterable[str], box: Parallelepiped) -> Laurent:
    """Exponential sum over the union of faces, by union and by inclusion-exclusion."""
    A = list(A)
    direct = sc_union(A, box)
    if len(A) <= 12 and direct != sc_inclusion_exclusion(A, box):
        raise ArithmeticError("union and inclusion-exclusion disagree")
    return direct


def face_contains(big: str, small: str) -> bool:
    """True iff the face with diagram ``small`` lies in the face ``big``."""
    return len(big) == len(small) and all(b == "*" or b == s for b, s in zip(big, small))


def closure(A: Iterable[str]) -> frozenset[str]:
    """All faces (as diagrams, reduced or not) contained in some face of A."""
    out = set()
    for p in A:
        options = [("0", "1", "*") if ch == "*" else (ch,) for ch in p]
        out.update("".join(t) for t in itertools.product(*options))
    return frozenset(out)
