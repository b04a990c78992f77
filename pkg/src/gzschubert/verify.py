"""Verification suites: every identity checked as two independently computed sides.

Each suite returns a :class:`SuiteResult`; ``passed`` is true only if every
individual check matched exactly.
"""

from __future__ import annotations

import itertools
import math
import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from . import chars as C
from . import mitosis as M
from . import parabox as B
from . import perm as P
from . import ring as R
from .gzface import (
    FaceDiagram,
    count_lattice_points,
    count_polynomial,
    dim,
    ehrhart,
    enumerate_reduced_kogan,
    face_volume,
    schubert_fk,
)
from .poly import Poly, schubert_bgg

DEMAZURE_WEIGHTS = [(0, 1), (0, 1, 2), (0, 2, 5), (0, 1, 2, 3), (0, 1, 3, 6)]


@dataclass
class Check:
    label: str
    passed: bool
    detail: str = ""


@dataclass
class SuiteResult:
    name: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)

    def add(self, label: str, passed: bool, detail: str = "") -> bool:
        self.checks.append(Check(label, bool(passed), detail))
        return bool(passed)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def summary(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "checks": len(self.checks),
            "failures": [{"label": c.label, "detail": c.detail} for c in self.failures()],
        }


def clear_caches() -> None:
    """Drop memoized faces and polynomials, e.g. before timing a suite."""
    from . import gzface, poly

    for fn in (
        gzface._reduced_faces_by_perm,
        gzface.count_polynomial,
        gzface.volume_polynomial_of_face,
        poly._schubert_cached,
        poly.power_sum_poly,
        R.volume_polynomial,
        R.degree_polynomial_operator,
    ):
        fn.cache_clear()


def workers() -> int:
    """Parallelism cap from ``GZSCHUBERT_WORKERS`` (default 1, i.e. serial)."""
    try:
        return max(1, int(os.environ.get("GZSCHUBERT_WORKERS", "1")))
    except ValueError:
        return 1


def _map(fn: Callable, items: list) -> list:
    if workers() > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=workers()) as pool:
            return list(pool.map(fn, items))
    return [fn(x) for x in items]


def _weights(n: int | None, lam: Sequence[int] | None, default: list) -> list[tuple[int, ...]]:
    if lam is not None:
        return [tuple(lam)]
    if n is not None:
        return [l for l in default if len(l) == n]
    return list(default)


# golden values of the three-strand example

GOLDEN_SCHUBERT_3 = {
    (1, 2, 3): {(0, 0, 0): 1},
    (2, 1, 3): {(1, 0, 0): 1},
    (1, 3, 2): {(1, 0, 0): 1, (0, 1, 0): 1},
    (2, 3, 1): {(1, 1, 0): 1},
    (3, 1, 2): {(2, 0, 0): 1},
    (3, 2, 1): {(2, 1, 0): 1},
}


def golden_volume_3() -> Poly:
    a, b, c = (Poly.var(3, i) for i in range(3))
    return (b - a) * (c - b) * (c - a) * Fraction(1, 2)


def suite_golden(**_) -> SuiteResult:
    res = SuiteResult("golden")
    for w, terms in GOLDEN_SCHUBERT_3.items():
        want = Poly(3, terms)
        res.add(f"bgg {w}", schubert_bgg(3, w) == want)
        res.add(f"fk {w}", schubert_fk(3, w) == want)
    res.add("volume n=3", R.volume_polynomial(3) == golden_volume_3())
    return res


def _fk_check(args) -> tuple:
    n, w = args
    return w, schubert_fk(n, w) == schubert_bgg(n, w)


def suite_fk(n: int | None = None, sample: int = 50, seed: int = 0, **_) -> SuiteResult:
    """FK = BGG: exhaustive for n <= 5, a random sample of S_6."""
    res = SuiteResult("fk")
    sizes = [n] if n is not None else [1, 2, 3, 4, 5, 6]
    for m in sizes:
        if m <= 5:
            perms = P.all_perms(m)
        else:
            rng = random.Random(seed)
            perms = [tuple(rng.sample(range(1, m + 1), m)) for _ in range(sample)]
        for w, ok in _map(_fk_check, [(m, w) for w in perms]):
            res.add(f"n={m} w={w}", ok)
    return res


def suite_demazure(n: int | None = None, lam: Sequence[int] | None = None, **_) -> SuiteResult:
    """Faces character equals the Demazure operator character, termwise."""
    res = SuiteResult("demazure")
    for l in _weights(n, lam, DEMAZURE_WEIGHTS):
        m = len(l)
        for w in P.all_perms(m):
            a = C.demazure_character(l, w, "faces")
            b = C.demazure_character(l, w, "operators")
            res.add(f"lambda={l} w={w}", a == b, f"totals {C.total(a)} vs {C.total(b)}")
        top = C.demazure_character(l, P.identity(m), "faces")
        res.add(f"weyl dimension {l}", C.total(top) == C.weyl_dimension(l))
        res.add(
            f"w0 is the Kogan vertex {l}",
            C.demazure_character(l, P.longest(m), "faces") == {C.kogan_weight(l): 1},
        )
    return res


def suite_cdemazure(n: int | None = None, lam: Sequence[int] | None = None, **_) -> SuiteResult:
    """Dual faces give chi_w, and chi_w = w0 chi^{w0 w}."""
    res = SuiteResult("cdemazure")
    for l in _weights(n, lam, DEMAZURE_WEIGHTS):
        m = len(l)
        w0 = P.longest(m)
        u0 = sum(l)
        for w in P.all_perms(m):
            lower = C.demazure_character(l, w, "dual_faces")
            upper = C.demazure_character(l, P.multiply(w0, w), "faces")
            res.add(f"lambda={l} w={w}", lower == C.w_action(w0, upper, u0))
        whole = C.character_of_faces(l)
        for i in range(1, m):
            res.add(f"W-invariance s_{i} {l}", C.s_action(i, whole, u0) == whole)
    return res


def hilbert_inclusion_exclusion(lam: Sequence[int], w: P.Perm, k: int) -> int:
    """Points of the union of dilated faces, from lattice counts of face intersections."""
    lam = tuple(k * x for x in lam)
    faces = enumerate_reduced_kogan(len(lam), tuple(w))
    total = 0
    for r in range(1, len(faces) + 1):
        for group in itertools.combinations(faces, r):
            edges = frozenset().union(*(F.edges for F in group))
            total += (-1) ** (r - 1) * count_lattice_points(lam, FaceDiagram(len(lam), edges))
    return total


def suite_ehrhart(n: int | None = None, lam: Sequence[int] | None = None, kmax: int = 3, **_) -> SuiteResult:
    """Hilbert function of the Schubert variety as a lattice count of dilated faces."""
    res = SuiteResult("ehrhart")
    l = tuple(lam) if lam is not None else (0, 1, 2)
    if n is not None and lam is None:
        l = tuple(range(n))
    m = len(l)
    for w in P.all_perms(m):
        for k in range(1, kmax + 1):
            h = C.hilbert_function(l, w, k)
            res.add(f"lambda={l} w={w} k={k}", h == hilbert_inclusion_exclusion(l, w, k), f"{h}")
    if l == (0, 1, 2):
        e = ehrhart(l)
        res.add("whole polytope (k+1)^3", all(e(k) == (k + 1) ** 3 for k in range(0, 8)))
        res.add("hilbert(id) = (k+1)^3", all(C.hilbert_function(l, P.identity(3), k) == (k + 1) ** 3 for k in range(1, kmax + 1)))
    return res


def strict_grid(n: int, top: int) -> list[tuple[int, ...]]:
    """All 0 <= lam_1 < ... < lam_n <= top."""
    return list(itertools.combinations(range(top + 1), n))


def unisolvent(points: list[tuple[int, ...]], nvars: int, deg: int) -> bool:
    """Whether homogeneous degree-deg polynomials are determined by their values on points."""
    monos = [e for e in itertools.product(range(deg + 1), repeat=nvars) if sum(e) == deg]
    rows = [[Fraction(math.prod(p**a for p, a in zip(pt, e))) for e in monos] for pt in points]
    rank = 0
    cols = len(monos)
    for c in range(cols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][c] != 0:
                f = rows[r][c] / rows[rank][c]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank == cols


@lru_cache(maxsize=None)
def _grid_determines(n: int, deg: int) -> bool:
    """Both sides are homogeneous and translation invariant, so it suffices that
    the grid shifted to lam_1 = 0 determines degree-deg forms in lam_2..lam_n."""
    if n == 1:
        return True
    pts = sorted({tuple(x - l[0] for x in l[1:]) for l in strict_grid(n, 2 * n)})
    return unisolvent(pts, n - 1, deg)


def suite_degree(n: int | None = None, lam: Sequence[int] | None = None, **_) -> SuiteResult:
    """Degree polynomials: operator side against Kogan and dual Kogan face volumes."""
    res = SuiteResult("degree")
    sizes = [n] if n is not None else [2, 3, 4]
    for m in sizes:
        grid = [tuple(lam)] if lam is not None else strict_grid(m, 2 * m)
        for w in P.all_perms(m):
            op = R.degree_polynomial_operator(m, w)
            bad = []
            for l in grid:
                a = Fraction(op.evaluate(l))
                if a != R.degree_volume(l, w) or a != R.degree_volume(l, w, dual=True):
                    bad.append(l)
            res.add(f"n={m} w={w} on {len(grid)} weights", not bad, f"mismatch at {bad[:3]}")
            # the face volumes are polynomials too: compare top parts of the counts
            top = dim(m) - P.length(w)
            vol_sum = Poly.const(m, 0)
            for F in enumerate_reduced_kogan(m, w):
                vol_sum = vol_sum + count_polynomial(F).homogeneous_part(top)
            res.add(f"n={m} w={w} polynomial identity", vol_sum == op)
            if lam is None:
                res.add(f"n={m} w={w} grid determines degree {top}", _grid_determines(m, top))
        res.add(f"n={m} D_w0 = 1", R.degree_polynomial_operator(m, P.longest(m)) == Poly.const(m, 1))
        res.add(f"n={m} D_e = vol", R.degree_polynomial_operator(m, P.identity(m)) == R.volume_polynomial(m))
    if n in (None, 3):
        res.add("D_s1(0,1,2) = 3/2", R.degree_polynomial(3, (2, 1, 3), "operator", (0, 1, 2)) == Fraction(3, 2))
        res.add("D_s1(0,1,2) by volume", R.degree_volume((0, 1, 2), (2, 1, 3)) == Fraction(3, 2))
        res.add("deg_(0,1,2)(X) = 6", R.degree((0, 1, 2), (1, 2, 3)) == 6)
    return res


def suite_mitosis(n: int | None = None, operator_max: int = 4, **_) -> SuiteResult:
    """Mirror mitosis generates the faces of s_i w; related fiber-level statements."""
    res = SuiteResult("mitosis")
    sizes = [n] if n is not None else [2, 3, 4, 5]
    for m in sizes:
        lam = tuple(k * (k + 1) // 2 for k in range(m))
        for w in P.all_perms(m):
            faces = enumerate_reduced_kogan(m, w)
            for i in range(1, m):
                if not P.left_descent(w, i):
                    continue
                out = M.mitosis_of_set(faces, i)
                want = enumerate_reduced_kogan(m, P.multiply(P.simple(m, i), w))
                res.add(f"n={m} w={w} i={i}", out == want)
                if m <= operator_max:
                    lhs = C.demazure_T(i, "minus", C.character_of_faces(lam, faces), sum(lam))
                    res.add(f"T-mitosis n={m} w={w} i={i}", lhs == C.character_of_faces(lam, out))
                for F in faces:
                    if M.fiber_paradiagram(F, i).startswith("0"):
                        continue
                    if m <= 4:
                        G = M.global_witness(F, i)
                        res.add(f"witness n={m} F={sorted(F.edges)} i={i}", M.is_witness(F, G, i))
            for F in faces:
                for i in range(1, m):
                    kids = M.mirror_mitosis(F, i)
                    k = M.initial_run(F, i)
                    kp = sum(M.has_edge(F, i + 1, c) for c in range(1, k + 1))
                    ok = len(kids) == k - kp
                    if m <= 4:
                        fib = sorted(M.fiber_paradiagram(G, i) for G in kids)
                        ok = ok and fib == sorted(B.paramitosis(M.fiber_paradiagram(F, i)))
                    res.add(f"count n={m} F={sorted(F.edges)} i={i}", ok)
                    for G in M.ladder_moves(F, i):
                        res.add(
                            f"ladder n={m} F={sorted(F.edges)} i={i}",
                            G.is_kogan and M.face_perm(G) == w and M.is_reduced_face(G)
                            and F in M.inverse_ladder_moves(G, i),
                        )
    return res


def random_box(rng: random.Random, m: int, strict: bool = False) -> B.Parallelepiped:
    mu, nu = [], []
    for _ in range(m):
        a, b = sorted(rng.sample(range(-3, 4), 2)) if strict else sorted(rng.choices(range(-3, 4), k=2))
        mu.append(a)
        nu.append(b)
    return B.Parallelepiped(tuple(mu), tuple(nu))


def _points_of(A, box) -> set:
    pts: set = set()
    for p in A:
        pts |= B.face_points(p, box)
    return pts


def suite_parabox(samples: int = 500, seed: int = 0, **_) -> SuiteResult:
    """Exponential sums over parallelepipeds, L-classes and paramitosis."""
    res = SuiteResult("parabox")
    rng = random.Random(seed)
    for s in range(samples):
        box = random_box(rng, rng.randint(1, 5))
        f = B.s_pi(box)
        res.add(f"dual {box}", B.star_dual(f, box.C) == f)
        res.add(f"SPi {box}", B.t_operator(B.s_pi(box.lower_face()), box.C) == f)
        res.add(f"T idempotent {box}", B.t_operator(B.t_operator(f, box.C), box.C) == B.t_operator(f, box.C))
        g = {rng.randint(-6, 6): rng.randint(-3, 3) for _ in range(4)}
        g = B.clean(g)
        Tg = B.t_operator(g, box.C)
        res.add(f"T idempotent on random input {s}", B.t_operator(Tg, box.C) == Tg)

    for m in range(1, 7):
        classes = B.all_l_classes(m)
        verts = {A: B.simplex_vertices(A) for A in classes}
        subsets = {frozenset(c) for k in range(1, m + 2) for c in itertools.combinations(B.reduced_vertices(m), k)}
        res.add(f"cubic bijection m={m}", set(verts.values()) == subsets and len(classes) == len(subsets))
        counts = [sum(1 for v in verts.values() if len(v) == k + 1) for k in range(m + 1)]
        res.add(f"cubic counts m={m}", counts == [math.comb(m + 1, k + 1) for k in range(m + 1)], str(counts))
        res.add(
            f"classes as products m={m}",
            all(A == B.l_class_product(next(iter(A))) for A in classes)
            and all(B.class_of_vertices(v) == A for A, v in verts.items()),
        )
        if m <= 4:
            box = B.Parallelepiped((0,) * m, (1,) * m)
            ok = True
            for A1, A2 in itertools.combinations(classes, 2):
                inter = _points_of(A1, box) & _points_of(A2, box)
                common = verts[A1] & verts[A2]
                if common:
                    ok &= inter == _points_of(B.class_of_vertices(common), box)
                else:
                    ok &= not inter
            res.add(f"intersections m={m}", ok)

    rng = random.Random(seed + 1)
    for s in range(samples // 5):
        m = rng.randint(1, 5)
        box = random_box(rng, m, strict=True)
        starts = [A for A in B.all_l_classes(m) if next(iter(A)).startswith("0")]
        A = rng.choice(starts)
        Mc = B.paramitosis_class(A)
        c = B.image_constant(next(iter(A)), box)
        res.add(f"paramitosis {sorted(A)} {box}", B.sc_sum(Mc, box) == B.t_operator(B.sc_sum(A, box), c))
        # unions share the operator only when no final parabox shifts the constant
        open_end = [X for X in starts if not B.decompose_paraboxes(next(iter(X))).final]
        As = rng.sample(open_end, rng.randint(1, min(3, len(open_end))))
        Bs = [B.paramitosis_class(X) for X in As]
        unionA = [p for X in As for p in X]
        unionB = [p for X in Bs for p in X]
        scB = B.sc_sum(unionB, box)
        res.add(
            f"nonempty {s}",
            scB == B.t_operator(B.sc_sum(unionA, box), box.C) == B.t_operator(scB, box.C),
        )
        # mixed families: B = M(A') for classes A' inside the union of the A_i
        ptsA = _points_of(unionA, box)
        inside = [X for X in open_end if _points_of(X, box) <= ptsA]
        chosen = rng.sample(inside, rng.randint(1, min(2, len(inside))))
        mixed = [B.paramitosis_class(X) for X in chosen]
        # pointwise form of B = M((A_1 u ... u A_k) n B)
        cond = all(_points_of(Y, box) & ptsA == _points_of(X, box) for X, Y in zip(chosen, mixed))
        res.add(f"mixed family condition {s}", cond)
        everything = unionA + [p for Y in mixed for p in Y]
        lhs = B.sc_sum(B.paramitosis_set(everything), box)
        res.add(f"paramitosis1 {s}", lhs == B.t_operator(B.sc_sum(everything, box), box.C))
    return res


def suite_ring(n: int | None = None, **_) -> SuiteResult:
    """Poincare duality, structure constants and Monk's rule through the volume polynomial."""
    res = SuiteResult("ring")
    sizes = [n] if n is not None else [2, 3, 4]
    for m in sizes:
        d = dim(m)
        w0 = P.longest(m)
        perms = P.all_perms(m)
        vol = R.volume_polynomial(m)
        translate = sum((vol.partial(i) for i in range(m)), Poly.const(m, 0))
        res.add(f"n={m} translation invariance", not translate)
        for u in perms:
            for v in perms:
                if P.length(u) + P.length(v) == d:
                    want = 1 if v == P.multiply(w0, u) else 0
                    res.add(f"n={m} pairing {u} {v}", R.schubert_pairing(m, u, v) == want)
        for w, u in itertools.product(perms, repeat=2):
            for v in perms:
                if P.length(w) + P.length(u) != P.length(v):
                    continue
                c = R.structure_constant(m, w, u, v)
                res.add(
                    f"n={m} c({w},{u};{v})",
                    c == R.structure_constant(m, u, w, v) == R.structure_constant_expansion(m, w, u, v),
                    str(c),
                )
        for r in range(1, m):
            s = P.simple(m, r)
            for w in perms:
                got = sorted(
                    v for v in perms
                    if P.length(v) == P.length(w) + 1 and R.structure_constant(m, s, w, v) == 1
                )
                res.add(f"n={m} monk s_{r} * {w}", got == R.monk(m, r, w))
    return res


def suite_richardson(n: int | None = None, sample: int = 30, seed: int = 0, lam: Sequence[int] | None = None, **_) -> SuiteResult:
    """Vertex counts of Kogan/dual Kogan pairs against structure constants (exploratory)."""
    res = SuiteResult("richardson")
    sizes = [n] if n is not None else [3, 4]
    for m in sizes:
        l = tuple(lam) if lam is not None else tuple(k * (k + 1) // 2 for k in range(m))
        d = dim(m)
        pairs = [(w, u) for w in P.all_perms(m) for u in P.all_perms(m) if P.length(w) + P.length(u) == d]
        if m > 3:
            pairs = random.Random(seed).sample(pairs, min(sample, len(pairs)))
        for w, u in pairs:
            rep = R.richardson_report(m, l, w, u)
            res.add(f"n={m} w={w} u={u}", rep["agree"], f"count {rep['vertex_count']} vs {rep['structure_constant']}")
    return res


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "golden": suite_golden,
    "fk": suite_fk,
    "demazure": suite_demazure,
    "cdemazure": suite_cdemazure,
    "ehrhart": suite_ehrhart,
    "degree": suite_degree,
    "mitosis": suite_mitosis,
    "parabox": suite_parabox,
    "ring": suite_ring,
    "richardson": suite_richardson,
}


def run_suite(name: str, **params) -> SuiteResult:
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}") from None
    return fn(**{k: v for k, v in params.items() if v is not None})
