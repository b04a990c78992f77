"""Command-line front end: ``gzschubert <command> [options]``.

Output is JSON by default (``--format text`` for a readable listing). Input
errors exit with status 1 and a JSON object ``{"error": ...}`` on stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Sequence

from . import chars as C
from . import mitosis as M
from . import perm as P
from . import ring as R
from . import verify as V
from .gzface import check_weight, enumerate_reduced_kogan, face_word, schubert_fk
from .poly import Poly, schubert_bgg

MAX_N = 7


class UsageError(ValueError):
    pass


def _ints(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise UsageError(f"bad {what} {text!r}: expected comma-separated integers") from None


def _check_n(n: int, args) -> int:
    if n < 1:
        raise UsageError("n must be positive")
    if n > MAX_N and not args.allow_large:
        raise UsageError(f"n={n} exceeds the guard {MAX_N}; pass --allow-large to override")
    return n


def _weight(args) -> tuple[int, ...]:
    if args.lam is None:
        raise UsageError("--lambda is required")
    lam = _ints(args.lam, "weight")
    try:
        check_weight(lam)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if args.n is not None and args.n != len(lam):
        raise UsageError("--n disagrees with the length of --lambda")
    _check_n(len(lam), args)
    return lam


def _perm_value(text: str, n: int | None, args, what: str = "permutation") -> P.Perm:
    w = _ints(text, what)
    try:
        P.check_perm(w)
    except ValueError as e:
        raise UsageError(f"bad {what} {text!r}: {e}") from None
    if n is not None and len(w) != n:
        raise UsageError(f"{what} {text!r} is not in S_{n}")
    _check_n(len(w), args)
    return w


def _perm(args, n: int | None = None) -> P.Perm:
    """The permutation from --perm or from --word (which needs a rank)."""
    n = n if n is not None else args.n
    if args.perm is not None and args.word is not None:
        raise UsageError("give either --perm or --word, not both")
    if args.perm is not None:
        return _perm_value(args.perm, n, args)
    if args.word is not None:
        if n is None:
            raise UsageError("--word needs --n (or --lambda)")
        _check_n(n, args)
        word = _ints(args.word, "word")
        try:
            return P.product_of_word(n, word)
        except ValueError as e:
            raise UsageError(str(e)) from None
    raise UsageError("a permutation is required (--perm or --word)")


def _frac(x) -> str:
    return str(Fraction(x))


def _poly_out(f: Poly, nvars: int) -> list[dict]:
    return f.truncate(nvars).to_json() if nvars < f.nvars else f.to_json()


def cmd_schubert(args) -> dict:
    w = _perm(args)
    n = len(w)
    method = args.method or "bgg"
    if method not in ("bgg", "fk"):
        raise UsageError("schubert --method is bgg or fk")
    f = schubert_bgg(n, w) if method == "bgg" else schubert_fk(n, w)
    return {"perm": list(w), "method": method, "poly": _poly_out(f, max(n - 1, 1))}


def cmd_faces(args) -> dict:
    w = _perm(args)
    faces = enumerate_reduced_kogan(len(w), w, dual=args.dual)
    return {
        "perm": list(w),
        "dual": args.dual,
        "count": len(faces),
        "faces": [dict(F.to_json(), word=list(face_word(F))) for F in faces],
    }


def cmd_mitosis(args) -> dict:
    w = _perm(args)
    n = len(w)
    i = args.row
    if i is None or not 1 <= i <= n - 1:
        raise UsageError(f"--row must be in 1..{n - 1}")
    if not P.left_descent(w, i):
        raise UsageError(f"s_{i} is not a left descent of {list(w)}")
    out = M.mitosis_of_set(enumerate_reduced_kogan(n, w), i)
    target = P.multiply(P.simple(n, i), w)
    return {
        "perm": list(w),
        "row": i,
        "result_perm": list(target),
        "faces": [F.to_json() for F in out],
        "matches_enumeration": out == enumerate_reduced_kogan(n, target),
    }


def cmd_character(args) -> dict:
    lam = _weight(args)
    w = _perm(args, len(lam))
    method = args.method or "faces"
    if method not in ("faces", "operators", "dual_faces"):
        raise UsageError("character --method is faces, operators or dual_faces")
    c = C.demazure_character(lam, w, method)
    return {"lambda": list(lam), "perm": list(w), "method": method, "total": C.total(c), "character": C.to_json(c)}


def cmd_hilbert(args) -> dict:
    lam = _weight(args)
    w = _perm(args, len(lam))
    if args.k is None or args.k < 1:
        raise UsageError("--k must be a positive integer")
    return {"lambda": list(lam), "perm": list(w), "k": args.k, "value": C.hilbert_function(lam, w, args.k)}


def cmd_degree(args) -> dict:
    if args.lam is None:
        w = _perm(args)
        n = len(w)
        return {"perm": list(w), "poly": R.degree_polynomial_operator(n, w).to_json()}
    lam = _weight(args)
    w = _perm(args, len(lam))
    n = len(lam)
    out = {"lambda": list(lam), "perm": list(w), "operator": _frac(R.degree_polynomial(n, w, "operator", lam))}
    methods = [args.method] if args.method else ["volume", "dual_volume"]
    for m in methods:
        if m not in ("operator", "volume", "dual_volume"):
            raise UsageError("degree --method is operator, volume or dual_volume")
        if m != "operator":
            out[m] = _frac(R.degree_polynomial(n, w, m, lam))
    return out


def cmd_structure(args) -> dict:
    w = _perm(args)
    n = len(w)
    if args.u is None:
        raise UsageError("--u is required")
    u = _perm_value(args.u, n, args, "permutation --u")
    if args.v is not None:
        v = _perm_value(args.v, n, args, "permutation --v")
        try:
            c = R.structure_constant(n, w, u, v)
        except ValueError as e:
            raise UsageError(str(e)) from None
        return {"w": list(w), "u": list(u), "v": list(v), "coefficient": c}
    target = P.length(w) + P.length(u)
    terms = []
    for v in P.all_perms(n):
        if P.length(v) == target:
            c = R.structure_constant(n, w, u, v)
            if c:
                terms.append({"v": list(v), "coefficient": c})
    return {"w": list(w), "u": list(u), "product": terms}


def cmd_richardson(args) -> dict:
    lam = _weight(args)
    n = len(lam)
    w = _perm(args, n)
    if args.u is None:
        raise UsageError("--u is required")
    u = _perm_value(args.u, n, args, "permutation --u")
    try:
        return R.richardson_report(n, lam, w, u)
    except ValueError as e:
        raise UsageError(str(e)) from None


def cmd_verify(args) -> dict:
    if args.suite is None:
        raise UsageError(f"--suite is required ({', '.join(V.SUITES)})")
    if args.suite not in V.SUITES:
        raise UsageError(f"unknown suite {args.suite!r}")
    lam = _weight(args) if args.lam is not None else None
    if args.n is not None:
        _check_n(args.n, args)
    res = V.run_suite(args.suite, n=args.n, lam=lam)
    return res.summary()


COMMANDS = {
    "schubert": cmd_schubert,
    "faces": cmd_faces,
    "mitosis": cmd_mitosis,
    "character": cmd_character,
    "hilbert": cmd_hilbert,
    "degree": cmd_degree,
    "structure": cmd_structure,
    "richardson": cmd_richardson,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gzschubert", description="Schubert calculus on Gelfand-Zetlin polytopes")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--n", type=int)
        p.add_argument("--perm", help="one-line notation, e.g. 3,2,1")
        p.add_argument("--word", help="reduced word in simple reflections, e.g. 1,2,1 (needs --n)")
        p.add_argument("--lambda", dest="lam", help="strictly increasing weight, e.g. 0,1,2")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--out", help="write output to this file")
        p.add_argument("--allow-large", action="store_true", help=f"lift the n <= {MAX_N} guard")
        if name == "schubert":
            p.add_argument("--method", choices=("bgg", "fk"))
        elif name == "faces":
            p.add_argument("--dual", action="store_true")
        elif name == "mitosis":
            p.add_argument("--row", type=int)
        elif name == "character":
            p.add_argument("--method", choices=("faces", "operators", "dual_faces"))
        elif name == "hilbert":
            p.add_argument("--k", type=int)
        elif name == "degree":
            p.add_argument("--method", choices=("operator", "volume", "dual_volume"))
        elif name in ("structure", "richardson"):
            p.add_argument("--u", help="second permutation")
            if name == "structure":
                p.add_argument("--v", help="target permutation")
        elif name == "verify":
            p.add_argument("--suite", choices=tuple(V.SUITES))
    return parser


def _inline(v: Any) -> str:
    if isinstance(v, dict):
        return ", ".join(f"{k}={_inline(x)}" for k, x in v.items())
    if isinstance(v, (list, tuple)):
        return json.dumps(v)
    return str(v)


def render_text(result: dict) -> str:
    """One line per scalar field; lists of records become indented rows."""
    lines = []
    for k, v in result.items():
        if isinstance(v, list) and v and all(isinstance(x, dict) for x in v):
            lines.append(f"{k}:")
            lines.extend(f"  {_inline(x)}" for x in v)
        else:
            lines.append(f"{k}: {_inline(v)}")
    return "\n".join(lines)


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = COMMANDS[args.command](args)
    except UsageError as e:
        print(json.dumps({"error": str(e), "command": args.command}))
        return 1
    if args.format == "json":
        text = json.dumps(result, sort_keys=False)
    else:
        text = render_text(result)
    _emit(text, args.out)
    if args.command == "verify" and not result["passed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
