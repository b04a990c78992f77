"""Permutations of {1..n} in one-line notation and words in simple reflections.

A permutation is a tuple ``w`` with ``w[i-1] == w(i)``. A word ``(a, b, c)``
stands for the product ``s_a s_b s_c`` composed as functions, so
``(s_a s_b)(x) = s_a(s_b(x))``. Right multiplication by ``s_i`` swaps the
entries in positions i and i+1; left multiplication swaps the values i and i+1.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterable, Iterator, Sequence

Perm = tuple[int, ...]
Word = tuple[int, ...]


def check_perm(w: Sequence[int]) -> Perm:
    w = tuple(int(x) for x in w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation of 1..{len(w)}: {w}")
    return w


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def longest(n: int) -> Perm:
    return tuple(range(n, 0, -1))


def length(w: Perm) -> int:
    """Number of inversions."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def inverse(w: Perm) -> Perm:
    inv = [0] * len(w)
    for i, wi in enumerate(w, 1):
        inv[wi - 1] = i
    return tuple(inv)


def multiply(w: Perm, u: Perm) -> Perm:
    """The composition ``w u``, i.e. ``x -> w(u(x))``."""
    if len(w) != len(u):
        raise ValueError("permutations of different rank")
    return tuple(w[u[i] - 1] for i in range(len(u)))


def simple(n: int, i: int) -> Perm:
    if not 1 <= i <= n - 1:
        raise ValueError(f"simple reflection s_{i} out of range for n={n}")
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def _check_word(n: int, word: Iterable[int]) -> Word:
    word = tuple(int(a) for a in word)
    for a in word:
        if not 1 <= a <= n - 1:
            raise ValueError(f"letter {a} out of range 1..{n - 1}")
    return word


def product_of_word(n: int, word: Iterable[int]) -> Perm:
    w = list(range(1, n + 1))
    for a in _check_word(n, word):
        w[a - 1], w[a] = w[a], w[a - 1]
    return tuple(w)


def is_reduced(n: int, word: Iterable[int]) -> bool:
    w = list(range(1, n + 1))
    for a in _check_word(n, word):
        # right multiplication by s_a adds an inversion iff w(a) < w(a+1)
        if w[a - 1] > w[a]:
            return False
        w[a - 1], w[a] = w[a], w[a - 1]
    return True


def w0_conjugate(w: Perm) -> Perm:
    """``w0 w w0^{-1}``."""
    n = len(w)
    return tuple(n + 1 - w[n - i] for i in range(1, n + 1))


def left_descent(w: Perm, i: int) -> bool:
    """True iff ``l(s_i w) < l(w)``, i.e. ``w^{-1}(i) > w^{-1}(i+1)``."""
    return w.index(i) > w.index(i + 1)


def right_descent(w: Perm, i: int) -> bool:
    """True iff ``l(w s_i) < l(w)``."""
    return w[i - 1] > w[i]


def reduced_word(w: Perm) -> Word:
    """A reduced word for ``w``, found by repeatedly stripping right descents."""
    w = list(w)
    out: list[int] = []
    while True:
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                out.append(i + 1)
                break
        else:
            return tuple(reversed(out))


def reduced_words(w: Perm) -> Iterator[Word]:
    """All reduced words of ``w``."""
    w = tuple(w)
    if length(w) == 0:
        yield ()
        return
    for i in range(1, len(w)):
        if right_descent(w, i):
            ws = list(w)
            ws[i - 1], ws[i] = ws[i], ws[i - 1]
            for word in reduced_words(tuple(ws)):
                yield word + (i,)


def all_perms(n: int) -> list[Perm]:
    return [tuple(p) for p in permutations(range(1, n + 1))]


def code(w: Perm) -> tuple[int, ...]:
    """Lehmer code: ``c_i = #{j > i : w(j) < w(i)}``."""
    n = len(w)
    return tuple(sum(1 for j in range(i + 1, n) if w[j] < w[i]) for i in range(n))


def from_code(c: Sequence[int]) -> Perm:
    """Smallest permutation whose Lehmer code begins with ``c``."""
    n = max((i + 1 + ci for i, ci in enumerate(c)), default=1)
    n = max(n, len(c))
    avail = list(range(1, n + 1))
    out = []
    for i in range(n):
        ci = c[i] if i < len(c) else 0
        out.append(avail.pop(ci))
    return tuple(out)


def embed(w: Perm, n: int) -> Perm:
    """View ``w`` in S_n (n >= len(w)) by fixing the extra points."""
    if n < len(w):
        raise ValueError("cannot shrink a permutation")
    return tuple(w) + tuple(range(len(w) + 1, n + 1))


def parse_perm(text: str) -> Perm:
    return check_perm(int(x) for x in text.replace(" ", "").split(",") if x)


def parse_word(text: str) -> Word:
    return tuple(int(x) for x in text.replace(" ", "").split(",") if x)
