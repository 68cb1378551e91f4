"""Free associative ring on two letters, with Lie brackets and the Dynkin test.

Words are tuples over ``{0, 1}`` with ``0`` standing for ``x~`` and ``1`` for ``y~``.
"""

from __future__ import annotations

from typing import Iterable

X, Y = 0, 1
LETTERS = "xy"


class NcPoly:
    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        self.terms = {tuple(w): int(c) for w, c in (terms or {}).items() if c}

    @classmethod
    def letter(cls, i: int) -> "NcPoly":
        return cls({(i,): 1})

    @classmethod
    def word(cls, w: Iterable[int], coeff: int = 1) -> "NcPoly":
        return cls({tuple(w): coeff})

    def __add__(self, other: "NcPoly") -> "NcPoly":
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return NcPoly(out)

    def __neg__(self) -> "NcPoly":
        return NcPoly({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "NcPoly") -> "NcPoly":
        return self + (-other)

    def scale(self, k: int) -> "NcPoly":
        return NcPoly({w: k * c for w, c in self.terms.items()})

    def __mul__(self, other: "NcPoly") -> "NcPoly":
        return nc_mul(self, other)

    def __eq__(self, other):
        return isinstance(other, NcPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def degrees(self) -> set[int]:
        return {len(w) for w in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in sorted(self.terms.items()):
            mono = "".join(LETTERS[i] for i in w) or "1"
            parts.append(f"{c}*{mono}")
        return " + ".join(parts)


def nc_mul(a: NcPoly, b: NcPoly) -> NcPoly:
    out: dict = {}
    for u, cu in a.terms.items():
        for v, cv in b.terms.items():
            w = u + v
            out[w] = out.get(w, 0) + cu * cv
    return NcPoly(out)


def lie_bracket(a: NcPoly, b: NcPoly) -> NcPoly:
    return nc_mul(a, b) - nc_mul(b, a)


def left_normed(word: Iterable[int]) -> NcPoly:
    """``[a_1, a_2, ..., a_n]`` for the letters of a word."""
    word = list(word)
    out = NcPoly.letter(word[0])
    for i in word[1:]:
        out = lie_bracket(out, NcPoly.letter(i))
    return out


def dynkin(a: NcPoly) -> NcPoly:
    out = NcPoly()
    for w, c in a.terms.items():
        out = out + left_normed(w).scale(c)
    return out


def dynkin_is_lie(a: NcPoly) -> bool:
    """Dynkin-Specht-Wever test: homogeneous ``a`` of degree ``n`` is Lie iff ``D(a) = n a``."""
    degs = a.degrees()
    if len(degs) > 1:
        raise ValueError("Dynkin test needs a homogeneous element")
    if not degs:
        return True
    n = degs.pop()
    if n < 1:
        raise ValueError("Dynkin test needs positive degree")
    return dynkin(a) == a.scale(n)


def leading_monomial(a: NcPoly) -> tuple:
    """Smallest monomial with nonzero coefficient, letters ordered ``x~ < y~``."""
    if not a.terms:
        raise ValueError("zero has no leading monomial")
    return min(a.terms)


def leading_term(a: NcPoly) -> tuple[int, tuple]:
    u = leading_monomial(a)
    return a.terms[u], u
