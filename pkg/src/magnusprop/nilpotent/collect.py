"""Normal forms in free nilpotent groups.

Two routes to the same normal form:

* ``collect`` runs Hall's collection process letter by letter. It is slow but
  needs nothing beyond the commutator identities, so it is the reference.
* ``NilWord`` multiplies exponent vectors with compiled polynomials. The
  polynomials are interpolated from ``collect`` on a finite set of points and are
  exact because every normal-form coordinate of a product is an integer-valued
  polynomial of bounded weighted degree in the coordinates of the factors.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .hall import HallBasis, hall_basis

Letter = tuple[int, int]   # (basis position, +1 or -1)


class CollectionError(RuntimeError):
    pass


# -- Hall's collection process -------------------------------------------------

def _push(out: list, letter: Letter) -> None:
    """Append with free cancellation against the last letter."""
    if out and out[-1][0] == letter[0] and out[-1][1] == -letter[1]:
        out.pop()
    else:
        out.append(letter)


def _conjugate(basis: HallBasis, letter: Letter, b: int, delta: int, out: list) -> None:
    """Append the letters of ``letter`` conjugated by ``b^delta`` (weight > c dropped)."""
    u, eps = letter
    if basis.weights[u] + basis.weights[b] > basis.c:
        _push(out, letter)
        return
    cb = basis.pair_index.get((u, b))
    if cb is None:
        raise CollectionError(f"non-basic commutator [{basis.name(u)},{basis.name(b)}] met")
    if delta == 1:
        # u^b = u [u,b]
        tail = [(cb, 1)]
    else:
        # u^(b^-1) = u ([u,b]^(b^-1))^-1
        inner: list = []
        _conjugate(basis, (cb, 1), b, -1, inner)
        tail = [(g, -s) for g, s in reversed(inner)]
    if eps == 1:
        _push(out, (u, 1))
        for t in tail:
            _push(out, t)
    else:
        for g, s in reversed(tail):
            _push(out, (g, -s))
        _push(out, (u, -1))


def collect_letters(basis: HallBasis, word: Iterable[Letter]) -> list[int]:
    """Hall's collection process on a word of basic-commutator letters.

    Letters of weight ``c`` are central, so their exponents are banked directly.
    """
    exps = [0] * len(basis)
    c = basis.c
    weights = basis.weights

    def sift(letters):
        kept: list = []
        for g, s in letters:
            if weights[g] == c:
                exps[g] += s
            elif weights[g] < c:
                _push(kept, (g, s))
        return kept

    cur = sift(word)
    for k in range(len(basis)):
        if not cur:
            break
        rest: list = []
        e = 0
        for letter in cur:
            if letter[0] != k:
                _push(rest, letter)
                continue
            delta = letter[1]
            e += delta
            # move b_k^delta left past everything still uncollected
            moved: list = []
            for other in rest:
                _conjugate(basis, other, k, delta, moved)
            rest = sift(moved)
        exps[k] += e
        cur = rest
    return exps


def collect(word: Iterable[Letter], r: int, c: int) -> "NilWord":
    """Normal form of a word in the generators (letters ``(generator, +-1)``)."""
    basis = hall_basis(r, c)
    word = list(word)
    for g, s in word:
        if not (0 <= g < r) or s not in (1, -1):
            raise ValueError(f"bad letter {(g, s)}")
    return NilWord(basis, collect_letters(basis, word))


def normal_form_letters(basis: HallBasis, exps: Sequence[int]) -> list[Letter]:
    """The normal form as a word of basic-commutator letters."""
    out = []
    for i, e in enumerate(exps):
        s = 1 if e > 0 else -1
        out.extend([(i, s)] * abs(e))
    return out


def expand_to_generators(basis: HallBasis, exps: Sequence[int]) -> list[Letter]:
    out = []
    for i, e in enumerate(exps):
        if e:
            piece = basis.letters(i, 1 if e > 0 else -1)
            out.extend(piece * abs(e))
    return out


# -- interpolation of product polynomials ------------------------------------------

def downset(weights: Sequence[int], bound: int) -> list[tuple[int, ...]]:
    """All nonnegative vectors ``a`` with ``sum(a_i * weights_i) <= bound``."""
    n = len(weights)
    out = []

    def rec(i, left, cur):
        if i == n:
            out.append(tuple(cur))
            return
        w = weights[i]
        for a in range(left // w + 1):
            cur.append(a)
            rec(i + 1, left - a * w, cur)
            cur.pop()

    rec(0, bound, [])
    return out


def _sparse_points(weights: Sequence[int], bound: int) -> list[tuple[tuple[int, int], ...]]:
    """Sparse downset: each point is a sorted tuple of ``(variable, exponent)``."""
    n = len(weights)
    out = []

    def rec(start, left, cur):
        out.append(tuple(cur))
        for i in range(start, n):
            w = weights[i]
            for a in range(1, left // w + 1):
                cur.append((i, a))
                rec(i + 1, left - a * w, cur)
                cur.pop()

    rec(0, bound, [])
    return out


def newton_coefficients(
    values: dict, weights: Sequence[int], bound: int, select: Callable[[int], bool] | None = None,
) -> dict:
    """Coefficients in the basis ``prod C(v_i, a_i)`` from values on the downset.

    ``values`` maps sparse points to numbers; the result maps sparse monomials to
    nonzero coefficients. Only variables with ``select(i)`` true are used.
    """
    coeffs = {}
    pts = [pt for pt in values if select is None or all(select(i) for i, _ in pt)]
    for a in pts:
        if sum(weights[i] * e for i, e in a) > bound:
            continue
        total = 0
        ranges = [range(e + 1) for _, e in a]
        for b in itertools.product(*ranges):
            sign = (-1) ** (sum(e for _, e in a) - sum(b))
            mult = 1
            for (_, e), f in zip(a, b):
                mult *= math.comb(e, f)
            key = tuple((i, f) for (i, _), f in zip(a, b) if f)
            total += sign * mult * values[key]
        if total:
            coeffs[a] = total
    return coeffs


def compile_polynomials(nvars: int, polys: Sequence[dict], name: str = "_poly") -> Callable:
    """Compile Newton-basis polynomials into a Python function of one flat vector."""
    needed = set()
    for poly in polys:
        for mono in poly:
            needed.update(mono)
    lines = [f"def {name}(v):"]
    for i in range(nvars):
        if any(j == i for j, _ in needed):
            lines.append(f"    v{i} = v[{i}]")
    for i, a in sorted(needed):
        if a == 1:
            continue
        prod = "*".join(f"(v{i}-{k})" if k else f"v{i}" for k in range(a))
        lines.append(f"    b{i}_{a} = ({prod})//{math.factorial(a)}")
    exprs = []
    for poly in polys:
        terms = []
        for mono, coef in sorted(poly.items()):
            factors = [f"v{i}" if a == 1 else f"b{i}_{a}" for i, a in mono]
            body = "*".join(factors) if factors else "1"
            terms.append(f"{coef}*{body}" if coef != 1 else body)
        exprs.append(" + ".join(terms) if terms else "0")
    lines.append("    return [" + ", ".join(exprs) + "]")
    env: dict = {}
    exec("\n".join(lines), env)
    fn = env[name]
    fn.source = "\n".join(lines)
    return fn


class ProductPolynomials:
    """Compiled multiplication of normal forms for a free class-``c`` group of rank ``r``.

    Coordinate ``k`` of ``x * y`` is interpolated over the variables ``x_j, y_j``
    with weight at most ``wt(k)``, in weighted degree at most ``wt(k)``.
    """

    def __init__(self, basis: HallBasis):
        self.basis = basis
        n = len(basis)
        weights = basis.weights * 2
        pts = _sparse_points(weights, basis.c)
        values = {}
        for pt in pts:
            x, y = [0] * n, [0] * n
            for i, a in pt:
                if i < n:
                    x[i] = a
                else:
                    y[i - n] = a
            word = expand_to_generators(basis, x) + expand_to_generators(basis, y)
            values[pt] = collect_letters(basis, word)
        polys = []
        for k in range(n):
            wk = basis.weights[k]
            vals = {pt: v[k] for pt, v in values.items()}
            polys.append(newton_coefficients(vals, weights, wk, lambda i, wk=wk: weights[i] <= wk))
        self.polys = polys
        self._fn = compile_polynomials(2 * n, polys, "_mul")

    def mul(self, x: Sequence[int], y: Sequence[int]) -> list[int]:
        return self._fn(list(x) + list(y))

    def inverse(self, x: Sequence[int]) -> list[int]:
        n = len(self.basis)
        y = [0] * n
        for w in range(1, self.basis.c + 1):
            z = self.mul(x, y)
            for k in self.basis.by_weight[w]:
                y[k] = -z[k]
        return y


@lru_cache(maxsize=None)
def product_polynomials(r: int, c: int) -> ProductPolynomials:
    return ProductPolynomials(hall_basis(r, c))


# -- elements -----------------------------------------------------------------------

class NilWord:
    """Element of the free class-``c`` nilpotent group of rank ``r`` in Hall normal form."""

    __slots__ = ("basis", "exponents")

    def __init__(self, basis: HallBasis, exponents: Sequence[int]):
        if len(exponents) != len(basis):
            raise ValueError("exponent vector has the wrong length")
        self.basis = basis
        self.exponents = tuple(int(e) for e in exponents)

    @classmethod
    def identity(cls, r: int, c: int) -> "NilWord":
        b = hall_basis(r, c)
        return cls(b, [0] * len(b))

    @classmethod
    def generator(cls, i: int, r: int, c: int, power: int = 1) -> "NilWord":
        b = hall_basis(r, c)
        e = [0] * len(b)
        e[i] = power
        return cls(b, e)

    @classmethod
    def basic(cls, basis: HallBasis, name_or_index, power: int = 1) -> "NilWord":
        i = basis.index(name_or_index) if isinstance(name_or_index, str) else name_or_index
        e = [0] * len(basis)
        e[i] = power
        return cls(basis, e)

    @classmethod
    def from_letters(cls, letters: Iterable[Letter], r: int, c: int) -> "NilWord":
        """Fast evaluation of a generator word with the compiled product."""
        out = cls.identity(r, c)
        gens = {}
        for g, s in letters:
            if (g, s) not in gens:
                gens[(g, s)] = cls.generator(g, r, c, s)
            out = out * gens[(g, s)]
        return out

    @property
    def _poly(self) -> ProductPolynomials:
        return product_polynomials(self.basis.r, self.basis.c)

    def __mul__(self, other: "NilWord") -> "NilWord":
        if other.basis != self.basis:
            raise ValueError("elements of different groups")
        return NilWord(self.basis, self._poly.mul(self.exponents, other.exponents))

    def inverse(self) -> "NilWord":
        return NilWord(self.basis, self._poly.inverse(self.exponents))

    def __pow__(self, k: int) -> "NilWord":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        out = NilWord(self.basis, [0] * len(self.basis))
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conj(self, w: "NilWord") -> "NilWord":
        return w.inverse() * self * w

    def comm(self, *others: "NilWord") -> "NilWord":
        """Left-normed commutator ``[self, a, b, ...]``."""
        out = self
        for o in others:
            out = out.inverse() * out.conj(o)
        return out

    def is_identity(self) -> bool:
        return not any(self.exponents)

    def weight_of_leading(self) -> int | None:
        for i, e in enumerate(self.exponents):
            if e:
                return self.basis.weights[i]
        return None

    def coordinate(self, name: str) -> int:
        return self.exponents[self.basis.index(name)]

    def letters(self) -> list[Letter]:
        return expand_to_generators(self.basis, self.exponents)

    def __eq__(self, other):
        return isinstance(other, NilWord) and self.basis == other.basis \
            and self.exponents == other.exponents

    def __hash__(self):
        return hash(self.exponents)

    def __lt__(self, other):
        return self.exponents < other.exponents

    def __repr__(self):
        return f"NilWord({self})"

    def __str__(self):
        parts = []
        for i, e in enumerate(self.exponents):
            if e:
                nm = self.basis.name(i)
                parts.append(nm if e == 1 else f"{nm}^{e}")
        return "*".join(parts) if parts else "1"

    def to_json(self) -> dict:
        return {
            "r": self.basis.r,
            "c": self.basis.c,
            "basis": [self.basis.nested_name(i) for i in range(len(self.basis))],
            "exponents": list(self.exponents),
        }

    @classmethod
    def from_json(cls, doc: dict) -> "NilWord":
        b = hall_basis(doc["r"], doc["c"])
        if doc.get("basis") not in (None, [b.nested_name(i) for i in range(len(b))]):
            raise ValueError("basis descriptor does not match")
        return cls(b, doc["exponents"])


def parse_letters(word: str, r: int) -> list[Letter]:
    """Letters from a compact string such as ``"xyXY"`` (upper case inverts)."""
    from .hall import generator_name
    names = {generator_name(i, r): i for i in range(r)}
    out = []
    for ch in word:
        if ch in names:
            out.append((names[ch], 1))
        elif ch.lower() in names:
            out.append((names[ch.lower()], -1))
        else:
            raise ValueError(f"unknown letter {ch!r}")
    return out
