"""Hall bases of free nilpotent groups and the Witt formula."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

GENERATOR_NAMES = "xyzw"


def _mobius(n: int) -> int:
    out, d = 1, 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            out = -out
        d += 1
    return -out if n > 1 else out


def witt_number(r: int, n: int) -> int:
    """Rank of the ``n``-th lower central section of the free group of rank ``r``."""
    if r < 1 or n < 1:
        raise ValueError("r and n must be positive")
    total = sum(_mobius(d) * r ** (n // d) for d in range(1, n + 1) if n % d == 0)
    return total // n


def generator_name(i: int, r: int) -> str:
    if r <= len(GENERATOR_NAMES):
        return GENERATOR_NAMES[i]
    return f"x{i + 1}"


@dataclass(frozen=True)
class BasicCommutator:
    position: int
    weight: int
    generator: int | None = None
    left: int | None = None
    right: int | None = None

    @property
    def is_generator(self) -> bool:
        return self.generator is not None


class HallBasis:
    """Basic commutators of weight at most ``c`` on ``r`` generators, in collection order.

    Weight-one entries are the generators. ``[u, v]`` is basic when ``u > v`` and,
    if ``u = [u1, u2]``, also ``u2 <= v``. Within a weight, entries are sorted by
    the positions of ``u`` and then ``v``.
    """

    def __init__(self, r: int, c: int):
        if r < 1 or c < 1:
            raise ValueError("r and c must be positive")
        self.r, self.c = r, c
        elems = [BasicCommutator(i, 1, generator=i) for i in range(r)]
        by_weight = {1: list(range(r))}
        for n in range(2, c + 1):
            pairs = []
            for a in range(1, n):
                b = n - a
                for u in by_weight[a]:
                    eu = elems[u]
                    for v in by_weight[b]:
                        if u <= v:
                            continue
                        if not eu.is_generator and eu.right > v:
                            continue
                        pairs.append((u, v))
            pairs = sorted(set(pairs))
            by_weight[n] = []
            for u, v in pairs:
                by_weight[n].append(len(elems))
                elems.append(BasicCommutator(len(elems), n, left=u, right=v))
        self.elements = elems
        self.by_weight = by_weight
        self.pair_index = {(e.left, e.right): e.position for e in elems if not e.is_generator}
        self.weights = [e.weight for e in elems]

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"HallBasis(r={self.r}, c={self.c})"

    def __eq__(self, other):
        return isinstance(other, HallBasis) and (self.r, self.c) == (other.r, other.c)

    def __hash__(self):
        return hash((self.r, self.c))

    def counts(self) -> list[int]:
        return [len(self.by_weight[n]) for n in range(1, self.c + 1)]

    def weight_slice(self, n: int) -> range:
        idx = self.by_weight[n]
        return range(idx[0], idx[-1] + 1) if idx else range(0)

    def index(self, name: str) -> int:
        """Position of a basic commutator given as ``x`` or ``[y,x,x]`` or ``[[y,x],x]``."""
        key = _normalize_name(name)
        for e in self.elements:
            if _normalize_name(self.name(e.position)) == key:
                return e.position
        raise KeyError(name)

    def name(self, i: int) -> str:
        """Left-normed name such as ``[y,x,x]``."""
        return "[" + ",".join(self._flat(i)) + "]" if not self.elements[i].is_generator \
            else generator_name(i, self.r)

    def nested_name(self, i: int) -> str:
        """Fully bracketed name such as ``[[y,x],x]``."""
        e = self.elements[i]
        if e.is_generator:
            return generator_name(e.generator, self.r)
        return f"[{self.nested_name(e.left)},{self.nested_name(e.right)}]"

    def _flat(self, i: int) -> list[str]:
        e = self.elements[i]
        if e.is_generator:
            return [generator_name(e.generator, self.r)]
        return self._flat(e.left) + [self.nested_name(e.right)]

    def letters(self, i: int, sign: int = 1) -> list[tuple[int, int]]:
        """Generator word of the basic commutator (``[u,v] = u^-1 v^-1 u v``)."""
        e = self.elements[i]
        if e.is_generator:
            return [(e.generator, sign)]
        u, v = self.letters(e.left), self.letters(e.right)
        word = _inv(u) + _inv(v) + u + v
        return word if sign == 1 else _inv(word)


def _inv(word):
    return [(g, -s) for g, s in reversed(word)]


def _normalize_name(name: str) -> str:
    """Canonical nested form of a commutator name (left-normed brackets expanded)."""
    s = name.replace(" ", "")

    def parse(i):
        if s[i] == "[":
            items = []
            i += 1
            while True:
                item, i = parse(i)
                items.append(item)
                if s[i] == ",":
                    i += 1
                    continue
                if s[i] == "]":
                    i += 1
                    break
                raise ValueError(name)
            out = items[0]
            for it in items[1:]:
                out = f"[{out},{it}]"
            return out, i
        j = i
        while j < len(s) and s[j] not in ",]":
            j += 1
        return s[i:j], j

    out, end = parse(0)
    if end != len(s):
        raise ValueError(name)
    return out


@lru_cache(maxsize=None)
def hall_basis(r: int, c: int) -> HallBasis:
    return HallBasis(r, c)
