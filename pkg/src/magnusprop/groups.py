"""Finite groups as multiplication tables and brute-force Magnus-property deciders.

Elements are indices ``0..order-1`` with the identity at ``0``. Tables are
numpy integer arrays; every algorithm here is exhaustive over the table.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

ASSOC_FULL_LIMIT = 512
ASSOC_SAMPLES = 100_000


class GroupError(ValueError):
    """Raised for invalid group data or rejected constructor input."""


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


class FiniteGroup:
    """A finite group given by its multiplication table."""

    def __init__(self, mul, labels: Sequence[str] | None = None,
                 generators: Sequence[int] | None = None, name: str = "G"):
        mul = np.asarray(mul, dtype=np.int64)
        n = mul.shape[0]
        if mul.shape != (n, n) or n == 0:
            raise GroupError("multiplication table must be square and nonempty")
        if mul.min() < 0 or mul.max() >= n:
            raise GroupError("multiplication table entries out of range")
        if not (np.array_equal(mul[0], np.arange(n)) and np.array_equal(mul[:, 0], np.arange(n))):
            raise GroupError("element 0 is not the identity")
        self.mul = mul
        self.mul.setflags(write=False)
        self.order = n
        rows, cols = np.nonzero(mul == 0)
        if len(rows) != n or not np.array_equal(np.sort(rows), np.arange(n)):
            raise GroupError("not every element has a unique inverse")
        inv = np.empty(n, dtype=np.int64)
        inv[rows] = cols
        self.inv = inv
        self.inv.setflags(write=False)
        self.labels = list(labels) if labels is not None else [f"g{i}" for i in range(n)]
        self.labels[0] = self.labels[0] if labels is not None else "1"
        self.generators = list(generators) if generators is not None else list(range(1, n))
        self.name = name

    def __repr__(self):
        return f"FiniteGroup({self.name!r}, order={self.order})"

    # -- element arithmetic -------------------------------------------------

    def m(self, a: int, b: int) -> int:
        return int(self.mul[a, b])

    def product(self, elems: Iterable[int]) -> int:
        out = 0
        for e in elems:
            out = int(self.mul[out, e])
        return out

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = int(self.inv[g]), -k
        out = 0
        while k:
            if k & 1:
                out = int(self.mul[out, g])
            g = int(self.mul[g, g])
            k >>= 1
        return out

    def conj(self, g: int, w: int) -> int:
        """``g^w = w^-1 g w``."""
        return int(self.mul[self.inv[w], self.mul[g, w]])

    def comm(self, g: int, w: int) -> int:
        """``[g, w] = g^-1 g^w``."""
        return int(self.mul[self.inv[g], self.conj(g, w)])

    def element_order(self, g: int) -> int:
        return int(self._orders[g])

    @cached_property
    def _orders(self) -> np.ndarray:
        orders = np.zeros(self.order, dtype=np.int64)
        cur = np.arange(self.order)
        k = 1
        todo = np.ones(self.order, dtype=bool)
        while todo.any():
            hit = todo & (cur == 0)
            orders[hit] = k
            todo &= ~hit
            cur = self.mul[cur, np.arange(self.order)]
            k += 1
        orders[0] = 1
        return orders

    def index_of(self, label: str) -> int:
        return self.labels.index(label)

    # -- validation ---------------------------------------------------------

    def check_associative(self, samples: int = ASSOC_SAMPLES, seed: int = 0) -> bool:
        n = self.order
        mul = self.mul
        if n <= ASSOC_FULL_LIMIT:
            for a in range(n):
                left = mul[mul[a]]            # (a*b)*c over all b, c
                right = mul[a][mul]           # a*(b*c)
                if not np.array_equal(left, right):
                    return False
            return True
        rng = np.random.default_rng(seed)
        a, b, c = rng.integers(0, n, size=(3, samples))
        return bool(np.array_equal(mul[mul[a, b], c], mul[a, mul[b, c]]))

    def validate(self) -> None:
        if not self.check_associative():
            raise GroupError("multiplication is not associative")
        if self.generate(self.generators).size != self.order:
            raise GroupError("generators do not generate the group")

    # -- subgroups ----------------------------------------------------------

    def generate(self, elems: Iterable[int]) -> np.ndarray:
        """Sorted members of the subgroup generated by ``elems``."""
        gens = np.unique(np.asarray(list(elems) + [0], dtype=np.int64))
        gens = gens[gens != 0]
        seen = np.zeros(self.order, dtype=bool)
        seen[0] = True
        frontier = np.array([0], dtype=np.int64)
        while frontier.size and gens.size:
            new = np.unique(self.mul[np.ix_(frontier, gens)].ravel())
            new = new[~seen[new]]
            seen[new] = True
            frontier = new
        return np.flatnonzero(seen)

    def subgroup(self, elems: Iterable[int]) -> "Subgroup":
        return Subgroup(self, self.generate(elems))

    def classes(self) -> np.ndarray:
        """Conjugacy class id of every element (ids in order of least member)."""
        return self._classes[0]

    def class_members(self, cid: int) -> np.ndarray:
        return self._classes[1][cid]

    @cached_property
    def _classes(self):
        n = self.order
        cid = np.full(n, -1, dtype=np.int64)
        members = []
        inv = self.inv
        for g in range(n):
            if cid[g] >= 0:
                continue
            cls = np.unique(self.mul[inv, self.mul[g]])
            cid[cls] = len(members)
            members.append(cls)
        return cid, members

    def conjugacy_class(self, g: int) -> np.ndarray:
        return self.class_members(int(self.classes()[g]))

    def class_reps(self) -> list[int]:
        return [int(m[0]) for m in self._classes[1]]

    def normal_closure(self, elems: Iterable[int]) -> "Subgroup":
        elems = list(elems)
        conj = np.unique(np.concatenate(
            [self.conjugacy_class(int(e)) for e in elems] or [np.array([0])]
        ))
        return Subgroup(self, self.generate(conj))

    def is_normal(self, members: np.ndarray) -> bool:
        mask = np.zeros(self.order, dtype=bool)
        mask[members] = True
        gens = np.asarray(self.generators, dtype=np.int64)
        conj = self.mul[self.inv[gens][:, None], self.mul[members][:, gens].T]
        return bool(mask[conj].all())

    def commutator_subgroup(self, a: np.ndarray, b: np.ndarray) -> "Subgroup":
        """``[A, B]`` for member arrays ``a``, ``b`` (A or B assumed normal)."""
        inv = self.inv
        ab = self.mul[a][:, b]                        # a*b
        ba = self.mul[b][:, a].T                      # b*a, indexed [a, b]
        comms = self.mul[inv[ba], ab]                 # (ba)^-1 ab = a^-1 b^-1 a b
        gens = np.unique(comms)
        gens = np.unique(np.concatenate([self.conjugacy_class(int(c)) for c in gens]))
        return Subgroup(self, self.generate(gens))

    def commutator_row(self, g: int) -> np.ndarray:
        """``[g, w]`` for every ``w``."""
        conj = self.mul[self.inv, self.mul[g]]
        return self.mul[self.inv[g], conj]

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "labels": self.labels,
            "mul": self.mul.tolist(),
            "generators": list(map(int, self.generators)),
        }

    @classmethod
    def from_json(cls, doc: dict | str, name: str = "G") -> "FiniteGroup":
        if isinstance(doc, str):
            doc = json.loads(doc)
        g = cls(doc["mul"], doc.get("labels"), doc.get("generators"), name=doc.get("name", name))
        if g.order != doc["order"]:
            raise GroupError("order field does not match the table")
        return g


@dataclass(frozen=True, eq=False)
class Subgroup:
    parent: FiniteGroup
    members: np.ndarray

    @property
    def order(self) -> int:
        return int(self.members.size)

    def __contains__(self, g: int) -> bool:
        return bool(self.mask[g])

    @cached_property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.parent.order, dtype=bool)
        m[self.members] = True
        return m

    def __eq__(self, other):
        return isinstance(other, Subgroup) and np.array_equal(self.members, other.members)

    def __hash__(self):
        return hash(self.members.tobytes())

    def __le__(self, other: "Subgroup") -> bool:
        return bool(other.mask[self.members].all())

    def is_normal(self) -> bool:
        return self.parent.is_normal(self.members)

    def labels(self) -> list[str]:
        return [self.parent.labels[i] for i in self.members]


# -- constructors -------------------------------------------------------------

def _from_normal_forms(forms: list, mul_nf, label_nf, gen_forms, name: str) -> FiniteGroup:
    """Table from an enumerated normal-form list (identity first)."""
    index = {f: i for i, f in enumerate(forms)}
    n = len(forms)
    mul = np.empty((n, n), dtype=np.int64)
    for i, a in enumerate(forms):
        mul[i] = [index[mul_nf(a, b)] for b in forms]
    return FiniteGroup(mul, [label_nf(f) for f in forms], [index[g] for g in gen_forms], name)


def _word_label(parts: list[tuple[str, int]]) -> str:
    out = [s if e == 1 else f"{s}^{e}" for s, e in parts if e]
    return "*".join(out) if out else "1"


def build_cyclic(m: int) -> FiniteGroup:
    if m < 1:
        raise GroupError("cyclic group order must be positive")
    idx = np.arange(m)
    mul = (idx[:, None] + idx[None, :]) % m
    labels = [_word_label([("c", i)]) for i in range(m)]
    gens = [1] if m > 1 else []
    return FiniteGroup(mul, labels, gens, name=f"C{m}")


def build_dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order ``2n`` on normal forms ``r^i s^j``."""
    if n < 1:
        raise GroupError("n must be positive")
    forms = [(j, i) for j in range(2) for i in range(n)]
    forms.sort(key=lambda f: (f[0], f[1]))

    def mul_nf(a, b):
        (sa, ra), (sb, rb) = a, b
        # r^ra s^sa * r^rb s^sb with s r s = r^-1
        r = (ra + (rb if sa == 0 else -rb)) % n
        return ((sa + sb) % 2, r)

    def label(f):
        return _word_label([("r", f[1]), ("s", f[0])])

    return _from_normal_forms(forms, mul_nf, label, [(0, 1 % n), (1, 0)], f"D{2 * n}")


def build_quaternion() -> FiniteGroup:
    """Quaternion group of order 8 on normal forms ``i^a j^b`` (a < 4, b < 2)."""
    forms = [(a, b) for b in range(2) for a in range(4)]

    def mul_nf(x, y):
        (a1, b1), (a2, b2) = x, y
        # j i = i^-1 j, j^2 = i^2
        a = a1 + (a2 if b1 == 0 else -a2)
        b = b1 + b2
        if b == 2:
            b, a = 0, a + 2
        return (a % 4, b)

    return _from_normal_forms(
        forms, mul_nf, lambda f: _word_label([("i", f[0]), ("j", f[1])]),
        [(1, 0), (0, 1)], "Q8",
    )


def build_direct_product(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    n, m = g.order, h.order
    mul = (g.mul[:, None, :, None] * m + h.mul[None, :, None, :]).reshape(n * m, n * m)
    labels = [f"({a},{b})" for a in g.labels for b in h.labels]
    labels[0] = "1"
    gens = [x * m for x in g.generators] + list(h.generators)
    return FiniteGroup(mul, labels, gens, name=f"{g.name}x{h.name}")


def build_quotient(g: FiniteGroup, n: Subgroup) -> FiniteGroup:
    if not n.is_normal():
        raise GroupError("quotient by a subgroup that is not normal")
    coset_of = np.full(g.order, -1, dtype=np.int64)
    reps = []
    for x in range(g.order):
        if coset_of[x] < 0:
            coset_of[g.mul[x, n.members]] = len(reps)
            reps.append(x)
    reps_arr = np.asarray(reps)
    mul = coset_of[g.mul[np.ix_(reps_arr, reps_arr)]]
    labels = [g.labels[r] for r in reps]
    gens = sorted({int(coset_of[x]) for x in g.generators} - {0})
    return FiniteGroup(mul, labels, gens, name=f"{g.name}/N{n.order}")


def build_metacyclic(p: int, c: int) -> FiniteGroup:
    """``<t, a | [a,t] = a^p, t^(p^(c-1)) = a^(p^c) = 1>`` on forms ``t^i a^j``."""
    if p % 2 == 0 or not _is_prime(p):
        raise GroupError("p must be an odd prime")
    if c < 1:
        raise GroupError("c must be positive")
    nt, na = p ** (c - 1), p ** c
    idx = np.arange(nt * na)
    i, j = idx // na, idx % na
    # a^j conjugated by t^i2 is a^(j (1+p)^i2)
    act = np.array([pow(1 + p, e, na) for e in range(nt)], dtype=np.int64)
    ii = (i[:, None] + i[None, :]) % nt
    jj = (j[:, None] * act[i][None, :] + j[None, :]) % na
    mul = ii * na + jj
    labels = [_word_label([("t", int(a)), ("a", int(b))]) for a, b in zip(i, j)]
    gens = [x for x in (na if nt > 1 else None, 1) if x is not None]
    return FiniteGroup(mul, labels, gens, name=f"G_{p},{c}")


def build_three_group() -> FiniteGroup:
    """``<t,a,b | t^3=a^9=b^9=[a,b]=[a,t]b^3=[b,t]a^3=1>`` on forms ``t^i a^j b^k``."""
    forms = [(i, j, k) for i in range(3) for j in range(9) for k in range(9)]

    def act(j, k, times):
        for _ in range(times):
            j, k = (j - 3 * k) % 9, (k - 3 * j) % 9
        return j, k

    def mul_nf(x, y):
        j, k = act(x[1], x[2], y[0])
        return ((x[0] + y[0]) % 3, (j + y[1]) % 9, (k + y[2]) % 9)

    def label(f):
        return _word_label([("t", f[0]), ("a", f[1]), ("b", f[2])])

    return _from_normal_forms(forms, mul_nf, label, [(1, 0, 0), (0, 1, 0), (0, 0, 1)], "three-group")


# -- series -------------------------------------------------------------------

class NotNilpotentError(GroupError):
    pass


@dataclass
class Series:
    lower_central: list[Subgroup]
    upper_central: list[Subgroup]
    derived: list[Subgroup]
    center: Subgroup
    nilpotent: bool

    @property
    def nilpotency_class(self) -> int:
        if not self.nilpotent:
            raise NotNilpotentError("group is not nilpotent")
        return len(self.lower_central) - 1


def center(g: FiniteGroup) -> Subgroup:
    gens = np.asarray(g.generators, dtype=np.int64)
    if gens.size == 0:
        return Subgroup(g, np.arange(g.order))
    ok = np.all(g.mul[:, gens] == g.mul[gens, :].T, axis=1)
    return Subgroup(g, np.flatnonzero(ok))


def _upper_step(g: FiniteGroup, z: Subgroup) -> Subgroup:
    gens = np.asarray(g.generators, dtype=np.int64)
    if gens.size == 0:
        return Subgroup(g, np.arange(g.order))
    # x in Z_{i+1} iff [x, s] in Z_i for every generator s
    xs = np.arange(g.order)
    conj = g.mul[g.inv[gens][None, :], g.mul[xs][:, gens]]      # s^-1 x s
    comms = g.mul[g.inv[xs][:, None], conj]                      # x^-1 x^s
    ok = z.mask[comms].all(axis=1)
    return Subgroup(g, np.flatnonzero(ok))


def series(g: FiniteGroup) -> Series:
    whole = Subgroup(g, np.arange(g.order))
    lower = [whole]
    while lower[-1].order > 1:
        nxt = g.commutator_subgroup(lower[-1].members, whole.members)
        if nxt == lower[-1]:
            break
        lower.append(nxt)
    nilpotent = lower[-1].order == 1
    upper = [Subgroup(g, np.array([0]))]
    while True:
        nxt = _upper_step(g, upper[-1])
        if nxt == upper[-1]:
            break
        upper.append(nxt)
    derived = [whole]
    while derived[-1].order > 1:
        nxt = g.commutator_subgroup(derived[-1].members, derived[-1].members)
        if nxt == derived[-1]:
            break
        derived.append(nxt)
    return Series(lower, upper, derived, center(g), nilpotent)


# -- cocentralisers -------------------------------------------------------------

def normal_closure(g: FiniteGroup, elems: Iterable[int]) -> Subgroup:
    return g.normal_closure(elems)


def commutator_set(g: FiniteGroup, x: int) -> np.ndarray:
    """Sorted array of ``{[x, w] : w in G}``."""
    return np.unique(g.commutator_row(x))


def cocentraliser(g: FiniteGroup, x: int) -> Subgroup:
    return Subgroup(g, g.generate(commutator_set(g, x)))


def _is_closed(g: FiniteGroup, members: np.ndarray) -> bool:
    mask = np.zeros(g.order, dtype=bool)
    mask[members] = True
    return bool(mask[g.mul[np.ix_(members, members)]].all())


def cocentraliser_closed(g: FiniteGroup) -> bool:
    """Whether ``{[x,w]}`` is already a subgroup for every ``x``.

    Conjugation permutes these sets, so one representative per class suffices.
    """
    for x in g.class_reps():
        if not _is_closed(g, commutator_set(g, x)):
            return False
    return True


# -- Magnus property -------------------------------------------------------------

@dataclass
class PairRecord:
    g: int
    h: int
    k_min: int | None = None
    l_min: int | None = None
    r_min: int | None = None
    s_min: int | None = None

    def to_json(self) -> dict:
        return dict(self.__dict__)


@dataclass
class MpReport:
    verdict: bool
    counterexample: tuple[int, int] | None = None
    pair_data: list[PairRecord] = field(default_factory=list)
    group: FiniteGroup | None = field(default=None, repr=False, compare=False)

    def verify_counterexample(self) -> bool:
        """Re-check the counterexample from scratch."""
        if self.counterexample is None:
            return self.verdict
        G = self.group
        g, h = self.counterexample
        if G.normal_closure([g]) != G.normal_closure([h]):
            return False
        row = G.mul[G.inv, G.mul[g]]
        return not (np.any(row == h) or np.any(row == G.inv[h]))

    def to_json(self) -> dict:
        G = self.group
        doc = {"verdict": self.verdict, "counterexample": None,
               "pairs": [p.to_json() for p in self.pair_data]}
        if self.counterexample is not None:
            g, h = self.counterexample
            doc["counterexample"] = {"g": int(g), "h": int(h)}
            if G is not None:
                doc["counterexample"]["labels"] = [G.labels[g], G.labels[h]]
        return doc


def _closure_buckets(g: FiniteGroup) -> dict[bytes, list[int]]:
    """Class representatives grouped by the normal closure they generate."""
    buckets: dict[bytes, list[int]] = {}
    for rep in g.class_reps():
        key = g.generate(g.conjugacy_class(rep)).tobytes()
        buckets.setdefault(key, []).append(rep)
    return buckets


def is_mp(g: FiniteGroup) -> MpReport:
    """Decide the Magnus property by scanning pairs with equal normal closure.

    When the group fails, the reported pair prefers a generator ``g`` and an ``h``
    in ``g Z(G)`` (the shape of a basic witness pair), then falls back to index order.
    """
    cid = g.classes()
    bad_classes: set[tuple[int, int]] = set()
    for reps in _closure_buckets(g).values():
        for a in reps:
            for b in reps:
                if a < b and cid[b] != cid[a] and cid[g.inv[b]] != cid[a]:
                    bad_classes.add((int(cid[a]), int(cid[b])))
    if not bad_classes:
        return MpReport(True, group=g)

    def failing(x, y):
        cx, cy = int(cid[x]), int(cid[y])
        return (min(cx, cy), max(cx, cy)) in bad_classes

    z = center(g).members
    order = list(dict.fromkeys(list(g.generators) + list(range(g.order))))
    for x in order:
        for y in g.mul[x, z]:
            if failing(x, int(y)):
                return MpReport(False, (int(x), int(y)), group=g)
    for x in order:
        for y in range(g.order):
            if failing(x, y):
                return MpReport(False, (int(x), y), group=g)
    raise AssertionError("unreachable")


def _bfs_lengths(g: FiniteGroup, steps: np.ndarray) -> np.ndarray:
    """Shortest product length of elements of ``steps`` reaching each element (-1 if none)."""
    dist = np.full(g.order, -1, dtype=np.int64)
    dist[0] = 0
    frontier = np.array([0], dtype=np.int64)
    k = 0
    while frontier.size and k < g.order:
        k += 1
        new = np.unique(g.mul[np.ix_(frontier, steps)].ravel())
        new = new[dist[new] < 0]
        dist[new] = k
        frontier = new
    return dist


def _min_power_table(g: FiniteGroup, h: int) -> dict[int, int]:
    """Class id -> minimal ``|r|`` with ``h^r`` in that class."""
    cid = g.classes()
    out: dict[int, int] = {}
    n = g.element_order(h)
    pos, neg = 0, 0
    hi = int(g.inv[h])
    for r in range(n + 1):
        for e in (pos, neg):
            out.setdefault(int(cid[e]), r)
        pos, neg = g.m(pos, h), g.m(neg, hi)
    return out


def is_weak_mp_linear(g: FiniteGroup) -> MpReport:
    """Check the weak Magnus property with the identity bound function.

    For each pair with equal normal closure the minimal expression lengths
    ``k_min``, ``l_min`` and minimal conjugating powers ``r_min``, ``s_min`` are
    computed; the pair passes iff ``max(r_min, s_min) <= max(k_min, l_min)``.
    Everything is conjugation invariant, so the scan runs over class representatives.
    """
    cid = g.classes()
    dists: dict[int, np.ndarray] = {}
    powers: dict[int, dict[int, int]] = {}

    def dist(x):
        if x not in dists:
            steps = np.union1d(g.conjugacy_class(x), g.conjugacy_class(int(g.inv[x])))
            dists[x] = _bfs_lengths(g, steps)
        return dists[x]

    def pw(x):
        if x not in powers:
            powers[x] = _min_power_table(g, x)
        return powers[x]

    records = []
    verdict = True
    counter = None
    for reps in _closure_buckets(g).values():
        for a in reps:
            for b in reps:
                k = int(dist(a)[b])
                l = int(dist(b)[a])
                r = pw(b).get(int(cid[a]))
                s = pw(a).get(int(cid[b]))
                rec = PairRecord(a, b, k, l, r, s)
                records.append(rec)
                ok = r is not None and s is not None and max(r, s) <= max(k, l)
                if not ok and verdict:
                    verdict, counter = False, (a, b)
    return MpReport(verdict, counter, records, group=g)


# -- 3-group criterion -------------------------------------------------------------

def _is_elementary_abelian(g: FiniteGroup, members: np.ndarray, p: int) -> bool:
    sub = g.mul[np.ix_(members, members)]
    if not np.array_equal(sub, sub.T):
        return False
    return all(g.power(int(x), p) == 0 for x in members)


def check_3group_criterion(g: FiniteGroup) -> bool:
    """Magnus-property criterion for finite class-2 nilpotent 3-groups."""
    n = g.order
    while n % 3 == 0:
        n //= 3
    if n != 1:
        raise GroupError("criterion applies to 3-groups only")
    s = series(g)
    if s.nilpotency_class > 2:
        raise GroupError("criterion applies to nilpotency class at most 2")
    z = s.center
    if not _is_elementary_abelian(g, z.members, 3):
        return False
    quo = build_quotient(g, z)
    if not _is_elementary_abelian(quo, np.arange(quo.order), 3):
        return False
    for x in range(g.order):
        if g.element_order(x) == 9:
            if not np.any(g.commutator_row(x) == g.power(x, 3)):
                return False
    return True


# -- witness pairs ---------------------------------------------------------------

def is_basic_witness_pair(g: FiniteGroup, x: int, v: int) -> bool:
    """Conditions of a basic non-MP witness pair ``(x, v)`` checked on the table."""
    derived = g.commutator_subgroup(np.arange(g.order), np.arange(g.order))
    if v not in derived:
        return False
    if np.any(g.commutator_row(x) == v):
        return False
    if g.m(x, x) in derived:
        return False
    return g.normal_closure([x]) == g.normal_closure([g.m(x, v)])


def normal_subgroups(g: FiniteGroup) -> list[Subgroup]:
    """All normal subgroups, as joins of normal closures of single classes."""
    found = {}
    base = []
    for rep in g.class_reps():
        s = g.normal_closure([rep])
        if s not in found:
            found[s] = s
            base.append(s)
    frontier = list(base)
    while frontier:
        new = []
        for a in frontier:
            for b in base:
                j = Subgroup(g, g.generate(np.union1d(a.members, b.members)))
                if j not in found:
                    found[j] = j
                    new.append(j)
        frontier = new
    return sorted(found, key=lambda s: (s.order, s.members.tolist()))
