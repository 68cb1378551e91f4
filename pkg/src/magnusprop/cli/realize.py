"""Turn a parsed presentation into a concrete group.

Two constructive routes are supported and nothing else:

* a ``class: c`` annotation (c <= 3) routes to the nilpotent quotient of the free
  class-``c`` group by the relators;
* a finite split extension ``C_m x| A`` with ``A`` abelian, read off from relators of
  the shapes ``g^n``, ``[a,b]`` and ``[a,t] * W`` (``W`` a word in ``A``). The
  candidate group is built on normal forms ``t^i a^v``, every relator is evaluated
  in it, and its order must equal the bound ``m * prod(n_i)`` implied by the
  presentation, which proves the candidate is the presented group.
"""

from __future__ import annotations

import itertools
import math
from typing import Callable

import numpy as np

from .. import groups as gc
from ..nilpotent.collect import NilWord
from ..nilpotent.pcp import PcpGroup, QuotientError, quotient_by_relators
from .presentation import Comm, Gen, Power, PresentationAst, Product

FINITE_CAP = 10_000


class UnsupportedPresentation(ValueError):
    def __init__(self, reason: str):
        super().__init__(f"not in supported fragment: {reason}")
        self.reason = reason


def evaluate(node, gen: Callable, mul: Callable, inv: Callable, one):
    """Evaluate a word in any group given by its operations."""
    if isinstance(node, Gen):
        return gen(node.name)
    if isinstance(node, Power):
        base = evaluate(node.base, gen, mul, inv, one)
        if node.exp < 0:
            base = inv(base)
        out = one
        for _ in range(abs(node.exp)):
            out = mul(out, base)
        return out
    if isinstance(node, Comm):
        out = evaluate(node.items[0], gen, mul, inv, one)
        for item in node.items[1:]:
            v = evaluate(item, gen, mul, inv, one)
            out = mul(mul(inv(out), inv(v)), mul(out, v))
        return out
    out = one
    for f in node.factors:
        out = mul(out, evaluate(f, gen, mul, inv, one))
    return out


def realize(ast: PresentationAst, cap: int = FINITE_CAP):
    """Return a ``FiniteGroup`` or ``PcpGroup`` with a ``provenance`` attribute."""
    if ast.nil_class is not None:
        return _realize_nilpotent(ast)
    if ast.is_free:
        raise UnsupportedPresentation("a free group needs a class annotation")
    reasons = []
    for top in [None] + list(ast.gens):
        try:
            return _realize_split(ast, top, cap)
        except UnsupportedPresentation as exc:
            reasons.append(f"{top or 'abelian'}: {exc.reason}")
    raise UnsupportedPresentation("; ".join(reasons))


def _realize_nilpotent(ast: PresentationAst) -> PcpGroup:
    r, c = len(ast.gens), ast.nil_class
    if c > 3:
        raise UnsupportedPresentation("nilpotent quotients are supported up to class 3")
    if r == 0:
        raise UnsupportedPresentation("no generators")
    idx = {g: i for i, g in enumerate(ast.gens)}
    rels = [evaluate(rel, lambda g: NilWord.generator(idx[g], r, c), lambda a, b: a * b,
                     lambda a: a.inverse(), NilWord.identity(r, c)) for rel in ast.rels]
    try:
        G = quotient_by_relators(r, c, rels, name=ast.name)
    except QuotientError as exc:
        raise UnsupportedPresentation(str(exc)) from exc
    names = ", ".join(f"{g}->{G.free.name(i)}" for g, i in idx.items())
    G.provenance = f"nilpotent quotient of the free class-{c} group on {r} generators ({names})"
    return G


# -- the split-extension route ----------------------------------------------------------

def _flat(node) -> list:
    if isinstance(node, Product):
        out = []
        for f in node.factors:
            out.extend(_flat(f))
        return out
    return [node]


def _additive(node, idx: dict, k: int):
    """Vector of a word in the abelian generators, or ``None`` if another generator occurs."""
    if isinstance(node, Gen):
        if node.name not in idx:
            return None
        v = [0] * k
        v[idx[node.name]] = 1
        return v
    if isinstance(node, Power):
        v = _additive(node.base, idx, k)
        return None if v is None else [node.exp * a for a in v]
    if isinstance(node, Comm):
        parts = [_additive(x, idx, k) for x in node.items]
        return None if any(p is None for p in parts) else [0] * k
    total = [0] * k
    for f in node.factors:
        v = _additive(f, idx, k)
        if v is None:
            return None
        total = [a + b for a, b in zip(total, v)]
    return total


def _realize_split(ast: PresentationAst, top: str | None, cap: int) -> gc.FiniteGroup:
    abel = [g for g in ast.gens if g != top]
    idx = {g: i for i, g in enumerate(abel)}
    k = len(abel)
    orders: dict = {}
    commuting: set = set()
    action: dict = {}
    for rel in ast.rels:
        parts = _flat(rel)
        head = parts[0]
        if len(parts) == 1 and isinstance(head, Power) and isinstance(head.base, Gen):
            g = head.base.name
            orders[g] = math.gcd(orders.get(g, 0), abs(head.exp))
            continue
        if isinstance(head, Comm) and len(head.items) == 2 and all(isinstance(x, Gen) for x in head.items):
            u, v = head.items[0].name, head.items[1].name
            rest = Product(tuple(parts[1:])) if parts[1:] else None
            w = _additive(rest, idx, k) if rest is not None else [0] * k
            if u in idx and v in idx and not any(w or []):
                commuting.add(frozenset((u, v)))
                continue
            if w is not None and top is not None and (u == top) != (v == top):
                a = v if u == top else u
                # [a,t] W = 1 gives [a,t] = -W; [t,a] W = 1 gives [a,t] = W
                delta = [-x for x in w] if v == top else list(w)
                if a in action:
                    raise UnsupportedPresentation(f"two conjugation relators for {a}")
                action[a] = delta
                continue
        # anything else is checked in the finished candidate
    for g in ast.gens:
        if not orders.get(g):
            raise UnsupportedPresentation(f"no power relator for {g}")
    for u, v in itertools.combinations(abel, 2):
        if frozenset((u, v)) not in commuting:
            raise UnsupportedPresentation(f"no commutation relator for {u}, {v}")
    for a in abel:
        if top is not None and a not in action:
            raise UnsupportedPresentation(f"no conjugation relator for {a} by {top}")
    m = orders[top] if top is not None else 1
    mods = [orders[a] for a in abel]
    bound = m * math.prod(mods)
    if bound > cap:
        raise UnsupportedPresentation(f"order bound {bound} exceeds the cap {cap}")

    n_a = math.prod(mods)
    vecs = np.array(list(itertools.product(*[range(n) for n in mods])), dtype=np.int64).reshape(n_a, k)
    radix = np.array([math.prod(mods[i + 1:]) for i in range(k)], dtype=np.int64)
    mods_arr = np.array(mods, dtype=np.int64)

    def encode(v):
        return (np.mod(v, mods_arr) * radix).sum(axis=-1)

    # a^t = a + delta_a, extended additively; it must respect the orders of A
    phi = np.eye(k, dtype=np.int64)
    for a, d in action.items():
        phi[idx[a]] += np.array(d, dtype=np.int64)
    for i in range(k):
        if np.any(np.mod(mods[i] * phi[i], mods_arr)):
            raise UnsupportedPresentation(f"conjugation of {abel[i]} does not respect its order")
    images = encode(vecs @ phi) if k else np.zeros(1, dtype=np.int64)
    if np.unique(images).size != n_a:
        raise UnsupportedPresentation("conjugation is not an automorphism of the abelian part")
    pows = [np.arange(n_a)]
    for _ in range(1, m + 1):
        pows.append(images[pows[-1]])
    if not np.array_equal(pows[m], pows[0]):
        raise UnsupportedPresentation(f"{top}^{m} does not act trivially")

    n = m * n_a
    ii, aa = np.divmod(np.arange(n), n_a)
    mul = np.empty((n, n), dtype=np.int64)
    for x in range(n):
        moved = np.stack([pows[i][aa[x]] for i in range(m)])[ii]          # a_x conjugated by t^(i_y)
        s = vecs[moved] + vecs[aa] if k else np.zeros((n, 0), dtype=np.int64)
        mul[x] = ((ii[x] + ii) % m) * n_a + (encode(s) if k else 0)
    labels = []
    for x in range(n):
        parts = ([(top, int(ii[x]))] if top else []) + [(g, int(vecs[aa[x], j])) for j, g in enumerate(abel)]
        labels.append(gc._word_label(parts))
    gen_index = {}
    if top:
        gen_index[top] = (1 % m) * n_a
    for j, g in enumerate(abel):
        e = np.zeros(k, dtype=np.int64)
        e[j] = 1
        gen_index[g] = int(encode(e))
    gens = list(dict.fromkeys(gen_index[g] for g in ast.gens if gen_index[g]))
    G = gc.FiniteGroup(mul, labels, gens, name=ast.name)
    for rel in ast.rels:
        val = evaluate(rel, gen_index.__getitem__, G.m, lambda x: int(G.inv[x]), 0)
        if val != 0:
            raise UnsupportedPresentation("a relator does not hold in the candidate normal form")
    if G.generate(gens).size != n:
        raise UnsupportedPresentation("generators do not generate the candidate")
    if not G.check_associative():
        raise UnsupportedPresentation("candidate table is not associative")
    G.gen_index = gen_index
    shape = " x ".join(f"C{q}" for q in mods) or "1"
    G.provenance = (f"split extension C{m} x| ({shape}) with top generator {top}; every relator "
                    f"verified and order {n} equals the presentation bound"
                    if top else f"abelian group {shape}; every relator verified")
    return G
