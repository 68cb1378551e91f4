"""Named groups available on the command line."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable

from .. import groups as gc
from ..nilpotent.hall import generator_name
from ..nilpotent.pcp import G9_RELATORS, build_G9, quotient_by_relators


@dataclass(frozen=True)
class Builtin:
    pattern: str            # e.g. "cyclic-N"
    regex: str
    description: str
    build: Callable
    presentation: Callable | None = None


def _metacyclic_text(p: int, c: int) -> str:
    t_exp = p ** (c - 1)
    return (f"group G_{p}_{c} {{ gens: t a; rels: [a,t] = a^{p}, t^{t_exp}, a^{p ** c}; }}")


def _g9():
    G, _ = build_G9()
    return G


def _free_names(r: int) -> str:
    return " ".join(generator_name(i, r) for i in range(r))


def _free(r: int, c: int):
    G = quotient_by_relators(r, c, [], name=f"F_{r}_{c}")
    return G


BUILTINS = [
    Builtin("three-group", r"three-group", "order-243 class-2 group <t,a,b> without MP",
            lambda: gc.build_three_group(),
            lambda: "group three_group { gens: t a b; rels: t^3, a^9, b^9, [a,b], [a,t]*b^3, [b,t]*a^3; }"),
    Builtin("metacyclic-P-C", r"metacyclic-(\d+)-(\d+)", "<t,a | [a,t]=a^P, t^(P^(C-1)), a^(P^C)>",
            lambda p, c: gc.build_metacyclic(p, c), _metacyclic_text),
    Builtin("cyclic-N", r"cyclic-(\d+)", "cyclic group of order N",
            lambda n: gc.build_cyclic(n),
            lambda n: f"group C{n} {{ gens: a; rels: a^{n}; }}"),
    Builtin("dihedral-N", r"dihedral-(\d+)", "dihedral group of order 2N",
            lambda n: gc.build_dihedral(n),
            lambda n: f"group D{n} {{ gens: s r; rels: s^2, r^{n}, [r,s] = r^-2; }}"),
    Builtin("quaternion", r"quaternion", "quaternion group of order 8",
            lambda: gc.build_quaternion()),
    Builtin("g9", r"g9", "torsion-free class-3 nilpotent group of Hirsch length 9",
            _g9,
            lambda: "group G9 { gens: x y z w; rels: " + ", ".join(G9_RELATORS) + "; class: 3; }"),
    Builtin("free-R-C", r"free-(\d+)-(\d+)", "free nilpotent group of rank R and class C <= 3",
            _free,
            lambda r, c: f"group F_{r}_{c} {{ gens: {_free_names(r)}; rels: ; class: {c}; }}"),
]


class UnknownBuiltin(KeyError):
    pass


def lookup(name: str) -> tuple[Builtin, tuple]:
    hits = []
    for b in BUILTINS:
        m = re.fullmatch(b.regex, name)
        if m:
            hits.append((b, tuple(int(x) for x in m.groups())))
    if len(hits) != 1:
        raise UnknownBuiltin(name)
    return hits[0]


def build(name: str):
    b, args = lookup(name)
    try:
        G = b.build(*args)
    except (gc.GroupError, ValueError) as exc:
        raise UnknownBuiltin(f"{name}: {exc}") from exc
    G.provenance = f"builtin {b.pattern}"
    return G


def presentation_text(name: str) -> str | None:
    b, args = lookup(name)
    return b.presentation(*args) if b.presentation else None


def listing() -> list[str]:
    return [f"{b.pattern:16s} {b.description}" for b in BUILTINS]


CORPUS_NAMES = ["three-group", "metacyclic-3-2", "metacyclic-5-2", "metacyclic-3-1", "cyclic-6",
                "cyclic-1", "dihedral-4", "dihedral-3", "g9", "free-2-3", "free-3-2"]
