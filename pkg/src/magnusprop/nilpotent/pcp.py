"""Quotients of free nilpotent groups of class at most 3 by relators in the derived subgroup.

For class at most 3 the derived subgroup of the free group is abelian, so the
normal closure ``N`` of relators ``rho_i`` is easy to describe:

* the image of ``N`` in the section of weight 2 is spanned by the weight-2 parts
  of the ``rho_i``;
* ``N`` meets the last section in the lattice spanned by the weight-3 parts of
  ``[rho_i, x_j]`` together with the weight-3 parts of those products of
  relators whose weight-2 parts cancel.

Each section of the quotient is ``Z^W / L`` and gets a basis either from a Smith
normal form or from a caller-supplied basis that is validated against ``L``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Sequence

from .. import lattice
from .collect import NilWord, _sparse_points, compile_polynomials, newton_coefficients
from .hall import HallBasis, hall_basis


class QuotientError(ValueError):
    pass


class ConstructionError(AssertionError):
    pass


@dataclass
class Section:
    """``Z^W / L`` for one lower central section."""

    weight: int
    dim: int
    relations: list[list[int]]          # HNF rows spanning L
    basis: list[list[int]]              # representatives of the quotient generators
    orders: list[int]                   # relative orders, 0 for infinite
    divisors: list[int]                 # elementary divisors of L
    _mode: str = "smith"
    _q: list[list[int]] = field(default_factory=list, repr=False)
    _sel: list[int] = field(default_factory=list, repr=False)

    @classmethod
    def build(cls, weight: int, dim: int, gens: Sequence[Sequence[int]],
              preferred: Sequence[Sequence[int]] | None = None) -> "Section":
        gens = [list(g) for g in gens if any(g)]
        h, _ = lattice.hnf(gens, dim) if gens else ([], [])
        rel = [row for row in h if any(row)]
        divisors = lattice.elementary_divisors(rel, dim) if rel else []
        if preferred is None:
            if rel:
                d, _, q = lattice.smith(rel, dim)
                diag = [d[i][i] if i < len(d) else 0 for i in range(dim)]
            else:
                q, diag = lattice.identity(dim), [0] * dim
            qinv = lattice.inverse_unimodular(q)
            sel = [i for i in range(dim) if abs(diag[i]) != 1]
            return cls(weight, dim, rel, [qinv[i] for i in sel], [abs(diag[i]) for i in sel],
                       divisors, "smith", q, sel)
        preferred = [list(b) for b in preferred]
        if any(d != 1 for d in divisors):
            raise QuotientError(f"section {weight} has torsion; a preferred basis needs a free quotient")
        if len(preferred) + len(rel) != dim:
            raise QuotientError(f"preferred basis of section {weight} has the wrong size")
        if lattice.lattice_index(preferred + rel, dim) != 1:
            raise QuotientError(f"preferred basis of section {weight} does not span the quotient")
        return cls(weight, dim, rel, preferred, [0] * len(preferred), divisors, "preferred")

    def reduce(self, w: Sequence[int]) -> tuple[list[int], list[int]]:
        """Coordinates ``y`` of ``w`` in the quotient and the lattice part ``w - y*B``."""
        if self._mode == "smith":
            e = lattice.vec_mat(w, self._q) if self._q else []
            y = []
            for i, o in zip(self._sel, self.orders):
                y.append(e[i] % o if o else e[i])
        else:
            sol = lattice.solve_left(self.basis + self.relations, w)
            if sol is None:
                raise AssertionError("vector outside the span of basis and relations")
            y = sol[: len(self.basis)]
        rep = lattice.vec_mat(y, self.basis) if self.basis else [0] * self.dim
        return y, [a - b for a, b in zip(w, rep)]

    @property
    def rank(self) -> int:
        return sum(1 for o in self.orders if o == 0)

    def to_json(self) -> dict:
        return {
            "weight": self.weight,
            "relation_matrix": self.relations,
            "basis": self.basis,
            "relative_orders": self.orders,
            "elementary_divisors": self.divisors,
        }


class PcpGroup:
    """A quotient ``F / <<relators>>`` with a polycyclic generating sequence.

    Elements are tuples of exponents on the pc generators, ordered by section.
    """

    def __init__(self, r: int, c: int, relators: Sequence[NilWord],
                 preferred: dict[int, Sequence[Sequence[int]]] | None = None, name: str = "G"):
        if c > 3:
            raise QuotientError("quotients are supported for class at most 3")
        self.free = hall_basis(r, c)
        self.r, self.c, self.name = r, c, name
        fb = self.free
        self.relators = []
        for rel in relators:
            if rel.basis != fb:
                raise QuotientError("relator lives in a different free group")
            if any(rel.exponents[i] for i in fb.by_weight[1]):
                raise QuotientError(f"relator {rel} is not in the derived subgroup")
            self.relators.append(rel)
        preferred = preferred or {}
        w2 = fb.by_weight.get(2, [])
        w3 = fb.by_weight.get(3, [])
        r2 = [[rel.exponents[i] for i in w2] for rel in self.relators]
        self._r2 = r2
        sections = [Section.build(1, r, [], preferred.get(1))]
        if c >= 2:
            sections.append(Section.build(2, len(w2), r2, preferred.get(2)))
        if c >= 3:
            gens3 = []
            for vec in lattice.left_kernel(r2, len(w2)) if r2 else []:
                prod = self._relator_product(vec)
                gens3.append([prod.exponents[i] for i in w3])
            for rel in self.relators:
                for j in range(r):
                    cm = rel.comm(NilWord.generator(j, r, c))
                    gens3.append([cm.exponents[i] for i in w3])
            sections.append(Section.build(3, len(w3), gens3, preferred.get(3)))
        self.sections = sections
        self.gen_section = [s.weight for s in sections for _ in s.basis]
        self.orders = [o for s in sections for o in s.orders]
        self.ngens = len(self.orders)
        self._fast = None

    # -- structure ----------------------------------------------------------

    @property
    def hirsch_length(self) -> int:
        return sum(s.rank for s in self.sections)

    @property
    def torsion_free(self) -> bool:
        return all(o == 0 for o in self.orders)

    def gen_names(self) -> list[str]:
        fb = self.free
        names = []
        for s in self.sections:
            idx = fb.by_weight[s.weight]
            for b in s.basis:
                parts = []
                for i, e in zip(idx, b):
                    if e:
                        parts.append(fb.name(i) if e == 1 else f"{fb.name(i)}^{e}")
                names.append("*".join(parts) or "1")
        return names

    def _relator_product(self, vec: Sequence[int]) -> NilWord:
        out = NilWord.identity(self.r, self.c)
        for rel, n in zip(self.relators, vec):
            if n:
                out = out * rel ** n
        return out

    # -- element maps -------------------------------------------------------

    def identity(self) -> tuple:
        return (0,) * self.ngens

    def lift(self, g: Sequence[int]) -> NilWord:
        fb = self.free
        exps = [0] * len(fb)
        pos = 0
        for s in self.sections:
            k = len(s.basis)
            y = g[pos:pos + k]
            pos += k
            if k:
                vec = lattice.vec_mat(y, s.basis)
                for i, e in zip(fb.by_weight[s.weight], vec):
                    exps[i] = e
        return NilWord(fb, exps)

    def project(self, u: NilWord) -> tuple:
        fb = self.free
        out: list[int] = []
        for s in self.sections:
            idx = fb.by_weight[s.weight]
            w = [u.exponents[i] for i in idx]
            y, rest = s.reduce(w)
            out.extend(y)
            if s.weight == 2 and self.c >= 3 and any(rest):
                coeffs = lattice.solve_left(self._r2, rest)
                if coeffs is None:
                    raise AssertionError("weight-2 remainder is not a relator combination")
                u = u * self._relator_product(coeffs).inverse()
        return tuple(out)

    def element(self, word) -> tuple:
        """Project a NilWord or a generator word ``[(g, +-1), ...]``."""
        if isinstance(word, NilWord):
            return self.project(word)
        return self.project(NilWord.from_letters(word, self.r, self.c))

    def generator(self, i: int) -> tuple:
        return self.project(NilWord.generator(i, self.r, self.c))

    # -- arithmetic ---------------------------------------------------------

    def mul_slow(self, g, h) -> tuple:
        return self.project(self.lift(g) * self.lift(h))

    def mul(self, g, h) -> tuple:
        if self._fast is not None:
            return tuple(self._fast(list(g) + list(h)))
        return self.mul_slow(g, h)

    def inv(self, g) -> tuple:
        return self.project(self.lift(g).inverse())

    def power(self, g, k: int) -> tuple:
        return self.project(self.lift(g) ** k)

    def comm(self, g, *others) -> tuple:
        out = g
        for o in others:
            out = self.mul(self.inv(out), self.mul(self.inv(o), self.mul(out, o)))
        return out

    def compile(self) -> None:
        """Interpolate and compile the multiplication polynomials (torsion-free only)."""
        if not self.torsion_free:
            raise QuotientError("compiled multiplication needs a torsion-free quotient")
        n = self.ngens
        weights = self.gen_section * 2
        values = {}
        for pt in _sparse_points(weights, self.c):
            g, h = [0] * n, [0] * n
            for i, a in pt:
                if i < n:
                    g[i] = a
                else:
                    h[i - n] = a
            values[pt] = self.mul_slow(g, h)
        polys = []
        for k in range(n):
            wk = self.gen_section[k]
            vals = {pt: v[k] for pt, v in values.items()}
            polys.append(newton_coefficients(vals, weights, wk, lambda i, wk=wk: weights[i] <= wk))
        self._fast = compile_polynomials(2 * n, polys, "_pcmul")

    def random_element(self, rng: random.Random, bound: int = 6) -> tuple:
        out = []
        for o in self.orders:
            out.append(rng.randrange(o) if o else rng.randint(-bound, bound))
        return tuple(out)

    def check_consistency(self, triples: int = 10_000, seed: int = 0, cross: int = 200) -> dict:
        """Random associativity triples, plus agreement of the fast and slow products."""
        rng = random.Random(seed)
        bad = 0
        for _ in range(triples):
            a, b, c = (self.random_element(rng) for _ in range(3))
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                bad += 1
        mismatch = 0
        if self._fast is not None:
            for _ in range(cross):
                a, b = self.random_element(rng, 20), self.random_element(rng, 20)
                if self.mul(a, b) != self.mul_slow(a, b):
                    mismatch += 1
        return {"triples": triples, "failures": bad, "cross_checks": cross if self._fast else 0,
                "cross_mismatches": mismatch}

    def conjugation_relations(self) -> dict:
        """``g_j^{g_i}`` for ``i < j`` and ``g_i^{order}`` for finite relative orders."""
        gens = [tuple(int(k == i) for k in range(self.ngens)) for i in range(self.ngens)]
        conj = {}
        for i in range(self.ngens):
            for j in range(i + 1, self.ngens):
                conj[f"{j}^{i}"] = list(self.mul(self.inv(gens[i]), self.mul(gens[j], gens[i])))
        powers = {str(i): list(self.power(gens[i], o)) for i, o in enumerate(self.orders) if o}
        return {"conjugates": conj, "powers": powers}

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "r": self.r,
            "c": self.c,
            "relators": [list(rel.exponents) for rel in self.relators],
            "free_basis": [self.free.nested_name(i) for i in range(len(self.free))],
            "generators": self.gen_names(),
            "relative_orders": self.orders,
            "sections": [s.to_json() for s in self.sections],
            "hirsch_length": self.hirsch_length,
            "torsion_free": self.torsion_free,
        }


def quotient_by_relators(r: int, c: int, relators: Sequence[NilWord],
                         preferred: dict | None = None, name: str = "G") -> PcpGroup:
    return PcpGroup(r, c, relators, preferred, name)


# -- linear commutator maps -------------------------------------------------------

def commutator_map(G: PcpGroup, k: int) -> list[list[int]]:
    """Matrix of ``b -> ([b, x_1], ..., [b, x_r])`` from section ``k`` to section ``k+1``.

    Rows are indexed by section-``k`` basis elements; each row concatenates the
    section-``k+1`` coordinates of the commutators with the generators.
    """
    start = sum(len(s.basis) for s in G.sections[: k - 1])
    size = len(G.sections[k - 1].basis)
    nstart = start + size
    nsize = len(G.sections[k].basis)
    xs = [G.generator(j) for j in range(G.r)]
    rows = []
    for a in range(size):
        b = tuple(int(i == start + a) for i in range(G.ngens))
        row = []
        for x in xs:
            cm = G.comm(b, x)
            row.extend(cm[nstart:nstart + nsize])
        rows.append(row)
    return rows


def center_is_last_term(G: PcpGroup) -> dict:
    """Certify ``Z(G) = gamma_c(G)`` for a torsion-free quotient of class ``c``.

    The maps ``section_k -> section_{k+1}^r`` given by commutation with the
    generators are bilinear; if each is injective for ``k < c`` then no element
    outside ``gamma_c`` commutes with every generator.
    """
    if not G.torsion_free:
        raise QuotientError("certificate needs torsion-free sections")
    ranks = []
    for k in range(1, G.c):
        m = commutator_map(G, k)
        ranks.append({"section": k, "dim": len(m), "rank": lattice.rank(m) if m else 0})
    ok = all(x["rank"] == x["dim"] for x in ranks)
    return {"injective_maps": ranks, "holds": ok}


# -- the Hirsch-length-9 example -------------------------------------------------------

G9_RELATORS = [
    "[z,y]", "[w,z]",
    "[y,x,x]", "[y,x,y]", "[y,x,z]*[z,x,y]^-1", "[y,x,w]",
    "[z,x,x]", "[z,x,z]", "[z,x,w]",
    "[w,x,x]*[z,x,y]^-1", "[w,x,y]", "[w,x,z]", "[w,x,w]",
    "[w,y,y]", "[w,y,z]", "[w,y,w]*[z,x,y]^-1",
]

G9_SECTION2 = ["[y,x]", "[z,x]", "[w,x]", "[w,y]"]
G9_SECTION3 = ["[z,x,y]"]
G9_PAIRING = [
    [0, 0, 1, 0],
    [0, 1, 0, 0],
    [1, 0, 0, 0],
    [0, 0, 0, 1],
]


def group_commutator(fb: HallBasis, names: Sequence[str]) -> NilWord:
    gens = {fb.name(i): NilWord.generator(i, fb.r, fb.c) for i in fb.by_weight[1]}
    out = gens[names[0]]
    for nm in names[1:]:
        out = out.comm(gens[nm])
    return out


def parse_commutator_product(fb: HallBasis, text: str) -> NilWord:
    """Evaluate ``"[a,b,c]*[d,e]^-1"`` style products of left-normed commutators."""
    out = NilWord.identity(fb.r, fb.c)
    for factor in text.split("*"):
        power = 1
        if "^" in factor:
            factor, p = factor.split("^")
            power = int(p)
        names = factor.strip("[]").split(",")
        out = out * group_commutator(fb, names) ** power
    return out


def _unit_rows(fb: HallBasis, weight: int, names: Sequence[str]) -> list[list[int]]:
    idx = fb.by_weight[weight]
    return [[int(i == fb.index(nm)) for i in idx] for nm in names]


def build_G9(triples: int = 10_000, seed: int = 0) -> tuple[PcpGroup, dict]:
    """Construct the Hirsch-length-9 quotient and certify its structure.

    Returns the group and a certificate; raises ``ConstructionError`` naming the
    failing invariant.
    """
    fb = hall_basis(4, 3)
    rels = [parse_commutator_product(fb, t) for t in G9_RELATORS]
    preferred = {2: _unit_rows(fb, 2, G9_SECTION2), 3: _unit_rows(fb, 3, G9_SECTION3)}
    G = quotient_by_relators(4, 3, rels, preferred, name="G9")
    cert: dict = {"relators": G9_RELATORS}

    def need(cond, what):
        if not cond:
            raise ConstructionError(f"G9 invariant failed: {what}")

    need(G.torsion_free, "torsion-free")
    need(G.hirsch_length == 9, f"Hirsch length 9 (got {G.hirsch_length})")
    sec = [s.rank for s in G.sections]
    need(sec == [4, 4, 1], f"section ranks (4, 4, 1) (got {sec})")
    cert["hirsch_length"] = G.hirsch_length
    cert["section_ranks"] = sec
    cert["torsion_free"] = True
    cert["elementary_divisors"] = [s.divisors for s in G.sections]

    G.compile()
    consistency = G.check_consistency(triples, seed)
    need(consistency["failures"] == 0 and consistency["cross_mismatches"] == 0, "consistency")
    cert["consistency"] = consistency

    beta = commutator_map(G, 2)
    need(beta == G9_PAIRING, f"pairing matrix (got {beta})")
    d = lattice.det(beta)
    need(abs(d) == 1, "perfect pairing")
    cert["pairing_rows"] = G9_SECTION2
    cert["pairing_cols"] = ["x", "y", "z", "w"]
    cert["pairing_matrix"] = beta
    cert["pairing_det"] = d

    center = center_is_last_term(G)
    need(center["holds"], "center equals gamma_3")
    cert["center"] = {"equals_gamma3": True, "generator": G9_SECTION3[0], "rank": sec[2],
                      "maps": center["injective_maps"]}

    x, y, z, w = (G.generator(i) for i in range(4))
    need(G.comm(w, y, x) == G.identity(), "[w,y,x] = 1")
    need(G.comm(z, y, x) == G.identity(), "[z,y,x] = 1")
    need(G.comm(w, z, x) == G.identity() and G.comm(w, z, y) == G.identity(), "[w,z,x] = [w,z,y] = 1")
    zxy = G.comm(z, x, y)
    need(G.comm(y, x, z) == zxy == G.comm(w, x, x) == G.comm(w, y, w), "identified generator of Z")
    need(zxy == (0,) * 8 + (1,), "[z,x,y] generates the last section")
    cert["identities"] = ["[w,y,x]=1", "[z,y,x]=1", "[w,z,x]=1", "[w,z,y]=1",
                          "[y,x,z]=[z,x,y]=[w,x,x]=[w,y,w]"]
    cert["verdict"] = True
    return G, cert
