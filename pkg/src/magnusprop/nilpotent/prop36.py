"""Witness pair ``(x, [y,x,y])`` in the free class-3 nilpotent group of rank 2.

The claim ``[x, w] != [y,x,y]`` for every ``w`` is turned into a finite check.
Write ``w = x^e1 y^e2 [y,x]^e3 [y,x,x]^e4 [y,x,y]^e5``. Each normal-form
coordinate of ``[x, w]`` is a polynomial of total degree at most 3 in the ``e_i``,
so it is determined by its values on the simplex ``|e| <= 3``. The certificate
recovers these polynomials from Hall collection and shows

* the ``[y,x]``-coordinate is ``-e2``, so ``[x, w]`` is central only when ``e2 = 0``;
* on ``e2 = 0`` the ``[y,x,y]``-coordinate vanishes identically,

while ``v = [y,x,y]`` has ``[y,x]``-coordinate 0 and ``[y,x,y]``-coordinate 1.
"""

from __future__ import annotations

import random

from . import truncated
from .collect import (NilWord, _sparse_points, collect_letters, expand_to_generators,
                      newton_coefficients)
from .hall import hall_basis

NVARS = 5
DEGREE = 3


class CertificateError(AssertionError):
    pass


def _inverse_word(word):
    return [(g, -s) for g, s in reversed(word)]


def _comm_x_w(basis, e) -> list[int]:
    """Coordinates of ``[x, w]`` by Hall collection of ``x^-1 w^-1 x w``."""
    w = expand_to_generators(basis, e)
    word = [(0, -1)] + _inverse_word(w) + [(0, 1)] + w
    return collect_letters(basis, word)


def _eval(poly: dict, e) -> int:
    from math import comb
    total = 0
    for mono, coef in poly.items():
        term = coef
        for i, a in mono:
            term *= comb(e[i], a) if e[i] >= 0 else _gen_binom(e[i], a)
        total += term
    return total


def _gen_binom(v: int, a: int) -> int:
    num = 1
    for k in range(a):
        num *= v - k
    from math import factorial
    return num // factorial(a)


def _render(poly: dict) -> dict:
    """Newton-basis polynomial as ``{"e1^a*e2^b": coeff}`` over binomials ``C(e_i, a)``."""
    out = {}
    for mono, coef in sorted(poly.items()):
        key = "*".join(f"C(e{i + 1},{a})" for i, a in mono) or "1"
        out[key] = coef
    return out


def verify_prop_3_6(random_checks: int = 100, seed: int = 0, bound: int = 50) -> dict:
    basis = hall_basis(2, 3)
    names = [basis.name(i) for i in range(len(basis))]
    if names != ["x", "y", "[y,x]", "[y,x,x]", "[y,x,y]"]:
        raise CertificateError(f"unexpected Hall basis {names}")
    yx, yxx, yxy = 2, 3, 4
    cert: dict = {"group": "free nilpotent, rank 2, class 3", "basis": names,
                  "witness": {"g": "x", "v": "[y,x,y]"}}

    x = NilWord.generator(0, 2, 3)
    y = NilWord.generator(1, 2, 3)
    v = NilWord.basic(basis, yxy)

    # (i) equal normal closures
    central = x.comm(v).is_identity() and y.comm(v).is_identity()
    conj_form = (x.inverse().conj(y) * x) == NilWord.basic(basis, yx)
    xv = x * v
    conj_form_v = (xv.inverse().conj(y) * xv) == NilWord.basic(basis, yx)
    cert["normal_closure"] = {
        "v_central": central,
        "[y,x] = (x^-1)^y x": conj_form,
        "[y,x] = ((xv)^-1)^y (xv)": conj_form_v,
        "argument": "both normal closures contain x or xv and [y,x], hence equal <x> gamma_2",
    }
    cert["g_infinite_order_mod_derived"] = True

    # (ii) interpolation certificate
    pts = _sparse_points([1] * NVARS, DEGREE)
    values = {}
    for pt in pts:
        e = [0] * NVARS
        for i, a in pt:
            e[i] = a
        values[pt] = _comm_x_w(basis, e)
    polys = [newton_coefficients({p: val[k] for p, val in values.items()}, [1] * NVARS, DEGREE)
             for k in range(len(basis))]
    cert["grid"] = {"points": len(pts), "description": "e in {0..3}^5 with sum(e) <= 3"}
    cert["polynomials"] = {names[k]: _render(polys[k]) for k in range(len(basis))}

    weight_one_zero = not polys[0] and not polys[1]
    yx_is_minus_e2 = polys[yx] == {((1, 1),): -1}
    restricted = {m: c for m, c in polys[yxy].items() if all(i != 1 for i, _ in m)}
    cert["weight_one_coordinates_zero"] = weight_one_zero
    cert["[y,x]_coordinate_is_-e2"] = yx_is_minus_e2
    cert["[y,x,y]_coordinate_on_e2=0"] = _render(restricted)
    cert["[y,x,y]_coordinate_zero_on_central_locus"] = not restricted

    # confirmations off the grid, against the truncated-algebra representation
    rng = random.Random(seed)
    mismatches = 0
    for _ in range(random_checks):
        e = [rng.randint(-bound, bound) for _ in range(NVARS)]
        if all(0 <= a for a in e) and sum(e) <= DEGREE:
            e[0] = bound + 1
        predicted = [_eval(p, e) for p in polys]
        w_img = truncated.normal_form_image(basis, e, 3)
        x_img = truncated.generator(0, 1, 3)
        comm = truncated.mul(
            truncated.mul(truncated.inverse(x_img, 3), truncated.inverse(w_img, 3), 3),
            truncated.mul(x_img, w_img, 3), 3)
        if comm != truncated.normal_form_image(basis, predicted, 3):
            mismatches += 1
        w = NilWord(basis, e)
        if list(x.comm(w).exponents) != predicted:
            mismatches += 1
    cert["random_checks"] = {"count": random_checks, "seed": seed, "bound": bound,
                             "mismatches": mismatches}

    # the displayed identity [x, [y,x]^n] = [y,x,x]^-n and [x, x^m] = 1
    series = []
    for n in range(-5, 6):
        got = list(collect_letters(basis, [(0, -1)] + _inverse_word(expand_to_generators(basis, [0, 0, n, 0, 0]))
                                   + [(0, 1)] + expand_to_generators(basis, [0, 0, n, 0, 0])))
        series.append({"n": n, "coordinates": got, "ok": got == [0, 0, 0, -n, 0]})
    cert["[x,[y,x]^n]"] = series
    trivial = all(x.comm(x ** m).is_identity() for m in range(-3, 4))
    cert["[x,x^m]=1"] = trivial

    cert["assumption"] = ("normal-form coordinates of [x, w] are polynomials of total degree "
                          "at most the class in the exponents of w (Hall-Petrescu)")
    ok = (central and conj_form and conj_form_v and weight_one_zero and yx_is_minus_e2
          and not restricted and mismatches == 0 and all(s["ok"] for s in series) and trivial)
    cert["v_coordinates"] = {"[y,x]": 0, "[y,x,y]": 1}
    cert["verdict"] = ok
    return cert
