"""Free associative ring truncated above degree ``c``.

Sending each generator ``x_i`` to ``1 + X_i`` is a faithful representation of the
free class-``c`` nilpotent group, which makes it an independent oracle for
collection. Elements are dicts from words (tuples of generator indices) to ints.
"""

from __future__ import annotations

from typing import Iterable

TElem = dict


def one() -> TElem:
    return {(): 1}


def mul(a: TElem, b: TElem, c: int) -> TElem:
    out: dict = {}
    for u, cu in a.items():
        for v, cv in b.items():
            if len(u) + len(v) > c:
                continue
            w = u + v
            val = out.get(w, 0) + cu * cv
            if val:
                out[w] = val
            else:
                out.pop(w, None)
    return out


def generator(i: int, sign: int, c: int) -> TElem:
    if sign == 1:
        return {(): 1, (i,): 1}
    # (1 + X)^-1 = sum (-X)^k
    return {(i,) * k: (-1) ** k for k in range(c + 1)}


def image(letters: Iterable[tuple[int, int]], c: int) -> TElem:
    """Image of a generator word ``[(g, +-1), ...]``."""
    out = one()
    for g, s in letters:
        out = mul(out, generator(g, s, c), c)
    return out


def inverse(a: TElem, c: int) -> TElem:
    """Inverse of an element with constant term 1."""
    if a.get((), 0) != 1:
        raise ValueError("constant term must be 1")
    n = {w: -v for w, v in a.items() if w}
    out, term = one(), one()
    for _ in range(c):
        term = mul(term, n, c)
        for w, v in term.items():
            out[w] = out.get(w, 0) + v
    return {w: v for w, v in out.items() if v}


def power(a: TElem, k: int, c: int) -> TElem:
    if k < 0:
        a, k = inverse(a, c), -k
    out = one()
    while k:
        if k & 1:
            out = mul(out, a, c)
        a = mul(a, a, c)
        k >>= 1
    return out


def normal_form_image(basis, exps, c: int) -> TElem:
    """Image of a normal form: basic commutators are evaluated as ring commutators."""
    cache: dict = {}

    def elem(i):
        if i not in cache:
            e = basis.elements[i]
            if e.is_generator:
                cache[i] = generator(e.generator, 1, c)
            else:
                u, v = elem(e.left), elem(e.right)
                cache[i] = mul(mul(inverse(u, c), inverse(v, c), c), mul(u, v, c), c)
        return cache[i]

    out = one()
    for i, e in enumerate(exps):
        if e:
            out = mul(out, power(elem(i), e, c), c)
    return out
