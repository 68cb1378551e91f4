"""Cyclotomic units and the polynomial pair ``f``, ``fbar`` with ``f * fbar = 1 mod T^p - 1``."""

from __future__ import annotations

from fractions import Fraction

from .laurent import CycInt, LaurentPoly


class NotAUnitError(ArithmeticError):
    pass


class InvariantError(AssertionError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# -- rational polynomial helpers (dense, lowest degree first) -------------------------

def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_divmod(a, b):
    a, b = _trim(a), _trim(b)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    r = [Fraction(x) for x in a]
    while len(_trim(r)) >= len(b) and _trim(r):
        r = _trim(r)
        k = len(r) - len(b)
        c = r[-1] / b[-1]
        q[k] += c
        for i, bi in enumerate(b):
            r[k + i] -= c * bi
    return _trim(q), _trim(r)


def _poly_sub(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def cyc_inverse_unit(p: int, u: CycInt) -> CycInt:
    """Inverse of a unit of ``Z[zeta_p]`` by the extended Euclidean algorithm over ``Q``."""
    phi = [Fraction(1)] * p
    a = [Fraction(x) for x in _trim(u.v)]
    if not a:
        raise NotAUnitError("zero is not a unit")
    # invariant: s_i * a == r_i mod phi
    r0, r1 = phi, a
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, rem = _poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
        if not r1:
            raise NotAUnitError(f"{u} shares a factor with the cyclotomic polynomial")
    c = r1[0]
    inv = [x / c for x in s1]
    if any(x.denominator != 1 for x in inv):
        raise NotAUnitError(f"{u} is not a unit of Z[zeta_{p}]")
    out = CycInt.reduce(p, LaurentPoly.from_list([int(x) for x in inv]))
    if out * u != CycInt.const(p, 1):
        raise InvariantError("inverse check failed")
    return out


def _build_f(p: int) -> LaurentPoly:
    """``(1+T)^(p-1) - ((2^(p-1) - 1)/p) * Phi_p`` without the ``p >= 5`` guard."""
    k, rem = divmod(2 ** (p - 1) - 1, p)
    if rem:
        raise InvariantError("2^(p-1) - 1 is not divisible by p")
    f = (LaurentPoly.const(1) + LaurentPoly.T()) ** (p - 1) - LaurentPoly.cyclotomic(p) * k
    if f.eval_at_one() != 1:
        raise InvariantError("f(1) != 1")
    nu = (CycInt.const(p, 1) + CycInt.zeta(p)) ** (p - 1)
    if CycInt.reduce(p, f) != nu:
        raise InvariantError("f does not reduce to (1+zeta)^(p-1)")
    return f


def build_f(p: int) -> LaurentPoly:
    if not is_prime(p) or p < 5:
        raise ValueError("build_f needs a prime p >= 5")
    return _build_f(p)


def nu(p: int) -> CycInt:
    return (CycInt.const(p, 1) + CycInt.zeta(p)) ** (p - 1)


def build_fbar(p: int, f: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Return ``(fbar, q)`` with ``f * fbar = 1 + q * (T^p - 1)`` and ``fbar(1) = 1``."""
    inv = cyc_inverse_unit(p, CycInt.reduce(p, f))
    g = inv.lift()
    k, rem = divmod(1 - g.eval_at_one(), p)
    if rem:
        raise InvariantError("lift of the inverse is not 1 mod p at T = 1")
    fbar = g + LaurentPoly.cyclotomic(p) * k
    if fbar.eval_at_one() != 1:
        raise InvariantError("fbar(1) != 1")
    tp1 = LaurentPoly.T(p) - 1
    q = (f * fbar - 1).divide_exact(tp1)
    if f * fbar != 1 + q * tp1:
        raise InvariantError("f * fbar != 1 + q (T^p - 1)")
    return fbar, q


def torsion_units(p: int) -> list[CycInt]:
    """``+-zeta^k``: the roots of unity in ``Z[zeta_p]``."""
    out = []
    for k in range(p):
        z = CycInt.zeta(p, k)
        out.extend([z, -z])
    return out


def is_root_of_unity(p: int, u: CycInt) -> bool:
    if u.is_zero():
        raise ValueError("zero is not a unit")
    return u in torsion_units(p)


def residue_table(p: int, f: LaurentPoly) -> list[dict]:
    """Coefficient vectors of ``f`` and ``T^n`` modulo ``T^p - 1``, one row per ``n``."""
    from .laurent import ModTp
    fv = ModTp.reduce(p, f).v
    rows = []
    for n in range(p):
        tn = ModTp.reduce(p, LaurentPoly.T(n)).v
        rows.append({"n": n, "T^n": list(tn), "differs": fv != tn})
    return rows


def not_power_of_T(p: int, f: LaurentPoly) -> bool:
    return all(row["differs"] for row in residue_table(p, f))
