"""Integer Laurent polynomials, the quotient by ``T^p - 1``, and cyclotomic integers."""

from __future__ import annotations

from typing import Iterable, Sequence


class DivisionError(ArithmeticError):
    pass


class LaurentPoly:
    """Element of ``Z[T, T^-1]`` stored as ``{exponent: coefficient}`` without zeros."""

    __slots__ = ("c",)

    def __init__(self, coeffs: dict | None = None):
        self.c = {int(k): int(v) for k, v in (coeffs or {}).items() if v}

    @classmethod
    def from_list(cls, coeffs: Sequence[int], low: int = 0) -> "LaurentPoly":
        return cls({low + i: a for i, a in enumerate(coeffs)})

    @classmethod
    def const(cls, a: int) -> "LaurentPoly":
        return cls({0: a})

    @classmethod
    def T(cls, k: int = 1) -> "LaurentPoly":
        return cls({k: 1})

    @classmethod
    def cyclotomic(cls, p: int) -> "LaurentPoly":
        """``Phi_p = 1 + T + ... + T^(p-1)`` for a prime ``p``."""
        return cls({k: 1 for k in range(p)})

    def __add__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        out = dict(self.c)
        for k, v in other.c.items():
            out[k] = out.get(k, 0) + v
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({k: -v for k, v in self.c.items()})

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return _coerce(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        out: dict = {}
        for i, a in self.c.items():
            for j, b in other.c.items():
                out[i + j] = out.get(i + j, 0) + a * b
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers only exist for monomials; use subst or shift")
        out, base = LaurentPoly.const(1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return isinstance(other, LaurentPoly) and self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __bool__(self):
        return bool(self.c)

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e + k: v for e, v in self.c.items()})

    def subst_inverse(self) -> "LaurentPoly":
        """``T -> T^-1``."""
        return LaurentPoly({-e: v for e, v in self.c.items()})

    def subst_power(self, k: int) -> "LaurentPoly":
        """``T -> T^k``."""
        out: dict = {}
        for e, v in self.c.items():
            out[e * k] = out.get(e * k, 0) + v
        return LaurentPoly(out)

    def eval_at_one(self) -> int:
        return sum(self.c.values())

    def eval(self, t: int):
        from fractions import Fraction
        total = 0
        for e, v in self.c.items():
            total += v * (Fraction(t) ** e)
        return total

    @property
    def low(self) -> int:
        return min(self.c) if self.c else 0

    @property
    def high(self) -> int:
        return max(self.c) if self.c else 0

    def coeff(self, k: int) -> int:
        return self.c.get(k, 0)

    def to_list(self) -> list[int]:
        """Dense coefficients from ``low`` to ``high``."""
        if not self.c:
            return []
        return [self.c.get(k, 0) for k in range(self.low, self.high + 1)]

    def divmod_monic(self, d: "LaurentPoly") -> tuple["LaurentPoly", "LaurentPoly"]:
        """Division by a monic polynomial ``d`` with ``d(0) = +-1``, after clearing negative powers.

        Returns ``(q, r)`` with ``self = q*d + r`` and ``0 <= deg r < deg d`` on the
        nonnegative part; negative exponents are moved into the quotient first.
        """
        if not d.c or d.low != 0 or d.c[d.high] != 1:
            raise DivisionError("divisor must be a monic polynomial with nonzero constant term")
        rem = dict(self.c)
        q: dict = {}
        n = d.high
        # bring negative exponents up using the unit constant term of d
        c0 = d.c[0]
        if abs(c0) != 1:
            if any(e < 0 for e in rem):
                raise DivisionError("negative powers need a unit constant term")
        while rem and min(rem) < 0:
            e = min(rem)
            a = rem.pop(e) * c0     # c0 = +-1 so c0 is its own inverse
            q[e] = q.get(e, 0) + a
            for k, v in d.c.items():
                if k == 0:
                    continue
                rem[e + k] = rem.get(e + k, 0) - a * v
                if rem[e + k] == 0:
                    del rem[e + k]
        while rem and max(rem) >= n:
            e = max(rem)
            a = rem.pop(e)
            q[e - n] = q.get(e - n, 0) + a
            for k, v in d.c.items():
                if k == n:
                    continue
                rem[e - n + k] = rem.get(e - n + k, 0) - a * v
                if rem[e - n + k] == 0:
                    del rem[e - n + k]
        quot, r = LaurentPoly(q), LaurentPoly(rem)
        assert quot * d + r == self
        return quot, r

    def divide_exact(self, d: "LaurentPoly") -> "LaurentPoly":
        q, r = self.divmod_monic(d)
        if r:
            raise DivisionError("division is not exact")
        return q

    def divide_exact_by_Tminus1(self) -> "LaurentPoly":
        if self.eval_at_one() != 0:
            raise DivisionError("value at T=1 is not zero")
        # synthetic division from the top
        out: dict = {}
        carry = 0
        for k in range(self.high, self.low - 1, -1):
            carry += self.c.get(k, 0)
            if k - 1 >= self.low and carry:
                out[k - 1] = carry
        q = LaurentPoly(out)
        assert q * LaurentPoly({1: 1, 0: -1}) == self
        return q

    def to_json(self) -> dict:
        return {str(k): str(v) for k, v in sorted(self.c.items())}

    @classmethod
    def from_json(cls, doc: dict) -> "LaurentPoly":
        return cls({int(k): int(v) for k, v in doc.items()})

    def __repr__(self):
        if not self.c:
            return "0"
        parts = []
        for k in sorted(self.c):
            v = self.c[k]
            mono = "" if k == 0 else ("T" if k == 1 else f"T^{k}")
            if not mono:
                parts.append(str(v))
            elif v == 1:
                parts.append(mono)
            elif v == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{v}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    raise TypeError(f"cannot use {type(x).__name__} as a Laurent polynomial")


T = LaurentPoly.T()
ONE = LaurentPoly.const(1)


class ModTp:
    """Class in ``Z[T^{+-1}] / (T^p - 1)``; index ``k`` holds the coefficient of ``T^k``."""

    __slots__ = ("p", "v")

    def __init__(self, p: int, coeffs: Iterable[int]):
        v = [int(a) for a in coeffs]
        if len(v) != p:
            raise ValueError("need exactly p coefficients")
        self.p, self.v = p, tuple(v)

    @classmethod
    def reduce(cls, p: int, f: LaurentPoly) -> "ModTp":
        v = [0] * p
        for e, a in f.c.items():
            v[e % p] += a
        return cls(p, v)

    def lift(self) -> LaurentPoly:
        return LaurentPoly.from_list(self.v)

    def __add__(self, other: "ModTp") -> "ModTp":
        return ModTp(self.p, (a + b for a, b in zip(self.v, other.v)))

    def __neg__(self) -> "ModTp":
        return ModTp(self.p, (-a for a in self.v))

    def __sub__(self, other: "ModTp") -> "ModTp":
        return self + (-other)

    def __mul__(self, other: "ModTp") -> "ModTp":
        p = self.p
        out = [0] * p
        for i, a in enumerate(self.v):
            if a:
                for j, b in enumerate(other.v):
                    out[(i + j) % p] += a * b
        return ModTp(p, out)

    def __eq__(self, other):
        return isinstance(other, ModTp) and self.p == other.p and self.v == other.v

    def __hash__(self):
        return hash((self.p, self.v))

    def __repr__(self):
        return f"ModTp({self.p}, {list(self.v)})"


class CycInt:
    """Element of ``Z[zeta_p]`` in the power basis ``1, zeta, ..., zeta^(p-2)``."""

    __slots__ = ("p", "v")

    def __init__(self, p: int, coeffs: Iterable[int]):
        v = [int(a) for a in coeffs]
        if len(v) != p - 1:
            raise ValueError("need exactly p-1 coordinates")
        self.p, self.v = p, tuple(v)

    @classmethod
    def reduce(cls, p: int, f: LaurentPoly) -> "CycInt":
        full = [0] * p
        for e, a in f.c.items():
            full[e % p] += a
        top = full[p - 1]
        return cls(p, (a - top for a in full[: p - 1]))

    @classmethod
    def const(cls, p: int, a: int) -> "CycInt":
        return cls(p, [a] + [0] * (p - 2))

    @classmethod
    def zeta(cls, p: int, k: int = 1) -> "CycInt":
        return cls.reduce(p, LaurentPoly.T(k % p))

    def lift(self) -> LaurentPoly:
        return LaurentPoly.from_list(self.v)

    def _coerce(self, other) -> "CycInt":
        if isinstance(other, int):
            return CycInt.const(self.p, other)
        if other.p != self.p:
            raise ValueError("different cyclotomic rings")
        return other

    def __add__(self, other) -> "CycInt":
        other = self._coerce(other)
        return CycInt(self.p, (a + b for a, b in zip(self.v, other.v)))

    __radd__ = __add__

    def __neg__(self) -> "CycInt":
        return CycInt(self.p, (-a for a in self.v))

    def __sub__(self, other) -> "CycInt":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "CycInt":
        return self._coerce(other) - self

    def __mul__(self, other) -> "CycInt":
        other = self._coerce(other)
        p = self.p
        full = [0] * p
        for i, a in enumerate(self.v):
            if a:
                for j, b in enumerate(other.v):
                    full[(i + j) % p] += a * b
        top = full[p - 1]
        return CycInt(p, (a - top for a in full[: p - 1]))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "CycInt":
        if n < 0:
            from .units import cyc_inverse_unit
            return cyc_inverse_unit(self.p, self) ** (-n)
        out, base = CycInt.const(self.p, 1), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def is_zero(self) -> bool:
        return not any(self.v)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, int):
            other = CycInt.const(self.p, other)
        return isinstance(other, CycInt) and self.p == other.p and self.v == other.v

    def __hash__(self):
        return hash((self.p, self.v))

    def __repr__(self):
        return f"CycInt({self.p}, {list(self.v)})"

    def to_json(self) -> list[int]:
        return list(self.v)
