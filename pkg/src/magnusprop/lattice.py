"""Integer lattices: Hermite and Smith normal forms with unimodular transforms.

Matrices are plain lists of lists of Python ints; rows span the lattice.
"""

from __future__ import annotations

from typing import Sequence

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    if not a:
        return []
    cols = len(b[0]) if b else 0
    return [
        [sum(row[k] * b[k][j] for k in range(len(b))) for j in range(cols)]
        for row in a
    ]


def vec_mat(v: Sequence[int], m: Sequence[Sequence[int]]) -> list[int]:
    cols = len(m[0]) if m else 0
    return [sum(v[k] * m[k][j] for k in range(len(m))) for j in range(cols)]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def hnf(a: Sequence[Sequence[int]], ncols: int | None = None) -> tuple[Matrix, Matrix]:
    """Row-style Hermite normal form.

    Returns ``(H, U)`` with ``U`` unimodular and ``H == U * A``. Nonzero rows of
    ``H`` come first, pivots are positive and entries above a pivot lie in
    ``[0, pivot)``. Rows of ``U`` matching zero rows of ``H`` span the left kernel.
    """
    m = len(a)
    n = ncols if ncols is not None else (len(a[0]) if m else 0)
    h = [list(map(int, row)) for row in a]
    u = identity(m)
    r = 0
    for col in range(n):
        if r == m:
            break
        for i in range(r + 1, m):
            if h[i][col] == 0:
                continue
            x, y = h[r][col], h[i][col]
            if x == 0:
                h[r], h[i] = h[i], h[r]
                u[r], u[i] = u[i], u[r]
                continue
            g, s, t = _xgcd(x, y)
            xg, yg = x // g, y // g
            hr, hi = h[r], h[i]
            h[r] = [s * p + t * q for p, q in zip(hr, hi)]
            h[i] = [-yg * p + xg * q for p, q in zip(hr, hi)]
            ur, ui = u[r], u[i]
            u[r] = [s * p + t * q for p, q in zip(ur, ui)]
            u[i] = [-yg * p + xg * q for p, q in zip(ur, ui)]
        piv = h[r][col]
        if piv == 0:
            continue
        if piv < 0:
            h[r] = [-v for v in h[r]]
            u[r] = [-v for v in u[r]]
            piv = -piv
        for i in range(r):
            q = h[i][col] // piv
            if q:
                h[i] = [p - q * s for p, s in zip(h[i], h[r])]
                u[i] = [p - q * s for p, s in zip(u[i], u[r])]
        r += 1
    return h, u


def rank(a: Sequence[Sequence[int]]) -> int:
    h, _ = hnf(a)
    return sum(1 for row in h if any(row))


def left_kernel(a: Sequence[Sequence[int]], ncols: int | None = None) -> Matrix:
    """Integer basis of ``{v : v * A = 0}``."""
    h, u = hnf(a, ncols)
    return [u[i] for i, row in enumerate(h) if not any(row)]


def solve_left(a: Sequence[Sequence[int]], target: Sequence[int]) -> list[int] | None:
    """Integer ``y`` with ``y * A == target``, or ``None`` if target is not in the row lattice."""
    m = len(a)
    n = len(target)
    if m == 0:
        return [] if not any(target) else None
    h, u = hnf(a, n)
    rest = list(map(int, target))
    coeffs = [0] * m
    for i, row in enumerate(h):
        if not any(row):
            break
        col = next(j for j, v in enumerate(row) if v)
        q, r = divmod(rest[col], row[col])
        if r:
            return None
        coeffs[i] = q
        if q:
            rest = [p - q * s for p, s in zip(rest, row)]
    if any(rest):
        return None
    return vec_mat(coeffs, u)


def smith(a: Sequence[Sequence[int]], ncols: int | None = None) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form ``D = P * A * Q`` with ``P``, ``Q`` unimodular.

    The diagonal of ``D`` is nonnegative and each entry divides the next.
    """
    m = len(a)
    n = ncols if ncols is not None else (len(a[0]) if m else 0)
    d = [list(map(int, row)) for row in a]
    p = identity(m)
    q = identity(n)

    def swap_rows(i, j):
        d[i], d[j] = d[j], d[i]
        p[i], p[j] = p[j], p[i]

    def swap_cols(i, j):
        for row in d:
            row[i], row[j] = row[j], row[i]
        for row in q:
            row[i], row[j] = row[j], row[i]

    t = 0
    while t < min(m, n):
        nz = [(abs(d[i][j]), i, j) for i in range(t, m) for j in range(t, n) if d[i][j]]
        if not nz:
            break
        _, i0, j0 = min(nz)
        swap_rows(t, i0)
        swap_cols(t, j0)
        while True:
            changed = False
            for i in range(t + 1, m):
                if d[i][t]:
                    x, y = d[t][t], d[i][t]
                    if y % x == 0:
                        f = y // x
                        d[i] = [b_ - f * a_ for a_, b_ in zip(d[t], d[i])]
                        p[i] = [b_ - f * a_ for a_, b_ in zip(p[t], p[i])]
                        continue
                    g, s, u_ = _xgcd(x, y)
                    xg, yg = x // g, y // g
                    rt, ri = d[t], d[i]
                    d[t] = [s * a_ + u_ * b_ for a_, b_ in zip(rt, ri)]
                    d[i] = [-yg * a_ + xg * b_ for a_, b_ in zip(rt, ri)]
                    pt, pi = p[t], p[i]
                    p[t] = [s * a_ + u_ * b_ for a_, b_ in zip(pt, pi)]
                    p[i] = [-yg * a_ + xg * b_ for a_, b_ in zip(pt, pi)]
                    changed = True
            for j in range(t + 1, n):
                if d[t][j]:
                    x, y = d[t][t], d[t][j]
                    if y % x == 0:
                        f = y // x
                        for mat in (d, q):
                            for row in mat:
                                row[j] -= f * row[t]
                        continue
                    g, s, u_ = _xgcd(x, y)
                    xg, yg = x // g, y // g
                    for mat in (d, q):
                        for row in mat:
                            ct, cj = row[t], row[j]
                            row[t] = s * ct + u_ * cj
                            row[j] = -yg * ct + xg * cj
                    changed = True
            if not changed:
                break
        piv = d[t][t]
        bad = next(
            ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if d[i][j] % piv),
            None,
        )
        if bad is not None:
            # fold the offending row into row t and redo this pivot
            i = bad[0]
            d[t] = [x + y for x, y in zip(d[t], d[i])]
            p[t] = [x + y for x, y in zip(p[t], p[i])]
            continue
        if piv < 0:
            d[t] = [-v for v in d[t]]
            p[t] = [-v for v in p[t]]
        t += 1
    return d, p, q


def elementary_divisors(a: Sequence[Sequence[int]], ncols: int | None = None) -> list[int]:
    d, _, _ = smith(a, ncols)
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0)) if d[i][i]]


def inverse_unimodular(a: Sequence[Sequence[int]]) -> Matrix:
    """Exact inverse of a unimodular integer matrix."""
    n = len(a)
    h, u = hnf(a)
    if any(h[i][i] != 1 for i in range(n)):
        raise ValueError("matrix is not unimodular")
    # h is the identity, so u * a = 1
    return u


def det(a: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free Bareiss elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(map(int, row)) for row in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k]), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def lattice_index(a: Sequence[Sequence[int]], n: int) -> int:
    """Index of the row lattice in ``Z^n``; 0 when the lattice is not of full rank."""
    h, _ = hnf(a, n)
    rows = [row for row in h if any(row)]
    if len(rows) < n:
        return 0
    out = 1
    for i, row in enumerate(rows):
        out *= row[i]
    return out
