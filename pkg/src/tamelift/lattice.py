"""Exact linear algebra over Z, Z/N, and Q used by every other module.

Everything works on tuples of Python ints (arbitrary precision); no floats.
Matrices are tuples of row tuples.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

Vec = tuple[int, ...]
Mat = tuple[Vec, ...]


# ---------------------------------------------------------------------------
# vectors

def dot(u: Vec, v: Vec) -> int:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum(a * b for a, b in zip(u, v))


def vec_add(u: Vec, v: Vec) -> Vec:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Vec, v: Vec) -> Vec:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return tuple(a - b for a, b in zip(u, v))


def vec_neg(u: Vec) -> Vec:
    return tuple(-a for a in u)


def vec_scale(c: int, u: Vec) -> Vec:
    return tuple(c * a for a in u)


def vec_mod(u: Vec, n: int) -> Vec:
    return tuple(a % n for a in u)


def zero_vec(n: int) -> Vec:
    return (0,) * n


# ---------------------------------------------------------------------------
# matrices

def identity_matrix(n: int) -> Mat:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def mat_vec(a: Mat, x: Vec) -> Vec:
    return tuple(dot(row, x) for row in a)


def mat_mul(a: Mat, b: Mat) -> Mat:
    if a and b and len(a[0]) != len(b):
        raise ValueError(f"dimension mismatch: {len(a[0])} vs {len(b)}")
    bt = tuple(zip(*b)) if b else ()
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def mat_transpose(a: Mat) -> Mat:
    return tuple(zip(*a)) if a else ()


def mat_add(a: Mat, b: Mat) -> Mat:
    return tuple(vec_add(r, s) for r, s in zip(a, b))


def mat_sub(a: Mat, b: Mat) -> Mat:
    return tuple(vec_sub(r, s) for r, s in zip(a, b))


def mat_scale(c: int, a: Mat) -> Mat:
    return tuple(vec_scale(c, row) for row in a)


def mat_mod(a: Mat, n: int) -> Mat:
    return tuple(vec_mod(row, n) for row in a)


def mat_pow(a: Mat, k: int) -> Mat:
    if k < 0:
        raise ValueError("negative power not supported")
    result = identity_matrix(len(a))
    base = a
    while k:
        if k & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        k >>= 1
    return result


def det(a: Mat) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def matrix_order(a: Mat, cap: int = 100000) -> int:
    """Smallest k >= 1 with a^k = identity."""
    ident = identity_matrix(len(a))
    power = a
    for k in range(1, cap + 1):
        if power == ident:
            return k
        power = mat_mul(power, a)
    raise ValueError(f"matrix order exceeds cap {cap}")


# ---------------------------------------------------------------------------
# Smith normal form with transforms

def smith_normal_form(a: Mat) -> tuple[Mat, Mat, Mat]:
    """Return (d, u, v) with u*a*v = d, u and v unimodular, d diagonal,
    nonnegative, and each diagonal entry dividing the next.

    Pivoting is deterministic (smallest absolute value, then row-major
    position), so downstream canonical solutions are reproducible.
    """
    return _smith_normal_form_cached(tuple(tuple(row) for row in a))


@lru_cache(maxsize=None)
def _smith_normal_form_cached(a: Mat) -> tuple[Mat, Mat, Mat]:
    m = len(a)
    n = len(a[0]) if m else 0
    work = [list(row) for row in a]
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def add_row(i: int, j: int, c: int) -> None:  # row_i += c*row_j
        wi, wj = work[i], work[j]
        for k in range(n):
            wi[k] += c * wj[k]
        ui, uj = u[i], u[j]
        for k in range(m):
            ui[k] += c * uj[k]

    def add_col(j: int, i: int, c: int) -> None:  # col_j += c*col_i
        for row in work:
            row[j] += c * row[i]
        for row in v:
            row[j] += c * row[i]

    def swap_rows(i: int, j: int) -> None:
        work[i], work[j] = work[j], work[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i: int, j: int) -> None:
        for row in work:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    t = 0
    while t < min(m, n):
        # pick the smallest nonzero entry of the trailing submatrix as pivot
        best = None
        for i in range(t, m):
            for j in range(t, n):
                e = work[i][j]
                if e != 0 and (best is None or abs(e) < best[0]):
                    best = (abs(e), i, j)
        if best is None:
            break
        swap_rows(t, best[1])
        swap_cols(t, best[2])
        while True:
            p = work[t][t]
            dirty = False
            for i in range(t + 1, m):
                if work[i][t] != 0:
                    add_row(i, t, -(work[i][t] // p))
                    if work[i][t] != 0:  # remainder smaller than |p|
                        swap_rows(t, i)
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(t + 1, n):
                if work[t][j] != 0:
                    add_col(j, t, -(work[t][j] // p))
                    if work[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
                        break
            if dirty:
                continue
            break
        # pivot must divide every remaining entry
        p = work[t][t]
        offender = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if work[i][j] % p != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            add_row(t, offender, 1)
            continue
        if work[t][t] < 0:
            add_row(t, t, -2)  # negate the row
        t += 1

    d = tuple(tuple(row) for row in work)
    return d, tuple(tuple(r) for r in u), tuple(tuple(r) for r in v)


def snf_diagonal(a: Mat) -> tuple[int, ...]:
    d, _, _ = smith_normal_form(a)
    k = min(len(a), len(a[0]) if a else 0)
    return tuple(d[i][i] for i in range(k))


# ---------------------------------------------------------------------------
# lattices

def hnf_rows(rows) -> Mat:
    """Canonical (row Hermite form) basis of the lattice spanned by the rows:
    pivots positive and strictly to the right as you go down, entries above a
    pivot reduced into [0, pivot)."""
    work = [list(r) for r in rows if any(r)]
    if not work:
        return ()
    n = len(work[0])
    r = 0
    for col in range(n):
        piv = None
        for i in range(r, len(work)):
            if work[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        for i in range(r + 1, len(work)):
            while work[i][col] != 0:
                q = work[r][col] // work[i][col]
                work[r] = [a - q * b for a, b in zip(work[r], work[i])]
                work[r], work[i] = work[i], work[r]
        if work[r][col] < 0:
            work[r] = [-a for a in work[r]]
        p = work[r][col]
        for i in range(r):
            q = work[i][col] // p
            if q:
                work[i] = [a - q * b for a, b in zip(work[i], work[r])]
        r += 1
    return tuple(tuple(row) for row in work[:r])


def integer_kernel_basis(a: Mat, n: int | None = None) -> Mat:
    """Canonical basis of {x in Z^n : a x = 0}; this kernel is saturated."""
    m = len(a)
    if n is None:
        n = len(a[0]) if m else 0
    if m == 0:
        return identity_matrix(n)
    d, _, v = smith_normal_form(a)
    cols = []
    for j in range(n):
        dj = d[j][j] if j < min(m, n) else 0
        if dj == 0:
            cols.append(tuple(v[i][j] for i in range(n)))
    return hnf_rows(cols)


def solve_mod(a: Mat, b: Vec, n: int) -> Vec | None:
    """Canonical solution x in [0, n)^cols of a x = b (mod n), or None.

    Canonical means: Smith-form particular solution with every free
    parameter set to 0, coordinates then reduced into [0, n).
    """
    m = len(a)
    cols = len(a[0]) if m else 0
    if len(b) != m:
        raise ValueError(f"dimension mismatch: {len(b)} vs {m}")
    if n == 1:
        return zero_vec(cols)
    d, u, v = smith_normal_form(a)
    c = mat_vec(u, b)
    y = [0] * cols
    for i in range(min(m, cols)):
        di = d[i][i]
        rhs = c[i] % n
        g = gcd(di, n)
        if rhs % g != 0:
            return None
        nn = n // g
        if nn > 1:
            y[i] = (rhs // g) * pow((di // g) % nn, -1, nn) % nn
    for i in range(min(m, cols), m):
        if c[i] % n != 0:
            return None
    return vec_mod(mat_vec(v, tuple(y)), n)


# ---------------------------------------------------------------------------
# rational helpers

def rational_solve(a, b):
    """One exact solution (free variables 0) of a x = b over Q, or None."""
    m = len(a)
    n = len(a[0]) if m else 0
    work = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(a, b)]
    pivots = []
    r = 0
    for col in range(n):
        piv = None
        for i in range(r, m):
            if work[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        work[r] = [x / work[r][col] for x in work[r]]
        for i in range(m):
            if i != r and work[i][col] != 0:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if work[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        x[col] = work[i][n]
    return x


def rational_inverse(a: Mat):
    """Exact inverse as a list of Fraction rows; raises if singular."""
    n = len(a)
    work = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(a)]
    for col in range(n):
        piv = None
        for i in range(col, n):
            if work[i][col] != 0:
                piv = i
                break
        if piv is None:
            raise ValueError("matrix is singular")
        work[col], work[piv] = work[piv], work[col]
        work[col] = [x / work[col][col] for x in work[col]]
        for i in range(n):
            if i != col and work[i][col] != 0:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[col])]
    return [row[n:] for row in work]


def in_rational_span(rows: Mat, vec: Vec) -> bool:
    """Is vec in the Q-span of the given rows?"""
    if not any(vec):
        return True
    if not rows:
        return False
    sol = rational_solve(mat_transpose(rows), vec)
    return sol is not None
