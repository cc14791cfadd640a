"""Small exact linear algebra kernel over the rationals.

Matrices are tuples of tuples of ``fractions.Fraction``; row index first.
Everything here is dense, which is fine at the desk scale this package
works at (dimensions rarely exceed a few dozen).
"""

from fractions import Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def mat(rows):
    """Freeze an iterable of iterables into an exact matrix."""
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


def zeros(nrows, ncols):
    return tuple((ZERO,) * ncols for _ in range(nrows))


def eye(n):
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def shape(m):
    return (len(m), len(m[0]) if m else 0)


def matmul(a, b):
    """Sparse-aware exact product; the blocks here are mostly 0/1."""
    ra, ca = shape(a)
    rb, cb = shape(b)
    if ca != rb:
        raise ValueError("matmul shape mismatch: %sx%s @ %sx%s" % (ra, ca, rb, cb))
    bnz = [[(k, w) for k, w in enumerate(row) if w] for row in b]
    out = []
    for row in a:
        acc = [ZERO] * cb
        for j, v in enumerate(row):
            if v:
                for k, w in bnz[j]:
                    acc[k] += v * w
        out.append(tuple(acc))
    return tuple(out)


def matvec(a, v):
    return tuple(sum((x * y for x, y in zip(row, v)), ZERO) for row in a)


def add(a, b):
    return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(a, b))


def sub(a, b):
    return tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(a, b))


def _rref(m):
    """Row-reduce a list-of-lists copy; returns (rref, pivot columns)."""
    rows = [list(r) for r in m]
    nr = len(rows)
    nc = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(nc):
        pivot = next((i for i in range(r, nr) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(nr):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return rows, pivots


def rank(m):
    if not m or not m[0]:
        return 0
    return len(_rref(m)[1])


def kernel_vector(m):
    """Return one nonzero rational vector v with m @ v = 0, or None."""
    nr, nc = shape(m)
    if nc == 0:
        return None
    if nr == 0:
        v = [ZERO] * nc
        v[0] = ONE
        return tuple(v)
    rref, pivots = _rref(m)
    free = [c for c in range(nc) if c not in pivots]
    if not free:
        return None
    c0 = free[0]
    v = [ZERO] * nc
    v[c0] = ONE
    for r, pc in enumerate(pivots):
        v[pc] = -rref[r][c0]
    return tuple(v)


def cokernel_vector(m):
    """Return one nonzero w with w @ m = 0, or None."""
    nr, nc = shape(m)
    if nr == 0:
        return None
    if nc == 0:
        v = [ZERO] * nr
        v[0] = ONE
        return tuple(v)
    return kernel_vector(tuple(zip(*m)))


def inverse(m):
    """Exact inverse of a square matrix, or None when singular."""
    n, nc = shape(m)
    if n != nc:
        raise ValueError("inverse of non-square matrix")
    if n == 0:
        return ()
    aug = [list(r) + list(e) for r, e in zip(m, eye(n))]
    rref, pivots = _rref(aug)
    if pivots[:n] != list(range(n)):
        return None
    return tuple(tuple(rref[i][n:]) for i in range(n))


def solve(a, b):
    """One exact solution x of a @ x = b, or None when inconsistent.

    ``b`` is a vector; when the system is underdetermined the free
    variables are set to zero.
    """
    nr, nc = shape(a)
    aug = [list(r) + [bv] for r, bv in zip(a, b)]
    rref, pivots = _rref(aug)
    if nc in pivots:
        return None
    x = [ZERO] * nc
    for r, pc in enumerate(pivots):
        x[pc] = rref[r][nc]
    return tuple(x)


def solve_all(a, b):
    """Solution set of a @ x = b as (particular, kernel basis) or None."""
    x0 = solve(a, b)
    if x0 is None:
        return None
    nr, nc = shape(a)
    rref, pivots = _rref(a)
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for c0 in free:
        v = [ZERO] * nc
        v[c0] = ONE
        for r, pc in enumerate(pivots):
            v[pc] = -rref[r][c0]
        basis.append(tuple(v))
    return x0, tuple(basis)


def parse_fraction(s):
    """Parse "p/q" or "p" into an exact Fraction."""
    return Fraction(str(s))


def format_fraction(x):
    """Render a Fraction as "p/q" in lowest terms ("p" when q = 1)."""
    x = Fraction(x)
    return str(x)
