"""Exact Gaussian elimination over a coefficient field."""


def rref(rows, field):
    """Reduced row echelon form; returns (rows, pivot_columns).  Input is not modified."""
    m = [[field(c) for c in r] for r in rows]
    pivots = []
    ncols = len(m[0]) if m else 0
    r = 0
    for col in range(ncols):
        piv = next((k for k in range(r, len(m)) if m[k][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][col].inverse()
        m[r] = [c * inv for c in m[r]]
        for k in range(len(m)):
            if k != r and m[k][col]:
                f = m[k][col]
                m[k] = [a - f * b for a, b in zip(m[k], m[r])]
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def solve(A, b, field):
    """One solution x of A x = b (free variables set to 0), or None if inconsistent."""
    n = len(A[0]) if A else 0
    aug = [list(row) + [rhs] for row, rhs in zip(A, b)]
    if not aug:
        return [field.zero] * n
    m, pivots = rref(aug, field)
    if n in pivots:
        return None
    x = [field.zero] * n
    for row, col in zip(m, pivots):
        x[col] = row[n]
    return x


def nullspace(A, field, ncols=None):
    """A basis of {x : A x = 0}."""
    n = ncols if ncols is not None else (len(A[0]) if A else 0)
    if not A:
        return [[field.one if k == c else field.zero for k in range(n)] for c in range(n)]
    m, pivots = rref(A, field)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [field.zero] * n
        v[f] = field.one
        for row, col in zip(m, pivots):
            v[col] = -row[f]
        basis.append(v)
    return basis
