"""Integer lattices, Smith normal form and subgroups of the torus (k*)^n."""

from dataclasses import dataclass
from math import gcd


def smith_form(rows, ncols=None):
    """Smith normal form of an integer matrix.

    Returns (U, D, V) with U * A * V = D, U and V unimodular and D diagonal
    with d_1 | d_2 | ... (nonnegative).  Matrices are lists of lists.
    """
    A = [list(map(int, r)) for r in rows]
    m = len(A)
    n = ncols if ncols is not None else (len(A[0]) if A else 0)
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(M, i, j):
        M[i], M[j] = M[j], M[i]

    def swap_cols(M, i, j):
        for r in M:
            r[i], r[j] = r[j], r[i]

    def add_row(M, src, dst, f):  # row_dst += f * row_src
        M[dst] = [a + f * b for a, b in zip(M[dst], M[src])]

    def add_col(M, src, dst, f):
        for r in M:
            r[dst] += f * r[src]

    t = 0
    while t < min(m, n):
        nz = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        swap_rows(A, t, pi)
        swap_rows(U, t, pi)
        swap_cols(A, t, pj)
        swap_cols(V, t, pj)
        while True:
            done = True
            for i in range(t + 1, m):
                if A[i][t]:
                    f = A[i][t] // A[t][t]
                    add_row(A, t, i, -f)
                    add_row(U, t, i, -f)
                    if A[i][t]:
                        # remainder smaller than pivot: make it the pivot
                        swap_rows(A, t, i)
                        swap_rows(U, t, i)
                        done = False
            for j in range(t + 1, n):
                if A[t][j]:
                    f = A[t][j] // A[t][t]
                    add_col(A, t, j, -f)
                    add_col(V, t, j, -f)
                    if A[t][j]:
                        swap_cols(A, t, j)
                        swap_cols(V, t, j)
                        done = False
            if not done:
                continue
            # divisibility of the remaining block by the pivot
            bad = next(
                ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % A[t][t]),
                None,
            )
            if bad is None:
                break
            add_row(A, bad[0], t, 1)
            add_row(U, bad[0], t, 1)
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    return U, A, V


def invariant_factors(rows, ncols):
    """Invariant factors (d_1, ..., d_ncols) of Z^ncols / rowspan, zero-padded."""
    if not rows:
        return (0,) * ncols
    _, D, _ = smith_form(rows, ncols)
    diag = [D[i][i] for i in range(min(len(D), ncols))]
    nonzero = [d for d in diag if d]
    return tuple(nonzero + [0] * (ncols - len(nonzero)))


@dataclass(frozen=True)
class CharacterLattice:
    """Sublattice of Z^2 generated by character exponents (u, v), read as mu1^u mu2^v."""

    vectors: tuple = ()

    @classmethod
    def from_vectors(cls, vecs):
        vs = sorted({(int(u), int(v)) for u, v in vecs if (u, v) != (0, 0)})
        return cls(tuple(vs))

    def rank(self):
        if not self.vectors:
            return 0
        return sum(1 for d in invariant_factors(self.vectors, 2) if d)

    def contains_point(self, mu1, mu2):
        """True iff every character is trivial at (mu1, mu2)."""
        return all(mu1**u * mu2**v == 1 for u, v in self.vectors)

    def contains_roots(self, a, b, N):
        """Membership of (zeta_N^a, zeta_N^b), decided on exponents."""
        return all((a * u + b * v) % N == 0 for u, v in self.vectors)

    def __str__(self):
        return "{" + ", ".join(f"({u},{v})" for u, v in self.vectors) + "}"


@dataclass(frozen=True)
class TorusSubgroupStructure:
    """The group mu_{d_1} x ... x mu_{d_n}, with mu_0 meaning all of k*."""

    invariant_factors: tuple

    @property
    def is_finite(self):
        return all(self.invariant_factors)

    @property
    def order(self):
        """Group order, or None when infinite."""
        if not self.is_finite:
            return None
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    def __str__(self):
        parts = [f"mu_{d}" if d else "k*" for d in self.invariant_factors]
        return " x ".join(parts)


def snf_invariant_factors(lattice):
    """Structure of the common kernel of the characters in ``lattice``."""
    return TorusSubgroupStructure(invariant_factors(lattice.vectors, 2))


def cyclic_structure(exponents):
    """Structure of {mu : mu^e = 1 for all e}: mu_g with g the gcd (mu_0 = k*)."""
    g = 0
    for e in exponents:
        g = gcd(g, int(e))
    return TorusSubgroupStructure((g,))


def finite_by_rank(lattice):
    """Finiteness via a pair of independent characters, independent of the Smith form."""
    vs = lattice.vectors
    return any(a[0] * b[1] - a[1] * b[0] for k, a in enumerate(vs) for b in vs[k + 1 :])


def left_kernel(rows, ncols):
    """Basis of integer relations n with n * A = 0 (rows of U beyond the rank)."""
    if not rows:
        return []
    U, D, _ = smith_form(rows, ncols)
    r = sum(1 for i in range(min(len(D), ncols)) if D[i][i])
    return [U[i] for i in range(r, len(rows))]


__all__ = [
    "CharacterLattice",
    "TorusSubgroupStructure",
    "cyclic_structure",
    "finite_by_rank",
    "invariant_factors",
    "left_kernel",
    "smith_form",
    "snf_invariant_factors",
]
