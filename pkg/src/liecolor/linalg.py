"""Exact linear algebra over F_p on int64 numpy arrays.

All matrices hold residues in [0, p).  Row reduction is plain Gauss-Jordan
with table-lookup inverses; ranks, nullspaces and inverses are exact.  The
characteristic polynomial uses the division-free Berkowitz recurrence so it
stays correct for any p, including p <= matrix size.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np


def as_mat(rows, p: int) -> np.ndarray:
    """Copy arbitrary nested ints into a reduced int64 matrix."""
    return np.array(rows, dtype=np.int64) % p


def zeros(shape) -> np.ndarray:
    return np.zeros(shape, dtype=np.int64)


def eye(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.int64)


@lru_cache(maxsize=64)
def inv_table(p: int) -> np.ndarray:
    """inv_table(p)[a] is the inverse of a mod p (index 0 unused)."""
    t = np.zeros(p, dtype=np.int64)
    for a in range(1, p):
        t[a] = pow(a, -1, p)
    return t


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    return (a @ b) % p


def rref(mat: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form over F_p; returns (rref, pivot columns)."""
    a = mat.copy() % p
    rows, cols = a.shape
    inv = inv_table(p)
    r = 0
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        pv = int(a[r, c])
        if pv != 1:
            a[r] = (a[r] * inv[pv]) % p
        colvals = a[:, c].copy()
        colvals[r] = 0
        other = np.nonzero(colvals)[0]
        if other.size:
            a[other] = (a[other] - np.outer(colvals[other], a[r])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def rank(mat: np.ndarray, p: int) -> int:
    if mat.size == 0:
        return 0
    return len(rref(mat, p)[1])


def nullspace(mat: np.ndarray, p: int) -> np.ndarray:
    """Canonical basis (as rows) of {x : mat @ x = 0} over F_p.

    Basis rows are indexed by the free columns in ascending order, each with
    a 1 in its free position, so the result is deterministic.
    """
    rows, cols = mat.shape
    if cols == 0:
        return zeros((0, 0))
    r, pivots = rref(mat, p)
    pivset = set(pivots)
    free = [c for c in range(cols) if c not in pivset]
    basis = zeros((len(free), cols))
    for k, fc in enumerate(free):
        basis[k, fc] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = (-r[i, fc]) % p
    return basis


def inv_matrix(mat: np.ndarray, p: int) -> np.ndarray:
    """Inverse over F_p; raises ValueError when singular."""
    n = mat.shape[0]
    if mat.shape != (n, n):
        raise ValueError("matrix must be square")
    aug = np.hstack([mat % p, eye(n)])
    r, pivots = rref(aug, p)
    if pivots[:n] != list(range(n)):
        raise ValueError("matrix is singular over F_p")
    return r[:, n:].copy()


def solve(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray | None:
    """One solution x of a @ x = b over F_p, or None when inconsistent."""
    rows, cols = a.shape
    aug = np.hstack([a % p, (b % p).reshape(rows, 1)])
    r, pivots = rref(aug, p)
    if cols in pivots:
        return None
    x = zeros(cols)
    for i, pc in enumerate(pivots):
        x[pc] = r[i, cols]
    return x


class Echelon:
    """Incremental row space: watch a growing set of vectors stay reduced.

    Keeps rows in echelon form (pivot entry 1, pivot column cleared), which
    makes membership tests and independent inserts O(rank * length).
    """

    def __init__(self, length: int, p: int):
        self.length = length
        self.p = p
        self.rows: list[np.ndarray] = []
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: np.ndarray) -> np.ndarray:
        v = vec % self.p
        for row, piv in zip(self.rows, self.pivots):
            c = int(v[piv])
            if c:
                v = (v - c * row) % self.p
        return v

    def contains(self, vec: np.ndarray) -> bool:
        return not self.reduce(vec).any()

    def add(self, vec: np.ndarray) -> bool:
        """Insert vec; returns True when it enlarged the span."""
        v = self.reduce(vec)
        nz = np.nonzero(v)[0]
        if nz.size == 0:
            return False
        piv = int(nz[0])
        v = (v * inv_table(self.p)[int(v[piv])]) % self.p
        for i, row in enumerate(self.rows):
            c = int(row[piv])
            if c:
                self.rows[i] = (row - c * v) % self.p
        self.rows.append(v)
        self.pivots.append(piv)
        return True


def char_poly(mat: np.ndarray, p: int) -> list[int]:
    """Coefficients of det(x I - mat) over F_p, ascending order.

    Division-free Berkowitz recurrence: each leading principal submatrix
    updates the polynomial through a lower-triangular Toeplitz product.
    """
    n = mat.shape[0]
    a = mat % p
    poly = np.array([1], dtype=np.int64)  # descending, 0x0 matrix
    for r in range(1, n + 1):
        top = a[: r - 1, : r - 1]
        row = a[r - 1, : r - 1]
        col = a[: r - 1, r - 1]
        colv = np.zeros(r + 1, dtype=np.int64)
        colv[0] = 1
        colv[1] = (-a[r - 1, r - 1]) % p
        if r >= 2:
            v = col.copy()
            colv[2] = (-(row @ v)) % p
            for s in range(3, r + 1):
                v = (top @ v) % p
                colv[s] = (-(row @ v)) % p
        new = np.zeros(r + 1, dtype=np.int64)
        for j in range(len(poly)):
            seg = colv[: r + 1 - j]
            new[j : j + seg.size] = (new[j : j + seg.size] + seg * int(poly[j])) % p
        poly = new
    return [int(c) for c in poly[::-1]]


def restrict_operator(op: np.ndarray, basis_cols: np.ndarray, p: int) -> np.ndarray:
    """Matrix of op on the subspace spanned by the columns of basis_cols.

    Requires the subspace to be op-invariant; raises ValueError otherwise.
    """
    d = basis_cols.shape[1]
    image = (op @ basis_cols) % p
    out = zeros((d, d))
    for j in range(d):
        x = solve(basis_cols, image[:, j], p)
        if x is None:
            raise ValueError("subspace is not invariant under the operator")
        out[:, j] = x
    return out


def vec(mat: np.ndarray) -> np.ndarray:
    """Row-major flattening; the convention all operator matrices use."""
    return mat.reshape(-1)


def left_mul_operator(b: np.ndarray, p: int) -> np.ndarray:
    """Operator sending vec(X) to vec(b @ X) in row-major convention."""
    n = b.shape[0]
    return np.kron(b, eye(n)) % p


def right_mul_operator(b: np.ndarray, p: int) -> np.ndarray:
    """Operator sending vec(X) to vec(X @ b) in row-major convention."""
    n = b.shape[0]
    return np.kron(eye(n), b.T) % p
