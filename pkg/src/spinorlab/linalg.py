"""Exact dense linear algebra on nested lists of exact scalars.

Small matrices (4x4 blocks, Jacobians, annihilator systems) use plain Gaussian
elimination over the rationals or Gaussian rationals.  Large integer products
(trace powers of pair matrices, Gram matrices) are delegated to FLINT after
clearing denominators.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

import flint

from .scalars import GaussianRational, simplify

Matrix = list  # list of rows


def zeros(r: int, c: int | None = None) -> Matrix:
    return [[0] * (r if c is None else c) for _ in range(r)]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(A: Matrix) -> Matrix:
    return [list(r) for r in zip(*A)]


def matmul(A: Matrix, B: Matrix) -> Matrix:
    Bt = transpose(B)
    out = []
    for row in A:
        out_row = []
        for col in Bt:
            s = 0
            for a, b in zip(row, col):
                if a and b:
                    s = s + a * b
            out_row.append(s)
        out.append(out_row)
    return out


def add(A: Matrix, B: Matrix) -> Matrix:
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def scale(A: Matrix, c) -> Matrix:
    return [[c * a for a in r] for r in A]


def trace(A: Matrix):
    s = 0
    for i, r in enumerate(A):
        s = s + r[i]
    return s


def kron(A: Matrix, B: Matrix) -> Matrix:
    return [[a * b for a in ra for b in rb] for ra in A for rb in B]


def _field(x):
    if isinstance(x, int):
        return Fraction(x)
    return x


def rref(A: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form over the field of the entries; returns (R, pivot columns)."""
    R = [[_field(x) for x in row] for row in A]
    rows = len(R)
    cols = len(R[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if R[i][c] != 0), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = 1 / R[r][c]
        R[r] = [x * inv for x in R[r]]
        for i in range(rows):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [x - f * y for x, y in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return R, pivots


def rank(A: Matrix) -> int:
    if not A or not A[0]:
        return 0
    return len(rref(A)[1])


def nullspace(A: Matrix, cols: int | None = None) -> list[list]:
    """Basis of {x : A x = 0}, one vector per free column."""
    if cols is None:
        cols = len(A[0])
    if not A:
        return [[1 if i == j else 0 for i in range(cols)] for j in range(cols)]
    R, pivots = rref(A)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * cols
        v[f] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -R[i][f]
        basis.append([simplify(x) for x in v])
    return basis


def det(A: Matrix):
    n = len(A)
    M = [[_field(x) for x in row] for row in A]
    result = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if M[i][c] != 0), None)
        if piv is None:
            return 0
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            result = -result
        result = result * M[c][c]
        inv = 1 / M[c][c]
        for i in range(c + 1, n):
            if M[i][c] != 0:
                f = M[i][c] * inv
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    return simplify(result)


# ---------------------------------------------------------------------------
# integer-scaled fast paths


def _parts(x) -> tuple[Fraction, Fraction]:
    if isinstance(x, GaussianRational):
        return x.re, x.im
    return Fraction(x), Fraction(0)


def split_scaled(A: Sequence[Sequence]) -> tuple[int, list[list[int]], list[list[int]] | None]:
    """Write A = (Re + i Im) / D with integer Re, Im.  Im is None for real A."""
    parts = [[_parts(x) for x in row] for row in A]
    D = 1
    for row in parts:
        for a, b in row:
            D = lcm(D, a.denominator, b.denominator)
    re = [[int(a * D) for a, _ in row] for row in parts]
    if any(b for row in parts for _, b in row):
        im = [[int(b * D) for _, b in row] for row in parts]
    else:
        im = None
    return D, re, im


def _fmpz(rows: list[list[int]]) -> flint.fmpz_mat:
    r = len(rows)
    c = len(rows[0]) if r else 0
    return flint.fmpz_mat(r, c, [x for row in rows for x in row])


class ZiMatrix:
    """Gaussian-integer matrix as a pair of FLINT integer matrices."""

    __slots__ = ("re", "im")

    def __init__(self, re: flint.fmpz_mat, im: flint.fmpz_mat | None):
        self.re = re
        self.im = im

    @classmethod
    def from_ints(cls, re, im=None) -> "ZiMatrix":
        return cls(_fmpz(re), _fmpz(im) if im is not None else None)

    def __matmul__(self, other: "ZiMatrix") -> "ZiMatrix":
        if self.im is None and other.im is None:
            return ZiMatrix(self.re * other.re, None)
        if self.im is None:
            return ZiMatrix(self.re * other.re, self.re * other.im)
        if other.im is None:
            return ZiMatrix(self.re * other.re, self.im * other.re)
        return ZiMatrix(self.re * other.re - self.im * other.im, self.re * other.im + self.im * other.re)

    def transpose(self) -> "ZiMatrix":
        return ZiMatrix(self.re.transpose(), self.im.transpose() if self.im is not None else None)

    def entries(self) -> list[list]:
        """Nested lists of Python ints (real) or (re, im) int pairs."""
        r, c = self.re.nrows(), self.re.ncols()
        re = [int(x) for x in self.re.entries()]
        if self.im is None:
            return [re[i * c:(i + 1) * c] for i in range(r)]
        im = [int(x) for x in self.im.entries()]
        return [[(re[i * c + j], im[i * c + j]) for j in range(c)] for i in range(r)]


def _trace_of_product(P: ZiMatrix, Q: ZiMatrix):
    """Tr(P Q) without forming the product: sum_ij P_ij Q_ji."""
    n = P.re.nrows()
    Qt = Q.transpose()
    pr = P.re.entries()
    qr = Qt.re.entries()
    real = sum(a * b for a, b in zip(pr, qr))
    imag = 0
    if P.im is not None and Q.im is not None:
        pi, qi = P.im.entries(), Qt.im.entries()
        real -= sum(a * b for a, b in zip(pi, qi))
        imag = sum(a * b for a, b in zip(pr, qi)) + sum(a * b for a, b in zip(pi, qr))
    elif P.im is not None:
        imag = sum(a * b for a, b in zip(P.im.entries(), qr))
    elif Q.im is not None:
        imag = sum(a * b for a, b in zip(pr, Qt.im.entries()))
    del n
    return int(real), int(imag)


def power_traces(A: Sequence[Sequence], ps: Sequence[int]) -> dict[int, object]:
    """Exact Tr(A^p) for each p by repeated multiplication (no eigenvalues)."""
    ps = sorted(set(ps))
    if not ps:
        return {}
    if ps[0] < 1:
        raise ValueError("powers must be positive")
    D, re, im = split_scaled(A)
    base = ZiMatrix.from_ints(re, im)
    half = (ps[-1] + 1) // 2
    powers = {1: base}
    for k in range(2, half + 1):
        powers[k] = powers[k - 1] @ base
    out = {}
    for p_ in ps:
        a = (p_ + 1) // 2
        b = p_ - a
        if b == 0:
            tr_re, tr_im = _trace_of_product(powers[a], ZiMatrix.from_ints(_eye(len(re)), None))
        else:
            tr_re, tr_im = _trace_of_product(powers[a], powers[b])
        denom = D ** p_
        out[p_] = simplify(GaussianRational(Fraction(tr_re, denom), Fraction(tr_im, denom)))
    return out


def _eye(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def power_traces_with_gradient(A, dA: Sequence, ps: Sequence[int]) -> dict[int, tuple]:
    """Tr(A^p) together with d/dt Tr((A + t dA_j)^p)|_0 = p Tr(A^(p-1) dA_j) for every j."""
    ps = sorted(set(ps))
    D, re, im = split_scaled(A)
    base = ZiMatrix.from_ints(re, im)
    scaled_d = []
    for M in dA:
        Dj, rj, ij = split_scaled(M)
        scaled_d.append((Dj, ZiMatrix.from_ints(rj, ij)))
    powers = {0: ZiMatrix.from_ints(_eye(len(re)), None), 1: base}
    for k in range(2, ps[-1]):
        powers[k] = powers[k - 1] @ base
    out = {}
    for p_ in ps:
        tr = _trace_of_product(powers[p_ - 1], base)
        value = simplify(GaussianRational(Fraction(tr[0], D ** p_), Fraction(tr[1], D ** p_)))
        grad = []
        for Dj, Mj in scaled_d:
            g = _trace_of_product(powers[p_ - 1], Mj)
            den = D ** (p_ - 1) * Dj
            grad.append(simplify(GaussianRational(Fraction(p_ * g[0], den), Fraction(p_ * g[1], den))))
        out[p_] = (value, grad)
    return out
