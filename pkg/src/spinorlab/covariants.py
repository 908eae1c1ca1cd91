"""Covariants built from the invariant pairing: K_I, K^I_J, R^{IJ}_{KL}, the 28x28
view for four fermions, and reduced density matrices.

Index conventions: e_I = (n_1..n_N, p^1..p^N) for I = 1..2N and
e^I = g^{IJ} e_J = (p^1..p^N, n_1..n_N), where g pairs i with i+N.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import lcm
from typing import Sequence

from . import linalg
from .fock import FockState, LadderOp, apply_ladder, n, p
from .linalg import ZiMatrix
from .pairing import mukai, top_signs
from .scalars import GaussianRational, conj, simplify


def e_low(I: int, N: int) -> LadderOp:
    if not 1 <= I <= 2 * N:
        raise ValueError(f"index {I} outside 1..{2 * N}")
    return n(I) if I <= N else p(I - N)


def e_up(I: int, N: int) -> LadderOp:
    if not 1 <= I <= 2 * N:
        raise ValueError(f"index {I} outside 1..{2 * N}")
    return p(I) if I <= N else n(I - N)


def metric(N: int) -> list[list[int]]:
    return [[1 if abs(I - J) == N else 0 for J in range(2 * N)] for I in range(2 * N)]


def k_vector(psi: FockState) -> list:
    N = psi.modes
    return [mukai(psi, apply_ladder(e_low(I, N), psi)) for I in range(1, 2 * N + 1)]


def k_matrix(psi: FockState) -> list[list]:
    """K^I_J = (psi, e^I e_J psi) = (e^I psi, e_J psi)."""
    N = psi.modes
    ups = [apply_ladder(e_up(I, N), psi) for I in range(1, 2 * N + 1)]
    lows = [apply_ladder(e_low(J, N), psi) for J in range(1, 2 * N + 1)]
    return [[mukai(u, lo) for lo in lows] for u in ups]


# ---------------------------------------------------------------------------
# dense integer machinery


@lru_cache(maxsize=None)
def _ladder_table(N: int, create: bool, mode: int) -> tuple[tuple[int, int, int], ...]:
    bit = 1 << (mode - 1)
    low = bit - 1
    rows = []
    for m in range(1 << N):
        if bool(m & bit) != create:
            rows.append((m, m ^ bit, -1 if (m & low).bit_count() & 1 else 1))
    return tuple(rows)


def _apply_dense(op: LadderOp, vec: list[int], N: int) -> list[int]:
    out = [0] * (1 << N)
    for src, dst, s in _ladder_table(N, op.kind.value == "p", op.mode):
        v = vec[src]
        if v:
            out[dst] = v if s > 0 else -v
    return out


def _scaled_vectors(psi: FockState) -> tuple[int, list[int], list[int] | None]:
    D = 1
    parts = {}
    for m, c in psi.items():
        if isinstance(c, GaussianRational):
            a, b = c.re, c.im
        else:
            a, b = Fraction(c), Fraction(0)
        parts[m] = (a, b)
        D = lcm(D, a.denominator, b.denominator)
    size = 1 << psi.modes
    re = [0] * size
    im = [0] * size
    for m, (a, b) in parts.items():
        re[m] = int(a * D)
        im[m] = int(b * D)
    return D, re, (im if any(im) else None)


def _flint_rows(rows: list[list[int]]):
    import flint

    return flint.fmpz_mat(len(rows), len(rows[0]), [x for r in rows for x in r])


def _pairing_gram(left: list, right: list, N: int) -> ZiMatrix:
    """G[a][b] = (left_a, right_b) for lists of (re, im) integer vectors."""
    full = (1 << N) - 1
    signs = top_signs(N)
    lre = [v[0] for v in left]
    lim = [v[1] for v in left]
    rre = [[signs[m] * v[0][full ^ m] for v in right] for m in range(1 << N)]
    rim = [[signs[m] * v[1][full ^ m] for v in right] for m in range(1 << N)]
    has_l = any(any(r) for r in lim)
    has_r = any(any(r) for r in rim)
    A = ZiMatrix(_flint_rows(lre), _flint_rows(lim) if has_l else None)
    B = ZiMatrix(_flint_rows(rre), _flint_rows(rim) if has_r else None)
    return A @ B


def _hermitian_gram(left: list, right: list, N: int) -> ZiMatrix:
    """G[a][b] = <left_a | right_b>."""
    lre = [v[0] for v in left]
    lim = [[-x for x in v[1]] for v in left]
    rre = [[v[0][m] for v in right] for m in range(1 << N)]
    rim = [[v[1][m] for v in right] for m in range(1 << N)]
    has_l = any(any(r) for r in lim)
    has_r = any(any(r) for r in rim)
    A = ZiMatrix(_flint_rows(lre), _flint_rows(lim) if has_l else None)
    B = ZiMatrix(_flint_rows(rre), _flint_rows(rim) if has_r else None)
    return A @ B


def _scalar(re: int, im: int, denom: int):
    return simplify(GaussianRational(Fraction(re, denom), Fraction(im, denom)))


# ---------------------------------------------------------------------------
# pair matrices


class PairMatrix:
    """T^{IJ}_{KL} for I, J, K, L in 1..dim; rows are ordered pairs (I, J).

    Contractions over pairs run over all ordered pairs (Einstein convention).
    """

    __slots__ = ("dim", "rows")

    def __init__(self, dim: int, rows: list[list]):
        if len(rows) != dim * dim or any(len(r) != dim * dim for r in rows):
            raise ValueError("pair matrix must be dim^2 x dim^2")
        self.dim = dim
        self.rows = rows

    def __getitem__(self, idx):
        I, J, K, L = idx
        d = self.dim
        return self.rows[(I - 1) * d + (J - 1)][(K - 1) * d + (L - 1)]

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def unrestricted_traces(self, ps: Sequence[int]) -> dict[int, object]:
        """T^{A1}_{A2} T^{A2}_{A3} ... T^{Ap}_{A1} summed over ordered pairs."""
        return linalg.power_traces(self.rows, ps)

    def restricted(self) -> tuple[list[tuple[int, int]], list[list]]:
        """The I<J, K<L view (no sign changes)."""
        d = self.dim
        pairs = list(combinations(range(1, d + 1), 2))
        idx = [(i - 1) * d + (j - 1) for i, j in pairs]
        return pairs, [[self.rows[a][b] for b in idx] for a in idx]

    def antisymmetric_traces(self, ps: Sequence[int]) -> dict[int, object]:
        """Same numbers as unrestricted_traces when T is antisymmetric in both pairs:
        each ordered-pair sum is twice the I<J sum."""
        _, R = self.restricted()
        tr = linalg.power_traces(R, ps)
        return {k: v * 2 ** k for k, v in tr.items()}


def _commutator_states(psi: FockState):
    """D, and for every K<L the scaled vector of [e_K, e_L] psi, keyed by (K, L)."""
    N = psi.modes
    D, re, im = _scaled_vectors(psi)
    zero = [0] * (1 << N)
    im = im if im is not None else zero
    single = {}
    for L in range(1, 2 * N + 1):
        op = e_low(L, N)
        single[L] = (_apply_dense(op, re, N), _apply_dense(op, im, N))
    out = {}
    for K, L in combinations(range(1, 2 * N + 1), 2):
        op = e_low(K, N)
        a = _apply_dense(op, single[L][0], N)
        b = _apply_dense(op, single[L][1], N)
        # [e_K, e_L] = 2 e_K e_L - g_KL
        if L - K == N:
            a = [2 * x - y for x, y in zip(a, re)]
            b = [2 * x - y for x, y in zip(b, im)]
        else:
            a = [2 * x for x in a]
            b = [2 * x for x in b]
        out[(K, L)] = (a, b)
    return D, out


def r_tensor(psi: FockState) -> PairMatrix:
    """R^{IJ}_{KL} = 1/4 (psi, [e^I, e^J][e_K, e_L] psi), requires N = 0 mod 4.

    Since [e^I, e^J] is odd under transposition this is -1/4 ([e^I,e^J]psi, [e_K,e_L]psi).
    """
    N = psi.modes
    if N % 4:
        raise ValueError(f"r_tensor needs N divisible by 4, got {N}")
    d = 2 * N
    rows = [[0] * (d * d) for _ in range(d * d)]
    if psi.is_zero():
        return PairMatrix(d, rows)
    D, comm = _commutator_states(psi)
    pairs = list(comm)
    vecs = [comm[k] for k in pairs]
    G = _pairing_gram(vecs, vecs, N).entries()
    pos = {k: a for a, k in enumerate(pairs)}
    denom = 4 * D * D

    def sigma(I):
        return I + N if I <= N else I - N

    for (I, J) in pairs:
        A, B = sigma(I), sigma(J)
        sgn = 1
        if A > B:
            A, B = B, A
            sgn = -1
        grow = G[pos[(A, B)]]
        r1 = rows[(I - 1) * d + (J - 1)]
        r2 = rows[(J - 1) * d + (I - 1)]
        for (K, L), b in pos.items():
            g = grow[b]
            if isinstance(g, tuple):
                val = _scalar(-sgn * g[0], -sgn * g[1], denom)
            else:
                val = Fraction(-sgn * g, denom) if g else 0
            if val != 0:
                c1 = (K - 1) * d + (L - 1)
                c2 = (L - 1) * d + (K - 1)
                r1[c1] = val
                r1[c2] = -val
                r2[c1] = -val
                r2[c2] = val
    return PairMatrix(d, rows)


def sl8_block(R: PairMatrix) -> PairMatrix:
    """R^{ij}_{kl} with all four indices among the first N (upper p's, lower n's)."""
    N = R.dim // 2
    rows = []
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            rows.append([R[i, j, k, l] for k in range(1, N + 1) for l in range(1, N + 1)])
    return PairMatrix(N, rows)


def four_fermion_r(psi: FockState) -> PairMatrix:
    """R^{ij}_{kl} = (psi, p^i p^j n_k n_l psi) for N = 8.

    Cached on the (immutable) state; callers must not mutate the result.
    """
    if psi.modes != 8:
        raise ValueError("expected 8 modes")
    return _four_fermion_r(psi)


@lru_cache(maxsize=8)
def _four_fermion_r(psi: FockState) -> PairMatrix:
    return sl8_block(r_tensor(psi))


# ---------------------------------------------------------------------------
# four qubits inside eight modes


def katanova_labels(n_boxes: int = 4) -> list[tuple[int, int]]:
    """Ordered row labels (12, 12b, 1b2, 1b2b, ..., 34, ..., 3b4b, 11b, 22b, 33b, 44b).

    Blocks come in the order 12, 34, 13, 24, 14, 23 and then the diagonal pairs.
    """
    nb = n_boxes
    order = [(1, 2), (3, 4), (1, 3), (2, 4), (1, 4), (2, 3)]
    labels = []
    for a, b in order:
        labels += [(a, b), (a, b + nb), (a + nb, b), (a + nb, b + nb)]
    labels += [(a, a + nb) for a in range(1, nb + 1)]
    return labels


BLOCK_PAIRS = ((1, 2), (3, 4), (1, 3), (2, 4), (1, 4), (2, 3))


def katanova_28(psi: FockState) -> list[list]:
    """28x28 matrix with entry (ij),(kl) equal to 1/2 R^{ij}_{lk}, rows in katanova_labels order.

    The index swap kl -> lk and the factor 1/2 make the diagonal blocks 1/2 R_ab.
    """
    if psi.modes != 8:
        raise ValueError("expected 8 modes")
    if {m.bit_count() for m, _ in psi.items()} - {4}:
        raise ValueError("katanova_28 needs a homogeneous four-particle state")
    R = four_fermion_r(psi)
    labels = katanova_labels()
    half = Fraction(1, 2)
    return [[simplify(half * R[i, j, l, k]) for (k, l) in labels] for (i, j) in labels]


def blocks_28(M: list[list]) -> list[list[list]]:
    """Seven diagonal 4x4 blocks of a 28x28 matrix (the last one is 4x4 over the pairs ii-bar)."""
    return [[row[4 * b:4 * b + 4] for row in M[4 * b:4 * b + 4]] for b in range(7)]


def r_blocks(psi: FockState) -> dict[tuple[int, int], list[list]]:
    """The blocks R_ab, i.e. twice the diagonal blocks of the 28x28 view.

    The 28x28 rows for the pair 13 run over (mu1 mu3) while M is indexed by
    (mu3 mu1), so that block is conjugated by the swap 01 <-> 10.
    """
    bl = blocks_28(katanova_28(psi))
    out = {}
    for k, pair in enumerate(BLOCK_PAIRS):
        B = linalg.scale(bl[k], 2)
        if pair == (1, 3):
            B = [[B[_SWAP[i]][_SWAP[j]] for j in range(4)] for i in range(4)]
        out[pair] = B
    return out


_SWAP = (0, 2, 1, 3)


def rho_tensor(psi: FockState) -> PairMatrix:
    """rho^{ij}_{kl} = 1/2 <psi| p^i p^j n_k n_l psi> = 1/2 <n_j n_i psi | n_k n_l psi>."""
    N = psi.modes
    D, re, im = _scaled_vectors(psi)
    im = im if im is not None else [0] * (1 << N)
    nn = {}
    for k in range(1, N + 1):
        for l in range(1, N + 1):
            a = _apply_dense(n(k), _apply_dense(n(l), re, N), N)
            b = _apply_dense(n(k), _apply_dense(n(l), im, N), N)
            nn[(k, l)] = (a, b)
    keys = list(nn)
    bras = [nn[(j, i)] for (i, j) in keys]
    G = _hermitian_gram(bras, [nn[k] for k in keys], N).entries()
    denom = 2 * D * D
    rows = []
    for a in range(len(keys)):
        row = []
        for b in range(len(keys)):
            g = G[a][b]
            row.append(_scalar(g[0], g[1], denom) if isinstance(g, tuple) else (Fraction(g, denom) if g else 0))
        rows.append(row)
    return PairMatrix(N, rows)


def reduced_density(psi: FockState, pair: tuple[int, int]) -> list[list]:
    """rho_ab for boxes a<b of an embedded four-qubit state (trace <psi|psi>).

    Rows and columns are ordered (mu_a mu_b) = 00, 01, 10, 11.  Built from the
    pair tensor: rho_ab[(mu),(nu)] = 2 rho^{kl}_{ji} with (i,j) <-> mu, (k,l) <-> nu,
    i.e. the ket index sits on the annihilators.
    """
    if psi.modes != 8:
        raise ValueError("expected 8 modes")
    a, b = pair
    if not 1 <= a < b <= 4:
        raise ValueError(f"bad qubit pair {pair}")
    rho = rho_tensor(psi)
    labels = [(a, b), (a, b + 4), (a + 4, b), (a + 4, b + 4)]
    return [[2 * rho[k, l, j, i] for (k, l) in labels] for (i, j) in labels]


def lmn_matrices(q) -> tuple[list[list], list[list], list[list]]:
    """(L, M, N): L[(mu1 mu2)][(mu3 mu4)], M[(mu3 mu1)][(mu2 mu4)], N[(mu1 mu4)][(mu2 mu3)]."""
    if q.n != 4:
        raise ValueError("lmn_matrices needs four qubits")
    a = q.amps

    def amp(m1, m2, m3, m4):
        return a[8 * m1 + 4 * m2 + 2 * m3 + m4]

    rng = (0, 1)
    L = [[amp(m1, m2, m3, m4) for m3 in rng for m4 in rng] for m1 in rng for m2 in rng]
    M = [[amp(m1, m2, m3, m4) for m2 in rng for m4 in rng] for m3 in rng for m1 in rng]
    N = [[amp(m1, m2, m3, m4) for m2 in rng for m3 in rng] for m1 in rng for m4 in rng]
    return L, M, N


EPS2 = [[0, 0, 0, 1], [0, 0, -1, 0], [0, -1, 0, 0], [1, 0, 0, 0]]  # eps (x) eps


def blocks_from_lmn(q) -> dict[tuple[int, int], list[list]]:
    """R_ab = (eps x eps) X (eps x eps) X^t and its partner with X^t first, for X in L, M, N."""
    L, M, N = lmn_matrices(q)
    out = {}
    for X, (first, second) in ((L, ((1, 2), (3, 4))), (M, ((1, 3), (2, 4))), (N, ((1, 4), (2, 3)))):
        Xt = linalg.transpose(X)
        out[first] = linalg.matmul(linalg.matmul(EPS2, X), linalg.matmul(EPS2, Xt))
        out[second] = linalg.matmul(linalg.matmul(EPS2, Xt), linalg.matmul(EPS2, X))
    return out


def hermitian_conjugate(M: list[list]) -> list[list]:
    return [[conj(x) for x in r] for r in linalg.transpose(M)]
