"""Root-system power sums, semisimple representatives and the E8 comparison.

Two fixed root sets: 24 forms in four variables (+-2x_i and +-x1+-x2+-x3+-x4)
and the 240 roots of E8 in eight variables.  The eight-parameter family G(y)
lives in the 8-mode Fock space with modes 1,2,3,4 and 5,6,7,8 read as the
barred modes 1b..4b.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import Callable, Sequence

from . import linalg
from .clifford import gamma_word
from .covariants import PairMatrix
from .embed import QubitState, index_of
from .fock import FockState, apply_word, p, top, vacuum, word
from .scalars import simplify

HALF = Fraction(1, 2)


# ---------------------------------------------------------------------------
# root sets


@lru_cache(maxsize=None)
def f4_forms() -> tuple[tuple[int, ...], ...]:
    forms = []
    for i in range(4):
        for s in (2, -2):
            v = [0] * 4
            v[i] = s
            forms.append(tuple(v))
    forms += [tuple(s) for s in product((1, -1), repeat=4)]
    return tuple(forms)


@lru_cache(maxsize=None)
def e8_roots() -> tuple[tuple[Fraction, ...], ...]:
    """112 roots +-x_i +-x_j and 128 roots 1/2(+-x_1 ... +-x_8) with an even number of minus signs."""
    roots = []
    for i, j in combinations(range(8), 2):
        for si, sj in product((1, -1), repeat=2):
            v = [Fraction(0)] * 8
            v[i], v[j] = Fraction(si), Fraction(sj)
            roots.append(tuple(v))
    for s in product((1, -1), repeat=8):
        if s.count(-1) % 2 == 0:
            roots.append(tuple(HALF * c for c in s))
    return tuple(roots)


def _power_sum(forms, x: Sequence, p_: int):
    if p_ < 0:
        raise ValueError("power must be non-negative")
    total = 0
    for f in forms:
        v = 0
        for c, xi in zip(f, x):
            if c:
                v = v + c * xi
        total = total + v ** (2 * p_)
    return simplify(total)


def pi_2p(x: Sequence, p_: int):
    """Sum over the 24 forms of e(x)^{2p}."""
    if len(x) != 4:
        raise ValueError("pi_2p takes four variables")
    return _power_sum(f4_forms(), x, p_)


def Pi_2p(x: Sequence, p_: int):
    """Sum over the 240 E8 roots of <alpha, x>^{2p}."""
    if len(x) != 8:
        raise ValueError("Pi_2p takes eight variables")
    return _power_sum(e8_roots(), x, p_)


# ---------------------------------------------------------------------------
# four-qubit semisimple family

_BELL = (
    {(0, 0): 1, (1, 1): 1},
    {(0, 1): 1, (1, 0): -1},
    {(0, 1): 1, (1, 0): 1},
    {(0, 0): 1, (1, 1): -1},
)


def semisimple_qubit_state(x: Sequence) -> QubitState:
    """sum_a x_a phi_a (x) phi_a with the Bell pairs phi_a; the two 1/sqrt2 factors give 1/2."""
    if len(x) != 4:
        raise ValueError("need four parameters")
    amps = [0] * 16
    for xa, bell in zip(x, _BELL):
        for (a, b), c in bell.items():
            for (d, e), c2 in bell.items():
                k = index_of((a, b, d, e))
                amps[k] = amps[k] + HALF * c * c2 * xa
    return QubitState(4, tuple(simplify(a) for a in amps))


def semialtern_state(y: Sequence) -> QubitState:
    """y1(0000+1111) + y2(0011+1100) + y3(0101+1010) + y4(0110+1001)."""
    if len(y) != 4:
        raise ValueError("need four parameters")
    amps = [0] * 16
    pairs = (("0000", "1111"), ("0011", "1100"), ("0101", "1010"), ("0110", "1001"))
    for yk, (a, b) in zip(y, pairs):
        amps[int(a, 2)] = yk
        amps[int(b, 2)] = yk
    return QubitState(4, tuple(amps))


def y_of_x4(x: Sequence) -> tuple:
    """y with semialtern_state(y) == semisimple_qubit_state(x)."""
    x1, x2, x3, x4 = x
    return tuple(simplify(v) for v in (HALF * (x1 + x4), HALF * (x1 - x4), HALF * (x2 + x3), HALF * (x3 - x2)))


def x_of_y4(y: Sequence) -> tuple:
    y1, y2, y3, y4 = y
    return tuple(simplify(v) for v in (y1 + y2, y3 - y4, y3 + y4, y1 - y2))


def wallach_g(y: Sequence, p_: int):
    """sum_{a<b} (y_a + y_b)^{2p} + sum_{a<b} (y_a - y_b)^{2p}."""
    if len(y) != 4:
        raise ValueError("need four parameters")
    total = 0
    for a, b in combinations(range(4), 2):
        total = total + (y[a] + y[b]) ** (2 * p_) + (y[a] - y[b]) ** (2 * p_)
    return simplify(total)


def f_closed(q: QubitState) -> tuple:
    """(F_2, F_6, F_8, F_12) from H, Gamma, Sigma, Pi."""
    from .invariants import fourqubit_invariants

    inv = fourqubit_invariants(q)
    H, G, S, P = inv.H, inv.GammaInv, inv.Sigma, inv.Pi
    third = Fraction(4, 3)
    return (
        simplify(2 * H),
        simplify(4 * (3 * H ** 3 - 4 * G)),
        simplify(third * (33 * H ** 4 - 104 * H * G + 40 * S)),
        simplify(third * (513 * H ** 6 - 3012 * H ** 3 * G + 2180 * H ** 2 * S + 488 * G ** 2 + 480 * P)),
    )


def wallach_f(x: Sequence, p_: int):
    """1/6 of the Wallach sum taken directly in the x parameters."""
    return simplify(Fraction(1, 6) * wallach_g(x, p_))


# ---------------------------------------------------------------------------
# eight-parameter family

# the two index words of each E_alpha, alpha = 1..7; modes 5..8 are 1b..4b
E_WORDS = (
    ((1, 2, 3, 4), (5, 6, 7, 8)),
    ((1, 2, 7, 8), (5, 6, 3, 4)),
    ((1, 6, 3, 8), (5, 2, 7, 4)),
    ((1, 6, 7, 4), (5, 2, 3, 8)),
    ((1, 5, 4, 8), (2, 6, 3, 7)),
    ((1, 5, 3, 7), (2, 6, 4, 8)),
    ((1, 5, 2, 6), (3, 7, 4, 8)),
)

# rows of 2y = S x
_S8 = (
    (1, 1, 1, 1, -1, -1, -1, -1),
    (1, 1, -1, -1, -1, -1, 1, 1),
    (1, -1, 1, -1, -1, 1, -1, 1),
    (1, -1, -1, 1, -1, 1, 1, -1),
    (1, -1, -1, 1, 1, -1, -1, 1),
    (1, -1, 1, -1, 1, -1, 1, -1),
    (1, 1, -1, -1, 1, 1, -1, -1),
    (1, 1, 1, 1, 1, 1, 1, 1),
)


def e_state(alpha: int) -> FockState:
    if alpha == 8:
        return vacuum(8) + top(8)
    if not 1 <= alpha <= 7:
        raise ValueError(f"alpha must be 1..8, got {alpha}")
    out = FockState(8)
    for w in E_WORDS[alpha - 1]:
        out = out + apply_word(word(*(p(i) for i in w)), vacuum(8))
    return out


def omega(state: FockState) -> FockState:
    """Gamma_1 Gamma_2 Gamma_3 Gamma_4, exchanging single and double box occupancy."""
    return gamma_word([1, 2, 3, 4], state)


def G_state(y: Sequence) -> FockState:
    if len(y) != 8:
        raise ValueError("G_state takes eight parameters")
    out = FockState(8)
    for a, ya in enumerate(y, start=1):
        if ya != 0:
            out = out + e_state(a).scale(ya)
    return out


def y_of_x(x: Sequence) -> tuple:
    if len(x) != 8:
        raise ValueError("need eight coordinates")
    return tuple(simplify(HALF * sum(s * xi for s, xi in zip(row, x))) for row in _S8)


def x_of_y(y: Sequence) -> tuple:
    """Inverse of y_of_x; the rows of S are orthogonal with S S^t = 8, so x = S^t y / 4."""
    if len(y) != 8:
        raise ValueError("need eight coordinates")
    return tuple(simplify(Fraction(1, 4) * sum(_S8[r][c] * y[r] for r in range(8))) for c in range(8))


def _z_tensor(y: Sequence) -> dict[tuple[int, int, int, int], object]:
    """Fully antisymmetric Z_ijkl (modes 1..8) of the four-particle part of G(y)."""
    Z = {}
    for a, pair in enumerate(E_WORDS):
        for w in pair:
            for perm in _perms4():
                idx = tuple(w[k] for k in perm)
                Z[idx] = _perm_sign(perm) * y[a]
    return Z


@lru_cache(maxsize=None)
def _perms4():
    from itertools import permutations

    return tuple(permutations(range(4)))


def _perm_sign(perm) -> int:
    s = 1
    for a, b in combinations(range(len(perm)), 2):
        if perm[a] > perm[b]:
            s = -s
    return s


def g_state_r(y: Sequence) -> PairMatrix:
    """R^{IJ}_{KL} of G(y) from closed-form matrix elements, without touching the Fock space.

    Indices 1..8 on top are p^i and 9..16 are n_i; at the bottom 1..8 are n_k and
    9..16 are p^k.  The blocks are
      R^{ij}_{kl}       = (d^i_l d^j_k - d^i_k d^j_l) y8^2 + sum_{a<b} Z_ijab Z_ablk
      R^{k+8 l+8}_{i+8 j+8} = R^{ij}_{kl}
      R^{ij}_{k+8 l+8}  = R^{i+8 j+8}_{kl} = 2 y8 Z_ijkl
      R^{i j+8}_{k+8 l} = (d^i_l d^k_j - 1/2 d^i_j d^k_l) sum y^2 - R^{ik}_{jl}
    and the remaining entries follow from antisymmetry in each pair.
    """
    y = list(y)
    Z = _z_tensor(y)
    y8 = y[7]
    yy = sum(v * v for v in y)
    d = 16
    rows = [[0] * (d * d) for _ in range(d * d)]

    def setv(I, J, K, L, v):
        if v == 0:
            return
        for (a, b, s1) in ((I, J, 1), (J, I, -1)):
            r = rows[(a - 1) * d + (b - 1)]
            r[(K - 1) * d + (L - 1)] = s1 * v
            r[(L - 1) * d + (K - 1)] = -s1 * v

    def delta(a, b):
        return 1 if a == b else 0

    pure = {}
    for i, j in combinations(range(1, 9), 2):
        for k, l in combinations(range(1, 9), 2):
            v = (delta(i, l) * delta(j, k) - delta(i, k) * delta(j, l)) * y8 * y8
            for a, b in combinations(range(1, 9), 2):
                z1 = Z.get((i, j, a, b))
                if z1 is not None:
                    z2 = Z.get((a, b, l, k))
                    if z2 is not None:
                        v = v + z1 * z2
            v = simplify(v)
            pure[(i, j, k, l)] = v
            setv(i, j, k, l, v)
            setv(k + 8, l + 8, i + 8, j + 8, v)
            z = Z.get((i, j, k, l), 0)
            setv(i, j, k + 8, l + 8, simplify(2 * y8 * z))
            setv(i + 8, j + 8, k, l, simplify(2 * y8 * z))

    def r_pure(i, j, k, l):
        if i == j or k == l:
            return 0
        s = 1
        if i > j:
            i, j, s = j, i, -s
        if k > l:
            k, l, s = l, k, -s
        return s * pure[(i, j, k, l)]

    for i in range(1, 9):
        for j in range(1, 9):
            for k in range(1, 9):
                for l in range(1, 9):
                    v = (delta(i, l) * delta(k, j) - HALF * delta(i, j) * delta(k, l)) * yy - r_pure(i, k, j, l)
                    v = simplify(v)
                    if v == 0:
                        continue
                    # fill R^{i j+8}_{k+8 l} and its antisymmetric partners
                    I, J, K, L = i, j + 8, k + 8, l
                    rows[(I - 1) * d + (J - 1)][(K - 1) * d + (L - 1)] = v
                    rows[(J - 1) * d + (I - 1)][(K - 1) * d + (L - 1)] = -v
                    rows[(I - 1) * d + (J - 1)][(L - 1) * d + (K - 1)] = -v
                    rows[(J - 1) * d + (I - 1)][(L - 1) * d + (K - 1)] = v
    return PairMatrix(d, rows)


def spin16_invariants_fast(y: Sequence, orders: Sequence[int], pairs: str = "unordered") -> dict[int, object]:
    from .invariants import pair_traces

    return pair_traces(g_state_r(y), orders, pairs)


def headline_rhs(y: Sequence, p_: int):
    """(-1)^p 2^{2p-1} Pi_2p(x(y))."""
    return simplify((-1) ** p_ * Fraction(2) ** (2 * p_ - 1) * Pi_2p(x_of_y(y), p_))


# ---------------------------------------------------------------------------
# Jacobian rank


def _lagrange_derivative_at_zero(values: Sequence, ts: Sequence[int]):
    """f'(0) for the interpolating polynomial through (t, f(t))."""
    total = 0
    for a, (ta, fa) in enumerate(zip(ts, values)):
        if fa == 0:
            continue
        # d/dt of the Lagrange basis l_a at t = 0
        others = [tb for b, tb in enumerate(ts) if b != a]
        denom = 1
        for tb in others:
            denom *= ta - tb
        deriv = 0
        for c in range(len(others)):
            term = 1
            for e, tb in enumerate(others):
                if e != c:
                    term *= -tb
            deriv += term
        total = total + fa * Fraction(deriv, denom)
    return simplify(total)


def jacobian(polys: Sequence[Callable], degrees: Sequence[int], point: Sequence) -> list[list]:
    """Exact partial derivatives by interpolating each polynomial along coordinate lines.

    Along x + t e_j a polynomial of total degree d is univariate of degree <= d,
    so d+1 samples determine it.
    """
    k = len(point)
    J = []
    for f, deg in zip(polys, degrees):
        ts = list(range(-(deg // 2), deg - deg // 2 + 1))
        row = []
        for j in range(k):
            vals = []
            for t in ts:
                x = list(point)
                x[j] = x[j] + t
                vals.append(f(x))
            row.append(_lagrange_derivative_at_zero(vals, ts))
        J.append(row)
    return J


def jacobian_rank(polys: Sequence[Callable], degrees: Sequence[int], point: Sequence) -> int:
    return linalg.rank(jacobian(polys, degrees, point))


def spin16_jacobian(y: Sequence, orders: Sequence[int] = (1, 4, 6, 7, 9, 10, 12, 15)) -> list[list]:
    """d I_{2p} / d y_j on the G(y) family.

    R is quadratic in y, so dR/dy_j = (R(y + e_j) - R(y - e_j)) / 2 exactly, and
    d Tr R^p = p Tr(R^{p-1} dR) for the unordered-pair matrix.
    """
    base = g_state_r(y).restricted()[1]
    dRs = []
    for j in range(8):
        up = list(y)
        dn = list(y)
        up[j] = up[j] + 1
        dn[j] = dn[j] - 1
        A = g_state_r(up).restricted()[1]
        B = g_state_r(dn).restricted()[1]
        dRs.append([[simplify(HALF * (a - b)) for a, b in zip(ra, rb)] for ra, rb in zip(A, B)])
    res = linalg.power_traces_with_gradient(base, dRs, orders)
    return [res[p_][1] for p_ in orders]
