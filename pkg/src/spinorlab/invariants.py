"""Trace invariants of the covariants and the classical four-qubit invariants.

Pair contractions.  A sum over an antisymmetric index pair IJ can run over
ordered pairs (Einstein) or over unordered pairs I<J.  For a chain of p pair
matrices the two differ by exactly 2^p.  ``I_{2p}`` and the E8-type invariants
use unordered pairs, which is the normalisation under which the trace, root and
block identities hold; ``pairs="ordered"`` returns the Einstein value.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .clifford import Chirality, chirality
from .covariants import PairMatrix, blocks_from_lmn, four_fermion_r, katanova_28, lmn_matrices, r_tensor
from .embed import QubitState, embed_single
from .fock import FockState
from .pairing import quadratic_form
from .scalars import simplify

SL8_ORDERS = (1, 3, 4, 5, 6, 7, 9)
SPIN16_ORDERS = (1, 4, 6, 7, 9, 10, 12, 15)
G_ORDERS = (1, 3, 4, 6)
PAIR_CONVENTIONS = ("unordered", "ordered")


@dataclass(frozen=True)
class FourQubitInvariants:
    H: object
    L: object
    M: object
    N: object
    D: object
    E: object
    F: object
    Sigma: object
    GammaInv: object
    Pi: object
    s1: object
    s2: object
    s3: object
    s4: object

    def as_dict(self) -> dict[str, object]:
        return {k: getattr(self, k) for k in self.__dataclass_fields__}


@dataclass
class InvariantReport:
    """label -> value, with a provenance tag per label (trace-path, closed-form, oracle)."""

    values: dict = field(default_factory=dict)
    provenance: dict = field(default_factory=dict)

    def add(self, label: str, value, tag: str) -> None:
        self.values[label] = value
        self.provenance[label] = tag


def _need_four(q: QubitState) -> None:
    if q.n != 4:
        raise ValueError(f"four-qubit invariants need n = 4, got {q.n}")


def inner4(U: Sequence, V: Sequence):
    """U.V = U0 V3 - U1 V2 - U2 V1 + U3 V0 (the matrix eps x eps)."""
    return U[0] * V[3] - U[1] * V[2] - U[2] * V[1] + U[3] * V[0]


def h_invariant(q: QubitState):
    _need_four(q)
    U, V, W, Z = lmn_matrices(q)[0]
    return simplify(inner4(U, Z) - inner4(V, W))


def gram_s3(q: QubitState):
    """s3 as the difference of two 3x3 determinants of U, V, W, Z inner products."""
    _need_four(q)
    U, V, W, Z = lmn_matrices(q)[0]
    d = inner4
    A = [[d(U, U), d(U, V), d(U, Z)],
         [d(U, W), d(V, W), d(W, Z)],
         [d(U, Z), d(V, Z), d(Z, Z)]]
    B = [[d(U, V), d(V, V), d(V, W)],
         [d(U, W), d(V, W), d(W, W)],
         [d(U, Z), d(V, Z), d(W, Z)]]
    return simplify(2 * linalg.det(A) - 2 * linalg.det(B))


def fourqubit_invariants(q: QubitState) -> FourQubitInvariants:
    """H, L, M, N from contractions and determinants; D from s3 = 4D + 2HL."""
    _need_four(q)
    H = h_invariant(q)
    Lm, Mm, Nm = lmn_matrices(q)
    L, M, N = linalg.det(Lm), linalg.det(Mm), linalg.det(Nm)
    s3 = gram_s3(q)
    D = simplify((s3 - 2 * H * L) * Fraction(1, 4))
    E = simplify(D + H * L)
    F = simplify(E + H * N)
    return FourQubitInvariants(
        H=H, L=L, M=M, N=N, D=D, E=E, F=F,
        Sigma=simplify(L * L + M * M + N * N),
        GammaInv=simplify(D + E + F),
        Pi=simplify((L - M) * (M - N) * (N - L)),
        s1=simplify(2 * H),
        s2=simplify(H * H + 4 * M + 2 * L),
        s3=s3,
        s4=simplify(L * L),
    )


# ---------------------------------------------------------------------------
# block traces

_BLOCK_OF = {"L": (1, 2), "M": (1, 3), "N": (1, 4)}


def block_power_traces(q: QubitState, which: str, ps: Iterable[int]) -> dict[int, object]:
    """Tr R^p for R = (eps x eps) X (eps x eps) X^t, X one of L, M, N."""
    _need_four(q)
    if which not in _BLOCK_OF:
        raise ValueError(f"which must be L, M or N, got {which!r}")
    R = blocks_from_lmn(q)[_BLOCK_OF[which]]
    return linalg.power_traces(R, list(ps))


def newton_from_traces(t1, t2, t3, t4) -> tuple:
    """Characteristic-polynomial coefficients (s1..s4) of a 4x4 matrix from its power traces."""
    s1 = t1
    s2 = (t1 * t1 - t2) * Fraction(1, 2)
    s3 = (t1 ** 3 - 3 * t1 * t2 + 2 * t3) * Fraction(1, 6)
    s4 = (t1 ** 4 - 6 * t1 * t1 * t2 + 3 * t2 * t2 + 8 * t1 * t3 - 6 * t4) * Fraction(1, 24)
    return tuple(simplify(s) for s in (s1, s2, s3, s4))


def char_poly_s(q: QubitState, which: str = "L") -> tuple:
    t = block_power_traces(q, which, [1, 2, 3, 4])
    return newton_from_traces(t[1], t[2], t[3], t[4])


def _cycled(inv: FourQubitInvariants, which: str) -> tuple:
    """(L, M, N, D, E, F) relabelled so the L-table formulas serve the M and N blocks."""
    L, M, N, D, E, F = inv.L, inv.M, inv.N, inv.D, inv.E, inv.F
    if which == "L":
        return L, M, N, D, E, F
    if which == "N":
        return N, L, M, E, F, D
    if which == "M":
        return M, N, L, F, D, E
    raise ValueError(f"which must be L, M or N, got {which!r}")


def s_closed(inv: FourQubitInvariants, which: str = "L") -> tuple:
    H = inv.H
    L, M, N, D, E, _ = _cycled(inv, which)
    return tuple(simplify(v) for v in (2 * H, H * H + 2 * (M - N), 2 * (D + E), L * L))


def half_trace_closed(inv: FourQubitInvariants, p: int, which: str = "L"):
    """1/2 Tr R^p for p = 1..6 as a polynomial in H, L, M, N, D, E (cycled for M, N)."""
    H = inv.H
    L, M, N, D, E, _ = _cycled(inv, which)
    a = N - M
    b = D + E
    if p == 1:
        v = H
    elif p == 2:
        v = H ** 2 + 2 * a
    elif p == 3:
        v = H ** 3 + 6 * H * a + 3 * b
    elif p == 4:
        v = H ** 4 + 12 * H ** 2 * a + 8 * H * b + 4 * a ** 2 - 2 * L ** 2
    elif p == 5:
        v = H ** 5 + 20 * H ** 3 * a + 15 * H ** 2 * b - 5 * H * L ** 2 + 20 * H * a ** 2 + 10 * b * a
    elif p == 6:
        v = (H ** 6 + 30 * H ** 4 * a + 24 * H ** 3 * b - 9 * H ** 2 * L ** 2 + 60 * H ** 2 * a ** 2
             + 48 * H * b * a + 6 * b ** 2 + 8 * a ** 3 - 6 * L ** 2 * a)
    else:
        raise ValueError(f"closed form known for p = 1..6, got {p}")
    return simplify(v)


def g_invariants(q: QubitState, orders: Iterable[int] = G_ORDERS) -> dict[int, object]:
    """g_{2p} = 1/2 sum over the six blocks of Tr R_ab^p, keyed by p."""
    _need_four(q)
    orders = sorted(set(orders))
    total = {p_: 0 for p_ in orders}
    for R in blocks_from_lmn(q).values():
        for p_, t in linalg.power_traces(R, orders).items():
            total[p_] = total[p_] + t
    return {p_: simplify(v * Fraction(1, 2)) for p_, v in total.items()}


def g_closed(inv: FourQubitInvariants) -> dict[int, object]:
    """g_2 .. g_12 in terms of H, Gamma, Sigma, Pi, keyed by p."""
    H, G, S, P = inv.H, inv.GammaInv, inv.Sigma, inv.Pi
    out = {
        1: 6 * H,
        2: 6 * H ** 2,
        3: 6 * H ** 3 + 12 * G,
        4: 6 * H ** 4 + 32 * H * G + 20 * S,
        5: 6 * H ** 5 + 90 * H * S + 60 * H ** 2 * G,
        6: 6 * H ** 6 + 96 * H ** 3 * G + 250 * H ** 2 * S + 16 * G ** 2 - 60 * P,
    }
    return {k: simplify(v) for k, v in out.items()}


def g10_syzygy_residual(g: dict) -> object:
    """2^5 3^4 g_10 - (7 g_2^5 + 2^3 3^5 g_2 g_8 - 2^3 7 9 g_2^2 g_6); zero when the syzygy holds."""
    lhs = 2 ** 5 * 3 ** 4 * g[5]
    rhs = 7 * g[1] ** 5 + 2 ** 3 * 3 ** 5 * g[1] * g[4] - 2 ** 3 * 7 * 9 * g[1] ** 2 * g[3]
    return simplify(lhs - rhs)


def f_prime_invariants(q: QubitState, orders: Iterable[int] = G_ORDERS) -> dict[int, object]:
    """Tr of powers of the 28x28 matrix built from the embedded spinor."""
    _need_four(q)
    return linalg.power_traces(katanova_28(embed_single(q)), list(orders))


# ---------------------------------------------------------------------------
# fermionic trace invariants


def pair_traces(R: PairMatrix, orders: Iterable[int], pairs: str = "unordered") -> dict[int, object]:
    orders = list(orders)
    if pairs == "unordered":
        return linalg.power_traces(R.restricted()[1], orders)
    if pairs == "ordered":
        return R.unrestricted_traces(orders)
    raise ValueError(f"pairs must be one of {PAIR_CONVENTIONS}, got {pairs!r}")


def sl8_trace_invariants(psi: FockState, orders: Iterable[int] = SL8_ORDERS, pairs: str = "unordered") -> dict[int, object]:
    """I_{2p}: chained contraction of R^{ij}_{kl} over N = 8 modes, keyed by p."""
    if psi.modes != 8:
        raise ValueError(f"sl8 invariants need 8 modes, got {psi.modes}")
    if {m.bit_count() for m, _ in psi.items()} - {4}:
        raise ValueError("sl8 invariants need a four-particle state")
    return pair_traces(four_fermion_r(psi), orders, pairs)


def spin16_invariants(psi: FockState, orders: Iterable[int] = SPIN16_ORDERS, pairs: str = "unordered") -> dict[int, object]:
    """The Spin(16) invariants from R^{IJ}_{KL} over all 16 indices, keyed by p."""
    if psi.modes != 8:
        raise ValueError(f"spin16 invariants need 8 modes, got {psi.modes}")
    if chirality(psi) == Chirality.MIXED:
        raise ValueError("spin16 invariants need a Weyl spinor")
    return pair_traces(r_tensor(psi), orders, pairs)


__all__ = [
    "FourQubitInvariants", "InvariantReport", "inner4", "h_invariant", "gram_s3",
    "fourqubit_invariants", "block_power_traces", "newton_from_traces", "char_poly_s",
    "s_closed", "half_trace_closed", "g_invariants", "g_closed", "g10_syzygy_residual",
    "f_prime_invariants", "pair_traces", "sl8_trace_invariants", "spin16_invariants",
    "quadratic_form", "SL8_ORDERS", "SPIN16_ORDERS", "G_ORDERS",
]
