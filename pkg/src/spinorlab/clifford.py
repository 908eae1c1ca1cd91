"""Gamma operators, chirality, and the spin-group actions on Fock states."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from . import linalg
from .fock import FockState, LadderWord, apply_ladder, apply_word, mask_of, n, p, word


def gamma_apply(I: int, state: FockState) -> FockState:
    """Gamma_i = p^i + n_i and Gamma_{i+N} = p^i - n_i, for I in 1..2N."""
    N = state.modes
    if not 1 <= I <= 2 * N:
        raise ValueError(f"gamma index {I} outside 1..{2 * N}")
    if I <= N:
        return apply_ladder(p(I), state) + apply_ladder(n(I), state)
    i = I - N
    return apply_ladder(p(i), state) - apply_ladder(n(i), state)


def gamma_word(indices: Sequence[int], state: FockState) -> FockState:
    """Gamma_{I1} Gamma_{I2} ... applied to state (rightmost first)."""
    for I in reversed(indices):
        state = gamma_apply(I, state)
    return state


def grading(state: FockState) -> FockState:
    """The chirality operator (-1)^{N(N-1)/2} Gamma_1 ... Gamma_{2N}.

    It acts as (-1)^popcount on monomials; product only over Gamma_1..Gamma_N
    would flip every mode and is not the grading.
    """
    N = state.modes
    out = gamma_word(list(range(1, 2 * N + 1)), state)
    return -out if (N * (N - 1) // 2) % 2 else out


class Chirality(Enum):
    POSITIVE = 1
    NEGATIVE = -1
    MIXED = "mixed"
    ZERO = "zero"


def chirality(state: FockState) -> Chirality:
    parities = {m.bit_count() & 1 for m, _ in state.items()}
    if not parities:
        return Chirality.ZERO
    if parities == {0}:
        return Chirality.POSITIVE
    if parities == {1}:
        return Chirality.NEGATIVE
    return Chirality.MIXED


def is_weyl(state: FockState) -> bool:
    return chirality(state) in (Chirality.POSITIVE, Chirality.NEGATIVE)


def _square(M, N: int, name: str) -> tuple[tuple, ...]:
    rows = tuple(tuple(r) for r in M)
    if len(rows) != N or any(len(r) != N for r in rows):
        raise ValueError(f"{name} must be {N}x{N}")
    return rows


def _check_antisymmetric(M, name: str) -> None:
    for i, r in enumerate(M):
        for j, x in enumerate(r):
            if x != -M[j][i]:
                raise ValueError(f"{name} is not antisymmetric at ({i + 1},{j + 1})")


def zero_matrix(N: int) -> tuple[tuple, ...]:
    return tuple((0,) * N for _ in range(N))


@dataclass(frozen=True)
class SpinGenerator:
    """s = 1/2 A_i^j [p^i, n_j] + 1/2 B_ij p^i p^j + 1/2 C^ij n_i n_j.

    A[i][j] multiplies p^{i+1} n_{j+1}; B and C must be antisymmetric.
    """

    A: tuple
    B: tuple
    C: tuple

    def __post_init__(self):
        N = len(self.A)
        object.__setattr__(self, "A", _square(self.A, N, "A"))
        object.__setattr__(self, "B", _square(self.B, N, "B"))
        object.__setattr__(self, "C", _square(self.C, N, "C"))
        _check_antisymmetric(self.B, "B")
        _check_antisymmetric(self.C, "C")

    @property
    def modes(self) -> int:
        return len(self.A)

    @classmethod
    def from_parts(cls, N: int, A=None, B=None, C=None) -> "SpinGenerator":
        z = zero_matrix(N)
        return cls(A if A is not None else z, B if B is not None else z, C if C is not None else z)


def generator_words(s: SpinGenerator) -> list[LadderWord]:
    """s as a sum of normal-ordered words, the -1/2 Tr A constant included."""
    N = s.modes
    words = []
    trace = 0
    for i in range(N):
        for j in range(N):
            a = s.A[i][j]
            if a:
                words.append(word(p(i + 1), n(j + 1), coeff=a))
        trace = trace + s.A[i][i]
    if trace:
        words.append(LadderWord(-Fraction(1, 2) * trace, ()))
    for i, j in combinations(range(N), 2):
        if s.B[i][j]:
            words.append(word(p(i + 1), p(j + 1), coeff=s.B[i][j]))
        if s.C[i][j]:
            words.append(word(n(i + 1), n(j + 1), coeff=s.C[i][j]))
    return words


def apply_generator(s: SpinGenerator, state: FockState) -> FockState:
    if s.modes != state.modes:
        raise ValueError(f"generator acts on {s.modes} modes, state has {state.modes}")
    out = FockState(state.modes)
    for w in generator_words(s):
        out = out + apply_word(w, state)
    return out


def _pair_words(M, kind) -> list[LadderWord]:
    N = len(M)
    return [word(kind(i + 1), kind(j + 1), coeff=M[i][j]) for i, j in combinations(range(N), 2) if M[i][j]]


def _exp_nilpotent(words: list[LadderWord], state: FockState) -> FockState:
    """sum_k X^k psi / k! for X = sum(words); terminates because X shifts particle number by 2."""
    total = state
    term = state
    k = 1
    while not term.is_zero():
        nxt = FockState(state.modes)
        for w in words:
            nxt = nxt + apply_word(w, term)
        term = nxt.scale(Fraction(1, k)) if k > 1 else nxt
        total = total + term
        k += 1
        if k > state.modes + 2:
            raise RuntimeError("exponential series failed to terminate")
    return total


def b_transform(B, state: FockState) -> FockState:
    """exp(1/2 B_ij p^i p^j) |psi>."""
    B = _square(B, state.modes, "B")
    _check_antisymmetric(B, "B")
    return _exp_nilpotent(_pair_words(B, p), state)


def c_transform(C, state: FockState) -> FockState:
    """exp(1/2 C^ij n_i n_j) |psi>."""
    C = _square(C, state.modes, "C")
    _check_antisymmetric(C, "C")
    return _exp_nilpotent(_pair_words(C, n), state)


def gl_sector_transform(S, state: FockState) -> FockState:
    """psi'_{j1..jk} = S_{j1}^{i1} ... S_{jk}^{ik} psi_{i1..ik} for Det S = 1.

    S[j][i] is the coefficient of p^{j+1} in the image of p^{i+1}.  On ascending
    amplitudes the k-fold contraction is a sum of k x k minors.
    """
    N = state.modes
    S = _square(S, N, "S")
    if linalg.det([list(r) for r in S]) != 1:
        raise ValueError("gl_sector_transform needs Det S = 1 exactly")
    ks = {m.bit_count() for m, _ in state.items()}
    if len(ks) > 1:
        raise ValueError("state must be homogeneous in particle number")
    if not ks:
        return state
    k = ks.pop()
    if k == 0:
        return state
    out = {}
    for J in combinations(range(N), k):
        total = 0
        for m, c in state.items():
            Iset = [i for i in range(N) if m >> i & 1]
            minor = linalg.det([[S[j][i] for i in Iset] for j in J])
            if minor:
                total = total + minor * c
        if total != 0:
            out[mask_of(j + 1 for j in J)] = total
    return FockState(N, out)


def so_matrix(s: SpinGenerator) -> list[list]:
    """Matrix s with [s_hat, e_K] = e_I s^I_K in the basis e = (n_1..n_N, p^1..p^N).

    Block form [[-A^T, C], [B, A]]; with the basis reordered as (p, n) it is the
    familiar [[A, B], [C, -A^T]].
    """
    N = s.modes
    M = linalg.zeros(2 * N)
    for i in range(N):
        for k in range(N):
            M[i][k] = -s.A[k][i]
            M[i][k + N] = s.C[i][k]
            M[i + N][k] = s.B[i][k]
            M[i + N][k + N] = s.A[i][k]
    return M


def exp_nilpotent_matrix(M: list[list]) -> list[list]:
    """exp(M) for nilpotent M by the terminating series."""
    n_ = len(M)
    total = linalg.identity(n_)
    term = linalg.identity(n_)
    for k in range(1, n_ + 1):
        term = linalg.scale(linalg.matmul(term, M), Fraction(1, k))
        if all(x == 0 for r in term for x in r):
            return total
        total = linalg.add(total, term)
    raise ValueError("matrix is not nilpotent")
