"""Annihilator subspaces, nullity, and the pure-spinor test."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .clifford import b_transform
from .covariants import e_low
from .fock import FockState, apply_ladder


@dataclass(frozen=True)
class AnnihilatorBasis:
    """Vectors x over (n_1..n_N, p^1..p^N) with x_hat psi = 0."""

    modes: int
    vectors: tuple

    @property
    def nullity(self) -> int:
        return len(self.vectors)


def _column(state: FockState) -> list:
    return [state.coeff(m) for m in range(1 << state.modes)]


def annihilator_basis(psi: FockState) -> AnnihilatorBasis:
    if psi.is_zero():
        raise ValueError("annihilator subspace of the zero state is not defined")
    N = psi.modes
    cols = [_column(apply_ladder(e_low(I, N), psi)) for I in range(1, 2 * N + 1)]
    # drop rows that vanish in every column before eliminating
    rows = [list(r) for r in zip(*cols) if any(x != 0 for x in r)]
    if not rows:
        basis = linalg.identity(2 * N)
    else:
        basis = linalg.nullspace(rows, 2 * N)
    return AnnihilatorBasis(N, tuple(tuple(v) for v in basis))


def isotropy_form(x, y, N: int):
    """g(x, y) = sum_i x_i y_{i+N} + x_{i+N} y_i."""
    total = 0
    for i in range(N):
        total = total + x[i] * y[i + N] + x[i + N] * y[i]
    return total


def nullity(psi: FockState) -> int:
    return annihilator_basis(psi).nullity


def is_pure_spinor(psi: FockState) -> bool:
    return nullity(psi) == psi.modes


def _rand_rational(rng: random.Random, size: int = 5) -> Fraction:
    num = rng.randint(-size, size)
    return Fraction(num, rng.randint(1, size))


def random_pure_spinor(N: int, k: int, seed: int) -> FockState:
    """lambda exp(B) p^1 ... p^k |0> with seeded random rational lambda and B."""
    if not 1 <= N <= 16 or not 0 <= k <= N:
        raise ValueError(f"need 1 <= N <= 16 and 0 <= k <= N, got N={N}, k={k}")
    rng = random.Random(seed)
    lam = Fraction(0)
    while lam == 0:
        lam = _rand_rational(rng)
    B = linalg.zeros(N)
    for i in range(N):
        for j in range(i + 1, N):
            v = _rand_rational(rng)
            B[i][j] = v
            B[j][i] = -v
    slater = FockState.monomial(N, range(1, k + 1)).scale(lam)
    return b_transform(B, slater)
