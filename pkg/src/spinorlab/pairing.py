"""Spin-invariant bilinear form, word transposition, spin flip, Majorana test."""

from __future__ import annotations

from functools import lru_cache

from .fock import FockState, LadderWord
from .scalars import close, conj, is_exact


def pairing_symmetry(N: int) -> int:
    """(psi, phi) = sign * (phi, psi) with sign = (-1)^{N(N-1)/2}."""
    return -1 if (N * (N - 1) // 2) % 2 else 1


def transpose_word(w: LadderWord) -> LadderWord:
    return LadderWord(w.coeff, tuple(reversed(w.factors)))


@lru_cache(maxsize=None)
def top_signs(N: int) -> tuple[int, ...]:
    """sign[I] such that (a, b) = sum_I sign[I] a_I b_{complement(I)}.

    Reversing the k factors of a monomial costs (-1)^{k(k-1)/2}; merging I with
    its complement into ascending order costs one sign per inversion.
    """
    signs = []
    for mask in range(1 << N):
        k = mask.bit_count()
        inversions = 0
        below = 0
        for a in range(N):
            if mask >> a & 1:
                inversions += a - below
                below += 1
        e = k * (k - 1) // 2 + inversions
        signs.append(-1 if e & 1 else 1)
    return tuple(signs)


def mukai(a: FockState, b: FockState):
    if a.modes != b.modes:
        raise ValueError(f"mode-count mismatch: {a.modes} vs {b.modes}")
    N = a.modes
    full = (1 << N) - 1
    signs = top_signs(N)
    bt = b._terms
    total = 0
    for m, c in a.items():
        other = bt.get(full ^ m)
        if other is not None:
            t = c * other
            total = total - t if signs[m] < 0 else total + t
    return total


def quadratic_form(state: FockState):
    """(psi, psi)."""
    return mukai(state, state)


def spin_flip(state: FockState) -> FockState:
    """The state psi~ with <psi~|phi> = (psi, phi) for every phi."""
    N = state.modes
    full = (1 << N) - 1
    signs = top_signs(N)
    out = {}
    for m, c in state.items():
        cc = conj(c)
        out[full ^ m] = -cc if signs[m] < 0 else cc
    return FockState(N, out)


def is_majorana(state: FockState) -> bool:
    flipped = spin_flip(state)
    exact = all(is_exact(c) for _, c in state.items())
    if exact:
        return flipped == state
    masks = set(flipped.terms) | set(state.terms)
    return all(close(flipped.coeff(m), state.coeff(m)) for m in masks)
