"""Occupation-number basis, sparse Fock states and ladder operators.

Mode i (1-based) is bit i-1 of the mask.  A mask stands for the ascending
product p^{i1} p^{i2} ... p^{ik}|0> with i1 < i2 < ... < ik, so the stored
coefficient of a mask is the antisymmetric amplitude with ascending indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping

from .scalars import conj

MAX_MODES = 16


def _check_modes(N: int) -> None:
    if not isinstance(N, int) or not 1 <= N <= MAX_MODES:
        raise ValueError(f"mode count must be in 1..{MAX_MODES}, got {N!r}")


def mask_of(occupied: Iterable[int]) -> int:
    m = 0
    for i in occupied:
        m |= 1 << (i - 1)
    return m


def occupied(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def overline(i: int, n: int) -> int:
    """i -> i+n and back; the barred modes of n boxes live at n+1..2n."""
    if not 1 <= i <= 2 * n:
        raise ValueError(f"mode {i} outside 1..{2 * n}")
    return i + n if i <= n else i - n


class FockState:
    """Immutable sparse vector: mask -> nonzero scalar, over ``modes`` modes."""

    __slots__ = ("modes", "_terms")

    def __init__(self, modes: int, terms: Mapping[int, object] | None = None):
        _check_modes(modes)
        limit = 1 << modes
        clean = {}
        for mask, c in (terms or {}).items():
            if not 0 <= mask < limit:
                raise ValueError(f"mask {mask:#b} does not fit {modes} modes")
            if c != 0:
                clean[mask] = c
        object.__setattr__(self, "modes", modes)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("FockState is immutable")

    @classmethod
    def monomial(cls, modes: int, occ: Iterable[int], coeff=1) -> "FockState":
        occ = tuple(occ)
        if len(set(occ)) != len(occ) or any(not 1 <= i <= modes for i in occ):
            raise ValueError(f"bad occupation list {occ} for {modes} modes")
        # the coefficient multiplies the ascending product, whatever order was given
        return cls(modes, {mask_of(occ): coeff})

    @property
    def terms(self) -> dict[int, object]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, mask: int):
        return self._terms.get(mask, 0)

    def __getitem__(self, occ) -> object:
        if isinstance(occ, int):
            return self.coeff(occ)
        return self.coeff(mask_of(occ))

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def _same(self, other: "FockState") -> None:
        if not isinstance(other, FockState):
            raise TypeError("expected a FockState")
        if other.modes != self.modes:
            raise ValueError(f"mode-count mismatch: {self.modes} vs {other.modes}")

    def __add__(self, other: "FockState") -> "FockState":
        self._same(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return FockState(self.modes, out)

    def __sub__(self, other: "FockState") -> "FockState":
        return self + (-other)

    def __neg__(self) -> "FockState":
        return FockState(self.modes, {m: -c for m, c in self._terms.items()})

    def scale(self, c) -> "FockState":
        if c == 0:
            return FockState(self.modes)
        return FockState(self.modes, {m: c * v for m, v in self._terms.items()})

    def __mul__(self, c) -> "FockState":
        if isinstance(c, FockState):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, FockState):
            return NotImplemented
        return self.modes == other.modes and self._terms == other._terms

    def __hash__(self):
        return hash((self.modes, frozenset(self._terms.items())))

    def __repr__(self):
        if not self._terms:
            return f"FockState({self.modes}, 0)"
        parts = [f"{c}*{list(occupied(m))}" for m, c in sorted(self._terms.items())]
        return f"FockState({self.modes}, " + " + ".join(parts) + ")"


def zero(N: int) -> FockState:
    return FockState(N)


def vacuum(N: int) -> FockState:
    _check_modes(N)
    return FockState(N, {0: 1})


def top(N: int) -> FockState:
    _check_modes(N)
    return FockState(N, {(1 << N) - 1: 1})


class Kind(Enum):
    CREATE = "p"
    ANNIHILATE = "n"


@dataclass(frozen=True)
class LadderOp:
    kind: Kind
    mode: int

    def __str__(self):
        return f"{self.kind.value}{self.mode}"


def p(i: int) -> LadderOp:
    return LadderOp(Kind.CREATE, i)


def n(i: int) -> LadderOp:
    return LadderOp(Kind.ANNIHILATE, i)


@dataclass(frozen=True)
class LadderWord:
    """coeff * factors[0] factors[1] ... ; the rightmost factor acts first."""

    coeff: object = 1
    factors: tuple[LadderOp, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))


def word(*ops: LadderOp, coeff=1) -> LadderWord:
    return LadderWord(coeff, ops)


def ladder_sign(mask: int, i: int) -> int:
    """(-1)^(number of occupied modes below i)."""
    return -1 if (mask & ((1 << (i - 1)) - 1)).bit_count() & 1 else 1


def apply_ladder(op: LadderOp, state: FockState) -> FockState:
    N = state.modes
    i = op.mode
    if not 1 <= i <= N:
        raise ValueError(f"mode {i} out of range 1..{N}")
    bit = 1 << (i - 1)
    low = bit - 1
    out = {}
    if op.kind is Kind.CREATE:
        for m, c in state.items():
            if not m & bit:
                out[m | bit] = -c if (m & low).bit_count() & 1 else c
    else:
        for m, c in state.items():
            if m & bit:
                out[m ^ bit] = -c if (m & low).bit_count() & 1 else c
    return FockState(N, out)


def apply_word(w: LadderWord, state: FockState) -> FockState:
    for op in reversed(w.factors):
        state = apply_ladder(op, state)
        if state.is_zero():
            break
    return state.scale(w.coeff) if w.coeff != 1 else state


def apply_words(words: Iterable[LadderWord], state: FockState) -> FockState:
    """Apply a sum of words."""
    out = FockState(state.modes)
    for w in words:
        out = out + apply_word(w, state)
    return out


def particle_sectors(state: FockState) -> dict[int, FockState]:
    buckets: dict[int, dict[int, object]] = {}
    for m, c in state.items():
        buckets.setdefault(m.bit_count(), {})[m] = c
    return {k: FockState(state.modes, t) for k, t in sorted(buckets.items())}


def hermitian_inner(a: FockState, b: FockState) -> object:
    if a.modes != b.modes:
        raise ValueError(f"mode-count mismatch: {a.modes} vs {b.modes}")
    if len(a) > len(b):
        total = 0
        for m, c in b.items():
            if m in a._terms:
                total = total + conj(a._terms[m]) * c
        return total
    total = 0
    for m, c in a.items():
        if m in b._terms:
            total = total + conj(c) * b._terms[m]
    return total
