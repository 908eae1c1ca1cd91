"""n-qubit amplitudes <-> Fock states for single, double and mixed box occupancy."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Sequence

from . import linalg
from .clifford import Chirality, chirality, gamma_word
from .fock import FockState, LadderWord, apply_word, mask_of, occupied, p, vacuum


@dataclass(frozen=True)
class QubitState:
    """Amplitudes psi_{mu1..mun}; mu1 is the most significant bit of the index."""

    n: int
    amps: tuple

    def __post_init__(self):
        if not 1 <= self.n <= 4:
            raise ValueError(f"qubit count must be 1..4, got {self.n}")
        amps = tuple(self.amps)
        if len(amps) != 1 << self.n:
            raise ValueError(f"expected {1 << self.n} amplitudes, got {len(amps)}")
        object.__setattr__(self, "amps", amps)

    def __getitem__(self, bits: Sequence[int]):
        return self.amps[index_of(bits)]

    def scale(self, c) -> "QubitState":
        return QubitState(self.n, tuple(c * a for a in self.amps))

    @classmethod
    def basis(cls, bits: Sequence[int], coeff=1) -> "QubitState":
        n_ = len(bits)
        amps = [0] * (1 << n_)
        amps[index_of(bits)] = coeff
        return cls(n_, tuple(amps))


def index_of(bits: Sequence[int]) -> int:
    k = 0
    for b in bits:
        k = 2 * k + b
    return k


def bits_of(index: int, n: int) -> tuple[int, ...]:
    return tuple(index >> (n - 1 - k) & 1 for k in range(n))


def _box_modes(bits: Sequence[int]) -> tuple[int, ...]:
    n = len(bits)
    return tuple(k + 1 + n * b for k, b in enumerate(bits))


def _single_image(bits: Sequence[int]) -> tuple[int, int]:
    """(mask, sign) with p^{a1}...p^{an}|0> = sign * monomial(mask)."""
    modes = _box_modes(bits)
    st = apply_word(LadderWord(1, tuple(p(a) for a in modes)), vacuum(2 * len(bits)))
    ((mask, sign),) = st.items()
    return mask, sign


def embed_single(q: QubitState) -> FockState:
    out = {}
    for idx, a in enumerate(q.amps):
        if a != 0:
            mask, sign = _single_image(bits_of(idx, q.n))
            out[mask] = a if sign > 0 else -a
    return FockState(2 * q.n, out)


def _pattern_gammas(pattern: Sequence[int]) -> list[int]:
    return [k + 1 for k, b in enumerate(pattern) if b]


def _check_pattern(pattern: Sequence[int], n: int) -> tuple[int, ...]:
    pattern = tuple(int(b) for b in pattern)
    if len(pattern) != n or any(b not in (0, 1) for b in pattern):
        raise ValueError(f"pattern must be {n} bits, got {pattern}")
    return pattern


def embed_pattern(q: QubitState, pattern: Sequence[int]) -> FockState:
    """Gamma_1^{mu1} ... Gamma_n^{mun} applied to the single-occupancy image."""
    pattern = _check_pattern(pattern, q.n)
    return gamma_word(_pattern_gammas(pattern), embed_single(q))


class SupportError(ValueError):
    def __init__(self, masks):
        self.masks = sorted(masks)
        shown = ", ".join(str(list(occupied(m))) for m in self.masks[:8])
        super().__init__(f"state has support outside the pattern subspace: {shown}")


def extract_qubit(state: FockState, pattern: Sequence[int]) -> QubitState:
    if state.modes % 2 or not 1 <= state.modes // 2 <= 4:
        raise ValueError(f"need 2n modes with n in 1..4, got {state.modes}")
    n_ = state.modes // 2
    pattern = _check_pattern(pattern, n_)
    # Gamma_k squares to one, so the inverse is the reversed product
    single = gamma_word(list(reversed(_pattern_gammas(pattern))), state)
    table = {}
    for idx in range(1 << n_):
        mask, sign = _single_image(bits_of(idx, n_))
        table[mask] = (idx, sign)
    flip = mask_of(_pattern_gammas(pattern))
    stray = [m ^ flip for m, _ in single.items() if m not in table]
    if stray:
        raise SupportError(stray)
    amps = [0] * (1 << n_)
    for m, c in single.items():
        idx, sign = table[m]
        amps[idx] = c if sign > 0 else -c
    return QubitState(n_, tuple(amps))


def pattern_chirality(n_: int, pattern: Sequence[int]) -> Chirality:
    """Sector of the image: n particles, shifted by one per Gamma."""
    return Chirality.POSITIVE if (n_ + sum(pattern)) % 2 == 0 else Chirality.NEGATIVE


def pattern_monomials(n_: int, pattern: Sequence[int]) -> set[int]:
    flip = mask_of(_pattern_gammas(pattern))
    return {_single_image(bits_of(i, n_))[0] ^ flip for i in range(1 << n_)}


# ---------------------------------------------------------------------------
# three-qubit mirror map

_LABELS = ("1", "2", "3", "1b", "2b", "3b")


def _lab(*modes: int) -> str:
    return "".join(_LABELS[m - 1] + "," for m in modes).rstrip(",")


def _eps_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation sorting seq (0 if repeated)."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0
    s = 1
    for a, b in combinations(range(len(seq)), 2):
        if seq[a] > seq[b]:
            s = -s
    return s


def three_qubit_coordinates(state: FockState) -> dict[str, object]:
    """Read U_i, Z_ijk, W^i (odd part) and eta, Y_ij, X^ij, xi (even part) off a 6-mode state.

    Conventions: psi_- = U_i p^i + 1/3! Z_ijk p^ijk + 1/5! W^i eps_ijklmn p^jklmn,
    psi_+ = eta + 1/2 Y_ij p^ij + 1/(2!4!) X^ij eps_ijklmn p^klmn + xi p^123456,
    eps_123456 = +1.  Labels use 1,2,3,1b,2b,3b for modes 1..6.
    """
    if state.modes != 6:
        raise ValueError("three-qubit coordinates need 6 modes")
    out: dict[str, object] = {}
    full = (1 << 6) - 1
    for m, c in state.items():
        occ = occupied(m)
        k = len(occ)
        if k == 1:
            out["U_" + _lab(*occ)] = c
        elif k == 3:
            out["Z_" + _lab(*occ)] = c
        elif k == 5:
            (i,) = occupied(full ^ m)
            # coefficient of the ascending monomial is W^i eps_{i, rest}
            out["W^" + _lab(i)] = c * _eps_sign((i,) + occ)
        elif k == 0:
            out["eta"] = c
        elif k == 6:
            out["xi"] = c
        elif k == 2:
            out["Y_" + _lab(*occ)] = c
        elif k == 4:
            i, j = occupied(full ^ m)
            out["X^" + _lab(i, j)] = c * _eps_sign((i, j) + occ)
    return out


def mirror_three_qubit(state: FockState, direction: str = "forward") -> FockState:
    """Gamma_1 Gamma_2 Gamma_3 |psi> (forward, psi odd) or its inverse (psi even)."""
    if state.modes != 6:
        raise ValueError(f"mirror map needs 6 modes, got {state.modes}")
    ch = chirality(state)
    if direction == "forward":
        if ch not in (Chirality.NEGATIVE, Chirality.ZERO):
            raise ValueError("forward mirror map expects a negative-chirality state")
        return gamma_word([1, 2, 3], state)
    if direction == "inverse":
        if ch not in (Chirality.POSITIVE, Chirality.ZERO):
            raise ValueError("inverse mirror map expects a positive-chirality state")
        return gamma_word([3, 2, 1], state)
    raise ValueError(f"unknown direction {direction!r}")


def _odd_basis() -> list[tuple[str, FockState]]:
    out = []
    for k in (1, 3, 5):
        for occ in combinations(range(1, 7), k):
            st = FockState.monomial(6, occ)
            ((label, c),) = three_qubit_coordinates(st).items()
            # normalise so the labelled amplitude equals one
            out.append((label, st.scale(c)))
    return out


def mirror_table() -> dict[str, tuple[int, str]]:
    """output amplitude label -> (sign, input label) for the forward mirror map."""
    table = {}
    for label, st in _odd_basis():
        image = three_qubit_coordinates(mirror_three_qubit(st))
        ((out_label, c),) = image.items()
        table[out_label] = (int(c), label)
    return table


# ---------------------------------------------------------------------------
# qubit-level SLOCC


def qubit_slocc_apply(q: QubitState, locals_: Sequence, perm: Sequence[int] | None = None) -> QubitState:
    """Permute tensor legs (new leg k is old leg perm[k], 0-based), then apply A_1 x ... x A_n."""
    n_ = q.n
    if len(locals_) != n_:
        raise ValueError(f"need {n_} local matrices")
    for A in locals_:
        if len(A) != 2 or any(len(r) != 2 for r in A):
            raise ValueError("local operators must be 2x2")
        if linalg.det([list(r) for r in A]) != 1:
            raise ValueError("local operators must have unit determinant")
    perm = tuple(range(n_)) if perm is None else tuple(perm)
    if sorted(perm) != list(range(n_)):
        raise ValueError(f"not a permutation: {perm}")
    permuted = [0] * (1 << n_)
    for idx in range(1 << n_):
        bits = bits_of(idx, n_)
        permuted[index_of([bits[perm[k]] for k in range(n_)])] = q.amps[idx]
    amps = permuted
    for k, A in enumerate(locals_):
        nxt = [0] * (1 << n_)
        for idx in range(1 << n_):
            a = amps[idx]
            if a == 0:
                continue
            bits = list(bits_of(idx, n_))
            nu = bits[k]
            for mu in (0, 1):
                if A[mu][nu] != 0:
                    bits[k] = mu
                    j = index_of(bits)
                    nxt[j] = nxt[j] + A[mu][nu] * a
        amps = nxt
    return QubitState(n_, tuple(amps))


def all_patterns(n_: int) -> list[tuple[int, ...]]:
    return list(product((0, 1), repeat=n_))

