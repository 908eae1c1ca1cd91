"""Seeded verification batteries behind ``spinorlab verify``.

Each suite returns a list of Check records.  A failing check keeps the state
that broke it so the CLI can serialise it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Callable

from . import linalg
from .classify import annihilator_basis, is_pure_spinor, isotropy_form, random_pure_spinor
from .clifford import b_transform, c_transform, chirality, Chirality, gamma_apply, grading
from .covariants import (
    BLOCK_PAIRS, blocks_28, blocks_from_lmn, four_fermion_r, katanova_28, r_blocks, rho_tensor,
)
from .embed import (
    QubitState, all_patterns, bits_of, embed_pattern, embed_single, extract_qubit, index_of,
    mirror_table, mirror_three_qubit, pattern_chirality, pattern_monomials, qubit_slocc_apply,
)
from .fock import FockState, LadderWord, apply_ladder, apply_word, mask_of, n, p, vacuum
from .invariants import (
    block_power_traces, char_poly_s, f_prime_invariants, fourqubit_invariants, g10_syzygy_residual,
    g_closed, g_invariants, half_trace_closed, s_closed, sl8_trace_invariants, spin16_invariants,
)
from .pairing import is_majorana, mukai, pairing_symmetry, spin_flip, transpose_word
from .roots import (
    G_state, Pi_2p, e_state, f_closed, headline_rhs, jacobian_rank, omega, pi_2p,
    semialtern_state, semisimple_qubit_state, spin16_invariants_fast, spin16_jacobian, wallach_f,
    wallach_g, x_of_y, x_of_y4, y_of_x, y_of_x4,
)
from .scalars import GaussianRational, conj

SUITES = ("car", "pairing", "embeddings", "fourqubit-identities", "roots", "e8", "classify")


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    state: FockState | None = None


class Battery:
    """Collects checks; ``record`` keeps only the first failing state per name."""

    def __init__(self):
        self.checks: dict[str, Check] = {}
        self.counts: dict[str, list[int]] = {}

    def record(self, name: str, ok: bool, detail: str = "", state: FockState | None = None) -> None:
        c = self.counts.setdefault(name, [0, 0])
        c[0] += 1
        if ok:
            c[1] += 1
        if name not in self.checks:
            self.checks[name] = Check(name, True, "")
        if not ok and self.checks[name].passed:
            self.checks[name] = Check(name, False, detail, state)

    def result(self) -> list[Check]:
        out = []
        for name, chk in self.checks.items():
            total, good = self.counts[name]
            summary = f"{good}/{total}"
            out.append(Check(name, chk.passed, summary + (f"; {chk.detail}" if chk.detail else ""), chk.state))
        return out


# ---------------------------------------------------------------------------
# random inputs


def rand_rational(rng: random.Random, size: int = 4) -> Fraction:
    return Fraction(rng.randint(-size, size), rng.randint(1, size))


def rand_gauss(rng: random.Random, size: int = 4):
    return GaussianRational(rand_rational(rng, size), rand_rational(rng, size))


def rand_state(rng: random.Random, N: int, terms: int = 12, parity: int | None = None, real: bool = False) -> FockState:
    masks = range(1 << N)
    if parity is not None:
        masks = [m for m in masks if m.bit_count() % 2 == parity]
    masks = list(masks)
    chosen = rng.sample(masks, min(terms, len(masks)))
    gen = rand_rational if real else rand_gauss
    return FockState(N, {m: gen(rng) for m in chosen})


def rand_qubit(rng: random.Random, n_: int = 4, real: bool = False) -> QubitState:
    gen = rand_rational if real else rand_gauss
    return QubitState(n_, tuple(gen(rng) for _ in range(1 << n_)))


def rand_antisym(rng: random.Random, N: int) -> list[list]:
    M = linalg.zeros(N)
    for i, j in combinations(range(N), 2):
        v = rand_rational(rng)
        M[i][j], M[j][i] = v, -v
    return M


def rand_sl2(rng: random.Random) -> list[list]:
    """A random unit-determinant 2x2 rational matrix."""
    while True:
        a, b, c = (rand_rational(rng) for _ in range(3))
        if a != 0:
            return [[a, b], [c, (1 + b * c) / a]]


# ---------------------------------------------------------------------------
# dense-matrix oracle for the ladder operators


def _dense_ladder(N: int, mode: int, create: bool) -> list[list[int]]:
    """Jordan-Wigner matrix on basis index = occupation mask (bit k <-> mode k+1)."""
    a = [[0, 0], [1, 0]] if create else [[0, 1], [0, 0]]
    Z = [[1, 0], [0, -1]]
    Id = [[1, 0], [0, 1]]
    M = [[1]]
    # the most significant factor is mode N
    for k in range(N, 0, -1):
        M = linalg.kron(M, a if k == mode else (Z if k < mode else Id))
    return M


def _dense_gamma(N: int, I: int) -> list[list[int]]:
    if I <= N:
        return linalg.add(_dense_ladder(N, I, True), _dense_ladder(N, I, False))
    return linalg.add(_dense_ladder(N, I - N, True), linalg.scale(_dense_ladder(N, I - N, False), -1))


def _anti(A, B):
    return linalg.add(linalg.matmul(A, B), linalg.matmul(B, A))


def _state_vector(st: FockState) -> list:
    return [st.coeff(m) for m in range(1 << st.modes)]


def suite_car(trials: int = 100, seed: int = 0) -> list[Check]:
    b = Battery()
    for N in range(1, 5):
        dim = 1 << N
        Id = linalg.identity(dim)
        Zero = linalg.zeros(dim)
        P = {i: _dense_ladder(N, i, True) for i in range(1, N + 1)}
        Nn = {i: _dense_ladder(N, i, False) for i in range(1, N + 1)}
        # the sparse ladder action agrees with the matrix column by column
        for i in range(1, N + 1):
            for m in range(dim):
                basis = FockState(N, {m: 1})
                for op, M in ((p(i), P[i]), (n(i), Nn[i])):
                    got = _state_vector(apply_ladder(op, basis))
                    b.record(f"ladder matches dense oracle N<=4", got == [M[r][m] for r in range(dim)], f"N={N} op={op} mask={m}")
        for i in range(1, N + 1):
            for j in range(1, N + 1):
                b.record("dense {p^i,n_j} = delta", _anti(P[i], Nn[j]) == (Id if i == j else Zero), f"N={N} i={i} j={j}")
                b.record("dense {p^i,p^j} = 0", _anti(P[i], P[j]) == Zero, f"N={N}")
                b.record("dense {n_i,n_j} = 0", _anti(Nn[i], Nn[j]) == Zero, f"N={N}")
        G = {I: _dense_gamma(N, I) for I in range(1, 2 * N + 1)}
        for I in range(1, 2 * N + 1):
            for J in range(1, 2 * N + 1):
                eta = 0 if I != J else (1 if I <= N else -1)
                b.record("dense {Gamma_I,Gamma_J} = 2 eta", _anti(G[I], G[J]) == linalg.scale(Id, 2 * eta), f"N={N} I={I} J={J}")
            # operator action agrees with the dense gamma
            for m in range(dim):
                got = _state_vector(gamma_apply(I, FockState(N, {m: 1})))
                b.record("gamma matches dense oracle N<=4", got == [G[I][r][m] for r in range(dim)], f"N={N} I={I}")
        # grading operator: the signed product of all 2N gammas
        Gam = linalg.identity(dim)
        for I in range(1, 2 * N + 1):
            Gam = linalg.matmul(Gam, G[I])
        if (N * (N - 1) // 2) % 2:
            Gam = linalg.scale(Gam, -1)
        b.record("grading squares to one", linalg.matmul(Gam, Gam) == Id, f"N={N}")
        diag = [[(-1) ** (r.bit_count()) if r == c else 0 for c in range(dim)] for r in range(dim)]
        b.record("grading is (-1)^particle number", Gam == diag, f"N={N}")
    rng = random.Random(seed)
    N = 8
    for t in range(trials):
        psi = rand_state(rng, N, terms=16)
        for i in range(1, N + 1):
            for j in range(1, N + 1):
                lhs = apply_word(LadderWord(1, (p(i), n(j))), psi) + apply_word(LadderWord(1, (n(j), p(i))), psi)
                b.record("{p^i,n_j} psi = delta psi (N=8)", lhs == (psi if i == j else FockState(N)), f"trial {t} i={i} j={j}", psi)
                pp = apply_word(LadderWord(1, (p(i), p(j))), psi) + apply_word(LadderWord(1, (p(j), p(i))), psi)
                b.record("{p^i,p^j} psi = 0 (N=8)", pp.is_zero(), f"trial {t}", psi)
                nn = apply_word(LadderWord(1, (n(i), n(j))), psi) + apply_word(LadderWord(1, (n(j), n(i))), psi)
                b.record("{n_i,n_j} psi = 0 (N=8)", nn.is_zero(), f"trial {t}", psi)
        for _ in range(16):
            I, J = rng.randint(1, 2 * N), rng.randint(1, 2 * N)
            lhs = gamma_apply(I, gamma_apply(J, psi)) + gamma_apply(J, gamma_apply(I, psi))
            eta = 0 if I != J else (1 if I <= N else -1)
            b.record("{Gamma_I,Gamma_J} psi = 2 eta psi (N=8)", lhs == psi.scale(2 * eta), f"trial {t} I={I} J={J}", psi)
        g = grading(psi)
        b.record("grading^2 = 1 (N=8)", grading(g) == psi, f"trial {t}", psi)
        b.record("grading = (-1)^popcount (N=8)", g == FockState(N, {m: (c if m.bit_count() % 2 == 0 else -c) for m, c in psi.items()}), f"trial {t}", psi)
    return b.result()


# ---------------------------------------------------------------------------
# pairing


def mukai_literal(a: FockState, b: FockState):
    """(-1)^{N(N-1)/2} times the vacuum coefficient of n_1...n_N Psi^T Phi |0>."""
    N = a.modes
    acc = FockState(N)
    for m, c in a.items():
        occ = [i for i in range(1, N + 1) if m >> (i - 1) & 1]
        w = transpose_word(LadderWord(c, tuple(p(i) for i in occ)))
        acc = acc + apply_word(w, b)
    acc = apply_word(LadderWord(1, tuple(n(i) for i in range(1, N + 1))), acc)
    v = acc.coeff(0)
    return -v if (N * (N - 1) // 2) % 2 else v


def _rand_word(rng: random.Random, N: int, length: int) -> LadderWord:
    ops = [(p if rng.random() < 0.5 else n)(rng.randint(1, N)) for _ in range(length)]
    return LadderWord(rand_gauss(rng), tuple(ops))


def suite_pairing(trials: int = 100, seed: int = 0) -> list[Check]:
    rng = random.Random(seed)
    b = Battery()
    for N in range(2, 9):
        sign = pairing_symmetry(N)
        b.record("symmetry sign is (-1)^{N(N-1)/2}", sign == (-1) ** (N * (N - 1) // 2), f"N={N}")
        for t in range(max(1, trials // 10)):
            a, c = rand_state(rng, N), rand_state(rng, N)
            b.record("(a,b) = sign (b,a)", mukai(a, c) == sign * mukai(c, a), f"N={N}", a)
    for N in range(1, 5):
        for t in range(max(1, trials // 10)):
            a, c = rand_state(rng, N, terms=6), rand_state(rng, N, terms=6)
            b.record("mukai equals the literal word definition (N<=4)", mukai(a, c) == mukai_literal(a, c), f"N={N}", a)
    for N in (4, 6, 8):
        for t in range(trials):
            a, c = rand_state(rng, N, terms=8), rand_state(rng, N, terms=8)
            base = mukai(a, c)
            B = rand_antisym(rng, N)
            b.record(f"B-transform invariance N={N}", mukai(b_transform(B, a), b_transform(B, c)) == base, f"trial {t}", a)
            C = rand_antisym(rng, N)
            b.record(f"C-transform invariance N={N}", mukai(c_transform(C, a), c_transform(C, c)) == base, f"trial {t}", a)
    for t in range(trials):
        N = rng.randint(2, 6)
        a, c = rand_state(rng, N), rand_state(rng, N)
        w = _rand_word(rng, N, rng.randint(0, 3))
        b.record("adjoint (a, O b) = (O^T a, b)", mukai(a, apply_word(w, c)) == mukai(apply_word(transpose_word(w), a), c), f"trial {t}", a)
        b.record("spin flip: <flip a|b> = (a,b)", _herm(spin_flip(a), c) == mukai(a, c), f"trial {t}", a)
        b.record("flip twice = (-1)^{N(N-1)/2}", spin_flip(spin_flip(a)) == a.scale(pairing_symmetry(N)), f"N={N}", a)
    # Majorana family and the covariant / density relation
    for t in range(max(1, trials // 5)):
        y = [rand_rational(rng) for _ in range(8)]
        g = G_state(y)
        b.record("real G(y) is Majorana", is_majorana(g), f"y={y}", g)
        b.record("i G(y) is not Majorana", g.is_zero() or not is_majorana(g.scale(GaussianRational(0, 1))), "", g)
        q = rand_qubit(rng)
        psi = embed_single(q)
        maj = psi + spin_flip(psi)
        b.record("psi + flip(psi) is Majorana", is_majorana(maj), "", psi)
        R = four_fermion_r(maj)
        rho = rho_tensor(maj)
        ok = all(R.rows[a][c] == 2 * rho.rows[a][c] for a in range(64) for c in range(64))
        b.record("R = 2 rho on Majorana embedded four-qubit states", ok, "", maj)
        b.record("Wootters flip = eps^4 conjugation (sign +1)", extract_qubit(spin_flip(psi), (0, 0, 0, 0)) == wootters_flip(q), "", psi)
    return b.result()


def _herm(a: FockState, c: FockState):
    total = 0
    for m, x in a.items():
        y = c.coeff(m)
        if y != 0:
            total = total + conj(x) * y
    return total


def wootters_flip(q: QubitState) -> QubitState:
    """psi~_mu = eps^{mu mu'} conj(psi_mu') on every leg, eps^{01} = +1."""
    out = []
    for idx in range(1 << q.n):
        bits = bits_of(idx, q.n)
        s = 1
        for x in bits:
            s = s if x == 0 else -s
        out.append(s * conj(q.amps[index_of([1 - x for x in bits])]))
    return QubitState(q.n, tuple(out))


# ---------------------------------------------------------------------------
# embeddings


MIRROR_GOLDEN = {
    # generated by Gamma_1 Gamma_2 Gamma_3 on the odd sector, frozen
    "X^1,2": (-1, "W^3"), "X^1,3": (1, "W^2"), "X^2,3": (-1, "W^1"),
    "X^1b,2b": (1, "U_3b"), "X^1b,3b": (-1, "U_2b"), "X^2b,3b": (1, "U_1b"),
    "Y_1,2": (1, "U_3"), "Y_1,3": (-1, "U_2"), "Y_2,3": (1, "U_1"),
    "Y_1b,2b": (1, "W^3b"), "Y_1b,3b": (-1, "W^2b"), "Y_2b,3b": (1, "W^1b"),
}


def suite_embeddings(trials: int = 50, seed: int = 0) -> list[Check]:
    rng = random.Random(seed)
    b = Battery()
    for n_ in (1, 2, 3, 4):
        for t in range(max(1, trials // 4)):
            q = rand_qubit(rng, n_)
            single = embed_single(q)
            b.record("embed_single then extract is the identity", extract_qubit(single, (0,) * n_) == q, f"n={n_}", single)
            for pat in all_patterns(n_):
                img = embed_pattern(q, pat)
                b.record("extract inverts embed_pattern", extract_qubit(img, pat) == q, f"n={n_} pattern={pat}", img)
                ch = chirality(img)
                b.record("pattern image has the predicted chirality", img.is_zero() or ch == pattern_chirality(n_, pat), f"pattern={pat}", img)
    for n_ in (2, 3, 4):
        seen = set()
        ok = True
        for pat in all_patterns(n_):
            mons = pattern_monomials(n_, pat)
            ok &= len(mons) == 1 << n_ and not (mons & seen)
            seen |= mons
        b.record("pattern subspaces are disjoint and span the Fock space", ok and len(seen) == 1 << (2 * n_), f"n={n_}")
    table = mirror_table()
    for label, entry in MIRROR_GOLDEN.items():
        b.record("mirror table golden entries", table.get(label) == entry, f"{label}: {table.get(label)} vs {entry}")
    b.record("mirror eta = -Z_123", table.get("eta") == (-1, "Z_1,2,3"), str(table.get("eta")))
    b.record("mirror xi = Z_1b2b3b", table.get("xi") == (1, "Z_1b,2b,3b"), str(table.get("xi")))
    for t in range(trials):
        st = rand_state(rng, 6, terms=10, parity=1)
        back = mirror_three_qubit(mirror_three_qubit(st), "inverse")
        b.record("inverse mirror undoes the forward map", back == st, "", st)
        twice = gamma_apply(1, gamma_apply(2, gamma_apply(3, mirror_three_qubit(st))))
        b.record("forward map applied twice = -1", twice == st.scale(-1), "", st)
    for t in range(trials):
        q = rand_qubit(rng, 4)
        locs = [rand_sl2(rng) for _ in range(4)]
        perm = list(range(4))
        rng.shuffle(perm)
        q2 = qubit_slocc_apply(q, locs, perm)
        g1, g2 = g_invariants(q, (1, 3)), g_invariants(q2, (1, 3))
        b.record("g invariants unchanged by SLOCC and qubit permutations", g1 == g2, f"perm={perm}", embed_single(q))
    return b.result()


# ---------------------------------------------------------------------------
# four-qubit identities


def fourqubit_battery(b: Battery, q: QubitState, with_sl8: bool = True) -> None:
    psi = embed_single(q)
    inv = fourqubit_invariants(q)
    H, L, M, N = inv.H, inv.L, inv.M, inv.N
    b.record("L + M + N = 0", L + M + N == 0, "", psi)
    b.record("D = E - HL, E = F - HN, F = D - HM", inv.D == inv.E - H * L and inv.E == inv.F - H * N and inv.F == inv.D - H * M, "", psi)
    b.record("H = 1/2 (psi, psi)", 2 * H == mukai(psi, psi), "", psi)
    for which in "LMN":
        tr = block_power_traces(q, which, range(1, 7))
        s = char_poly_s(q, which)
        b.record(f"s1..s4 table using {which}", s == s_closed(inv, which), f"{s} vs {s_closed(inv, which)}", psi)
        for k in range(1, 5):
            b.record(f"1/2 Tr R^{k} table using {which}", tr[k] * Fraction(1, 2) == half_trace_closed(inv, k, which), "", psi)
        b.record(f"Det R = s4 using {which}", s[3] == linalg.det(blocks_from_lmn(q)[{"L": (1, 2), "M": (1, 3), "N": (1, 4)}[which]]), "", psi)
    tr = block_power_traces(q, "L", (5, 6))
    b.record("quintic trace expansion", tr[5] * Fraction(1, 2) == half_trace_closed(inv, 5), "", psi)
    b.record("sextic trace expansion", tr[6] * Fraction(1, 2) == half_trace_closed(inv, 6), "", psi)
    s = char_poly_s(q, "L")
    b.record("Newton: s1 = 2H, s2 = H^2+4M+2L, s3 = 4D+2HL, s4 = L^2", s == (inv.s1, inv.s2, inv.s3, inv.s4), "", psi)
    g = g_invariants(q, range(1, 7))
    gc = g_closed(inv)
    for k in range(1, 7):
        b.record(f"g_{2 * k} closed form", g[k] == gc[k], f"{g[k]} vs {gc[k]}", psi)
    b.record("g_10 syzygy", g10_syzygy_residual(g) == 0, "", psi)
    fp = f_prime_invariants(q, (1, 2, 3, 4, 6))
    for k in (1, 2, 3, 4, 6):
        b.record("f'_2p = 2^{1-p} g_2p", fp[k] == g[k] * Fraction(2) ** (1 - k), f"p={k}", psi)
    if with_sl8:
        I = sl8_trace_invariants(psi, (1, 2, 3, 4, 6))
        for k in (1, 2, 3, 4, 6):
            b.record("I_2p = (-1)^p 2^p f'_2p", I[k] == (-1) ** k * 2 ** k * fp[k], f"p={k}", psi)
        M28 = katanova_28(psi)
        bl = blocks_28(M28)
        b.record("seventh 28x28 block is zero", all(x == 0 for r in bl[6] for x in r), "", psi)
        b.record("28x28 matrix is block diagonal", all(M28[i][j] == 0 for i in range(28) for j in range(28) if i // 4 != j // 4), "", psi)
        rb, lb = r_blocks(psi), blocks_from_lmn(q)
        b.record("28x28 blocks are 1/2 R_ab", all(rb[k] == lb[k] for k in BLOCK_PAIRS), "", psi)


def suite_fourqubit(trials: int = 200, seed: int = 0) -> list[Check]:
    rng = random.Random(seed)
    b = Battery()
    for t in range(trials):
        fourqubit_battery(b, rand_qubit(rng))
    q = QubitState.basis((0, 0, 0, 0))
    inv = fourqubit_invariants(q)
    b.record("product state: H = L = M = N = D = 0", all(v == 0 for v in (inv.H, inv.L, inv.M, inv.N, inv.D)), "")
    for t in range(max(1, trials // 4)):
        q = rand_qubit(rng)
        locs = [rand_sl2(rng) for _ in range(4)]
        q2 = qubit_slocc_apply(q, locs)
        b.record("four-qubit invariants are SL(2)^4 invariant", fourqubit_invariants(q) == fourqubit_invariants(q2), "", embed_single(q))
        lam = rand_rational(rng) or Fraction(1)
        i1, i2 = fourqubit_invariants(q), fourqubit_invariants(q.scale(lam))
        ok = (i2.H == lam ** 2 * i1.H and i2.L == lam ** 4 * i1.L and i2.M == lam ** 4 * i1.M
              and i2.N == lam ** 4 * i1.N and i2.D == lam ** 6 * i1.D)
        b.record("homogeneity degrees 2, 4, 6", ok, "", embed_single(q))
    return b.result()


# ---------------------------------------------------------------------------
# semisimple family and root sums


def _gamma_semisimple(x) -> object:
    s6 = sum(v ** 6 for v in x)
    s24 = sum(x[a] ** 2 * x[c] ** 4 for a in range(4) for c in range(4) if a != c)
    s222 = sum(x[a] ** 2 * x[c] ** 2 * x[d] ** 2 for a, c, d in combinations(range(4), 3))
    return s6 - s24 + 18 * s222


def suite_roots(trials: int = 100, seed: int = 0) -> list[Check]:
    rng = random.Random(seed)
    b = Battery()
    b.record("24 forms in four variables", len(set(f4_forms_cached())) == 24, "")
    from .roots import e8_roots

    R8 = e8_roots()
    b.record("240 distinct E8 roots", len(set(R8)) == 240, "")
    b.record("E8 roots closed under negation", set(R8) == {tuple(-c for c in r) for r in R8}, "")
    b.record("E8 roots sum to zero", all(sum(r[k] for r in R8) == 0 for k in range(8)), "")
    for t in range(trials):
        x = [rand_rational(rng) for _ in range(4)]
        q = semisimple_qubit_state(x)
        psi = embed_single(q)
        inv = fourqubit_invariants(q)
        b.record("2H = sum x^2", 2 * inv.H == sum(v * v for v in x), f"x={x}", psi)
        b.record("2^5 Gamma formula", 32 * inv.GammaInv == _gamma_semisimple(x), f"x={x}", psi)
        y = y_of_x4(x)
        b.record("semisimple state in Bell-diagonal y form", semialtern_state(y) == q, f"x={x}", psi)
        b.record("x(y(x)) = x (four variables)", x_of_y4(y) == tuple(x), "")
        g = g_invariants(q, (1, 3, 4, 6))
        I = sl8_trace_invariants(psi, (1, 3, 4, 6))
        fc = f_closed(q)
        for k, p_ in enumerate((1, 3, 4, 6)):
            pi = pi_2p(x, p_)
            b.record("pi_2p = 2^{2p+1} g_2p", pi == 2 ** (2 * p_ + 1) * g[p_], f"p={p_} x={x}", psi)
            b.record("pi_2p = (-1)^p 2^{2p} I_2p", pi == (-1) ** p_ * 2 ** (2 * p_) * I[p_], f"p={p_} x={x}", psi)
            b.record("Wallach form equals g_2p", wallach_g(y, p_) == g[p_], f"p={p_}", psi)
            b.record("F closed forms equal 1/6 Wallach sum in x", fc[k] == wallach_f(x, p_), f"p={p_}", psi)
        b.record("F_2 = 2H", fc[0] == 2 * inv.H, "", psi)
    for t in range(max(1, trials // 2)):
        x = [rand_rational(rng) for _ in range(8)]
        perm = list(range(8))
        rng.shuffle(perm)
        flips = [rng.choice((1, -1)) for _ in range(8)]
        if flips.count(-1) % 2:
            flips[0] = -flips[0]
        x2 = [flips[k] * x[perm[k]] for k in range(8)]
        b.record("Pi_2p invariant under permutations and even sign flips", all(Pi_2p(x, p_) == Pi_2p(x2, p_) for p_ in (1, 4)), f"x={x}")
        b.record("y(x) round trip", x_of_y(y_of_x(x)) == tuple(x), "")
    return b.result()


def f4_forms_cached():
    from .roots import f4_forms

    return f4_forms()


# ---------------------------------------------------------------------------
# E8 headline


SPIN16_ORDERS = (1, 4, 6, 7, 9, 10, 12, 15)


def generic_point(rng: random.Random, k: int) -> list[Fraction]:
    """Rationals with wide numerators and denominators, away from reflection walls in practice."""
    return [Fraction(rng.randint(-1000, 1000), rng.randint(1, 97)) for _ in range(k)]


def suite_e8(trials: int = 10, seed: int = 0, generic: bool = True, independence: bool = True) -> list[Check]:
    rng = random.Random(seed)
    b = Battery()
    for a in range(1, 5):
        b.record("Omega |E_a> = |E_{9-a}>", omega(e_state(a)) == e_state(9 - a), f"alpha={a}")
    for t in range(trials):
        y = [rand_rational(rng, 6) for _ in range(8)]
        g = G_state(y)
        b.record("(G,G) = 2 sum y^2", mukai(g, g) == 2 * sum(v * v for v in y), f"y={y}", g)
        fast = spin16_invariants_fast(y, SPIN16_ORDERS)
        slow = spin16_invariants(g, SPIN16_ORDERS) if generic else fast
        for p_ in SPIN16_ORDERS:
            rhs = headline_rhs(y, p_)
            b.record(f"I_{2 * p_} = (-1)^p 2^(2p-1) Pi_{2 * p_} (fast path)", fast[p_] == rhs, f"y={y}", g)
            if generic:
                b.record(f"I_{2 * p_} = (-1)^p 2^(2p-1) Pi_{2 * p_} (generic path)", slow[p_] == rhs, f"y={y}", g)
    if independence:
        for attempt in range(3):
            x = generic_point(rng, 8)
            r = jacobian_rank([lambda v, k=k: Pi_2p(v, k) for k in SPIN16_ORDERS], [2 * k for k in SPIN16_ORDERS], x)
            if r == 8:
                break
        b.record("Jacobian rank of Pi_2p is 8", r == 8, f"rank {r}")
        for attempt in range(3):
            y = generic_point(rng, 8)
            r = linalg.rank(spin16_jacobian(y, SPIN16_ORDERS))
            if r == 8:
                break
        b.record("Jacobian rank of the restricted I_2p is 8", r == 8, f"rank {r}")
        for attempt in range(3):
            x = generic_point(rng, 4)
            polys = [lambda v, k=k: g_invariants(semisimple_qubit_state(v), (k,))[k] for k in (1, 3, 4, 6)]
            r = jacobian_rank(polys, [2, 6, 8, 12], x)
            if r == 4:
                break
        b.record("Jacobian rank of g_2, g_6, g_8, g_12 is 4", r == 4, f"rank {r}")
    return b.result()


# ---------------------------------------------------------------------------
# classification


def suite_classify(trials: int = 50, seed: int = 0) -> list[Check]:
    rng = random.Random(seed)
    b = Battery()
    for N in range(1, 9):
        for k in range(N + 1):
            st = FockState.monomial(N, range(k + 1, N + 1))
            basis = annihilator_basis(st)
            b.record("Slater determinant has nullity N", basis.nullity == N, f"N={N} k={k}", st)
    for t in range(trials):
        N = rng.randint(2, 8)
        ps = random_pure_spinor(N, rng.randint(0, N), rng.randrange(1 << 30))
        b.record("B-transformed Slater determinants are pure", is_pure_spinor(ps), f"N={N}", ps)
        b.record("pure spinors are Weyl", chirality(ps) in (Chirality.POSITIVE, Chirality.NEGATIVE), f"N={N}", ps)
    for N in (1, 2, 3):
        for m in range(1 << N):
            st = FockState(N, {m: 1})
            b.record("every basis monomial is pure (N<=3)", is_pure_spinor(st), f"N={N} mask={m}", st)
        for t in range(trials):
            st = rand_state(rng, N, terms=rng.randint(1, 1 << (N - 1)), parity=rng.randint(0, 1))
            if st.is_zero():
                continue
            b.record("every nonzero Weyl spinor is pure (N<=3)", is_pure_spinor(st), f"N={N}", st)
    two = [m for m in range(16) if m.bit_count() == 2]
    for m in two:
        st = FockState(4, {m: 1})
        b.record("N=4 pure iff Pluecker quadric vanishes", is_pure_spinor(st) == (mukai(st, st) == 0), "slater", st)
    for t in range(max(trials, 200)):
        st = FockState(4, {m: rand_rational(rng, 2) for m in two})
        if st.is_zero():
            continue
        b.record("N=4 pure iff Pluecker quadric vanishes", is_pure_spinor(st) == (mukai(st, st) == 0), "", st)
    for N in (2, 4, 6, 8):
        for t in range(max(1, trials // 5)):
            st = rand_state(rng, N, terms=rng.randint(1, 6), parity=0)
            if st.is_zero():
                continue
            vecs = annihilator_basis(st).vectors
            ok = all(isotropy_form(u, v, N) == 0 for u in vecs for v in vecs)
            b.record("annihilator subspace is totally isotropic", ok, f"N={N}", st)
            B = rand_antisym(rng, N)
            b.record("nullity invariant under B-transforms", annihilator_basis(b_transform(B, st)).nullity == len(vecs), f"N={N}", st)
    return b.result()


RUNNERS: dict[str, Callable[..., list[Check]]] = {
    "car": suite_car,
    "pairing": suite_pairing,
    "embeddings": suite_embeddings,
    "fourqubit-identities": suite_fourqubit,
    "roots": suite_roots,
    "e8": suite_e8,
    "classify": suite_classify,
}


def run_suite(name: str, trials: int, seed: int) -> list[Check]:
    if name not in RUNNERS:
        raise KeyError(name)
    return RUNNERS[name](trials=trials, seed=seed)
