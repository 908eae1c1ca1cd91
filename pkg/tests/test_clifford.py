import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from spinorlab import linalg
from spinorlab.clifford import (
    Chirality, SpinGenerator, apply_generator, b_transform, c_transform, chirality, exp_nilpotent_matrix,
    gamma_apply, generator_words, gl_sector_transform, grading, so_matrix,
)
from spinorlab.covariants import k_vector
from spinorlab.fock import FockState, apply_word, vacuum
from spinorlab.pairing import mukai, transpose_word
from spinorlab.suites import _anti, _dense_gamma, rand_antisym, rand_state

from conftest import antisymmetric, fock_states


def test_gamma_examples():
    assert gamma_apply(1, vacuum(2)) == FockState.monomial(2, (1,))
    # modes 1 and 2 of N = 2 play the roles of 1 and 1-bar for a single qubit
    assert gamma_apply(1, FockState.monomial(2, (1, 2))) == FockState.monomial(2, (2,))


@given(fock_states())
def test_gamma_one_squares_to_identity(st_):
    assert gamma_apply(1, gamma_apply(1, st_)) == st_


@pytest.mark.parametrize("N", range(1, 5))
def test_clifford_relations_dense(N):
    dim = 1 << N
    G = {I: _dense_gamma(N, I) for I in range(1, 2 * N + 1)}
    for I in G:
        for J in G:
            eta = 0 if I != J else (1 if I <= N else -1)
            assert _anti(G[I], G[J]) == linalg.scale(linalg.identity(dim), 2 * eta)
    for I in G:
        for m in range(dim):
            col = gamma_apply(I, FockState(N, {m: 1}))
            assert [col.coeff(r) for r in range(dim)] == [G[I][r][m] for r in range(dim)]


@given(fock_states(max_modes=5))
def test_grading_is_popcount_parity(st_):
    g = grading(st_)
    assert grading(g) == st_
    assert g == FockState(st_.modes, {m: (c if m.bit_count() % 2 == 0 else -c) for m, c in st_.items()})


def test_chirality_examples():
    assert chirality(vacuum(3)) is Chirality.POSITIVE
    assert chirality(FockState.monomial(3, (1,))) is Chirality.NEGATIVE
    assert chirality(vacuum(3) + FockState.monomial(3, (1,))) is Chirality.MIXED
    assert chirality(FockState(3)) is Chirality.ZERO


def test_generator_examples():
    z = SpinGenerator.from_parts(3)
    assert apply_generator(z, rand_state(random.Random(1), 3)).is_zero()
    b = Fraction(5, 3)
    s = SpinGenerator.from_parts(2, B=((0, b), (-b, 0)))
    assert apply_generator(s, vacuum(2)) == FockState.monomial(2, (1, 2), b)


def test_generator_transpose_is_minus_itself():
    rng = random.Random(4)
    N = 4
    A = [[Fraction(rng.randint(-3, 3)) for _ in range(N)] for _ in range(N)]
    s = SpinGenerator.from_parts(N, A=A, B=rand_antisym(rng, N), C=rand_antisym(rng, N))
    words = generator_words(s)
    for _ in range(20):
        a, b = rand_state(rng, N), rand_state(rng, N)
        sb = FockState(N)
        stb = FockState(N)
        for w in words:
            sb = sb + apply_word(w, b)
            stb = stb + apply_word(transpose_word(w), a)
        # (a, s b) = (s^T a, b) = -(s a, b)
        assert mukai(a, sb) == mukai(stb, b)
        assert mukai(a, sb) == -mukai(apply_generator(s, a), b)


def test_generators_preserve_chirality():
    rng = random.Random(6)
    for _ in range(100):
        N = rng.randint(2, 6)
        s = SpinGenerator.from_parts(N, A=[[rng.randint(-2, 2) for _ in range(N)] for _ in range(N)],
                                     B=rand_antisym(rng, N), C=rand_antisym(rng, N))
        psi = rand_state(rng, N, parity=rng.randint(0, 1))
        out = apply_generator(s, psi)
        assert out.is_zero() or chirality(out) == chirality(psi)


def test_b_transform_examples():
    b = Fraction(-2, 7)
    assert b_transform([[0, 0], [0, 0]], vacuum(2)) == vacuum(2)
    assert b_transform([[0, b], [-b, 0]], vacuum(2)) == vacuum(2) + FockState.monomial(2, (1, 2), b)


def test_c_transform_examples():
    c = Fraction(3, 4)
    st = FockState.monomial(2, (1, 2))
    assert c_transform([[0, 0], [0, 0]], st) == st
    # 1/2 C^{ij} n_i n_j = c n_1 n_2 and n_1 n_2 p^1 p^2 |0> = -|0>
    assert c_transform([[0, c], [-c, 0]], st) == st + vacuum(2).scale(-c)


@given(st.data())
def test_transforms_preserve_chirality(data):
    N = data.draw(st.integers(2, 6))
    psi = data.draw(fock_states(modes=N, parity=data.draw(st.integers(0, 1))))
    for f in (b_transform, c_transform):
        out = f(data.draw(antisymmetric(N)), psi)
        assert out.is_zero() or chirality(out) == chirality(psi)


def test_commuting_b_transforms_compose():
    rng = random.Random(8)
    N = 6
    for _ in range(20):
        B1 = linalg.zeros(N)
        B2 = linalg.zeros(N)
        # block-disjoint supports on modes 1..3 and 4..6
        for i in range(3):
            for j in range(i + 1, 3):
                v, w = Fraction(rng.randint(-4, 4), 3), Fraction(rng.randint(-4, 4), 5)
                B1[i][j], B1[j][i] = v, -v
                B2[i + 3][j + 3], B2[j + 3][i + 3] = w, -w
        psi = rand_state(rng, N)
        assert b_transform(B1, b_transform(B2, psi)) == b_transform(linalg.add(B1, B2), psi)


def test_gl_sector_examples():
    st1 = FockState.monomial(2, (1,))
    assert gl_sector_transform(linalg.identity(2), st1) == st1
    assert gl_sector_transform([[2, 0], [0, Fraction(1, 2)]], st1) == st1.scale(2)
    out = gl_sector_transform([[0, -1], [1, 0]], st1)
    assert out in (FockState.monomial(2, (2,)), FockState.monomial(2, (2,), -1))
    with pytest.raises(ValueError):
        gl_sector_transform([[2, 0], [0, 1]], st1)


def _sector(rng, N, k):
    return FockState(N, {sum(1 << (i - 1) for i in c): Fraction(rng.randint(-5, 5), rng.randint(1, 4))
                         for c in combinations(range(1, N + 1), k)})


def test_gl_sector_preserves_pairing():
    rng = random.Random(9)
    N = 4
    for _ in range(20):
        U = linalg.identity(N)
        L = linalg.identity(N)
        for i in range(N):
            for j in range(i + 1, N):
                U[i][j] = Fraction(rng.randint(-3, 3), 2)
                L[j][i] = Fraction(rng.randint(-3, 3), 3)
        S = linalg.matmul(L, U)
        k = rng.randint(0, N)
        a, b = _sector(rng, N, k), _sector(rng, N, N - k)
        assert mukai(gl_sector_transform(S, a), gl_sector_transform(S, b)) == mukai(a, b)


def test_k_vector_covariance_under_b_transform():
    """K_I(e^s psi) = K_J(psi) (S^{-1})^J_I with S = exp of the vector representation of s."""
    rng = random.Random(10)
    N = 4
    for _ in range(20):
        B = rand_antisym(rng, N)
        s = SpinGenerator.from_parts(N, B=B)
        S = exp_nilpotent_matrix(so_matrix(s))
        Sinv = exp_nilpotent_matrix(linalg.scale(so_matrix(s), -1))
        assert linalg.matmul(S, Sinv) == linalg.identity(2 * N)
        psi = rand_state(rng, N, terms=10)  # mixed chirality so K does not vanish
        K = k_vector(psi)
        K2 = k_vector(b_transform(B, psi))
        expect = [sum(K[J] * Sinv[J][I] for J in range(2 * N)) for I in range(2 * N)]
        assert K2 == expect
