import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from spinorlab import linalg
from spinorlab.fock import (
    FockState, LadderWord, apply_ladder, apply_word, hermitian_inner, mask_of, n, occupied, p,
    particle_sectors, top, vacuum, word,
)
from spinorlab.scalars import re_im
from spinorlab.suites import _dense_ladder, rand_state

from conftest import fock_states, gaussians


def dense_column(st: FockState) -> list:
    return [st.coeff(m) for m in range(1 << st.modes)]


def test_vacuum_and_top():
    assert vacuum(2).terms == {0: 1}
    assert top(2).terms == {0b11: 1}
    assert apply_ladder(n(1), vacuum(4)).is_zero()
    assert particle_sectors(vacuum(8)) == {0: vacuum(8)}


@pytest.mark.parametrize("N", range(1, 9))
def test_annihilating_top_in_order(N):
    # n_1 n_2 ... n_N |top> picks up (-1)^{N(N-1)/2}
    w = word(*(n(i) for i in range(1, N + 1)))
    sign = -1 if (N * (N - 1) // 2) % 2 else 1
    assert apply_word(w, top(N)) == vacuum(N).scale(sign)


def test_reverse_annihilation_of_top4_is_plus_one():
    assert apply_word(word(n(4), n(3), n(2), n(1)), top(4)) == vacuum(4)


def test_ladder_examples():
    assert apply_ladder(p(1), vacuum(2)).terms == {1: 1}
    assert apply_word(word(p(1), p(1)), vacuum(2)).is_zero()
    built = apply_word(word(p(2), p(1)), vacuum(2))  # p^2 p^1 |0> = -monomial{1,2}
    assert built == FockState(2, {0b11: -1})
    assert apply_ladder(n(1), built) == FockState(2, {0b10: -1})
    # p^1 p^2 |0> is the ascending monomial itself
    assert apply_word(word(p(1), p(2)), vacuum(2)) == FockState.monomial(2, (1, 2))


def test_empty_word_scales():
    st = FockState(3, {0b101: Fraction(2, 3)})
    assert apply_word(LadderWord(5, ()), st) == st.scale(5)


def test_particle_sectors_example():
    st = vacuum(2) + FockState.monomial(2, (1, 2))
    assert sorted(particle_sectors(st)) == [0, 2]
    single = FockState.monomial(8, (1, 2, 3, 4), 7)
    assert list(particle_sectors(single)) == [4]


def test_hermitian_inner_examples():
    assert hermitian_inner(vacuum(3), vacuum(3)) == 1
    assert hermitian_inner(top(3), vacuum(3)) == 0


def test_mask_roundtrip():
    assert occupied(mask_of([1, 3, 4])) == (1, 3, 4)
    with pytest.raises(ValueError):
        FockState.monomial(3, (1, 1))
    with pytest.raises(ValueError):
        FockState(17)


@given(fock_states(), gaussians, gaussians, st.data())
def test_ladder_is_linear(a, alpha, beta, data):
    b = data.draw(fock_states(modes=a.modes))
    op = data.draw(st.sampled_from([p, n]))(data.draw(st.integers(1, a.modes)))
    lhs = apply_ladder(op, a.scale(alpha) + b.scale(beta))
    rhs = apply_ladder(op, a).scale(alpha) + apply_ladder(op, b).scale(beta)
    assert lhs == rhs


@given(fock_states())
def test_sectors_partition(st_):
    parts = particle_sectors(st_)
    total = FockState(st_.modes)
    for k, part in parts.items():
        assert all(m.bit_count() == k for m, _ in part.items())
        total = total + part
    assert total == st_


@given(fock_states())
def test_hermitian_inner_positive(st_):
    v = hermitian_inner(st_, st_)
    assert (v == 0) == st_.is_zero()
    re, im = re_im(v)
    assert im == 0 and re >= 0


def test_car_on_random_states():
    rng = random.Random(11)
    for _ in range(200):
        N = rng.randint(1, 8)
        psi = rand_state(rng, N, terms=10)
        i, j = rng.randint(1, N), rng.randint(1, N)
        pn = apply_word(word(p(i), n(j)), psi) + apply_word(word(n(j), p(i)), psi)
        assert pn == (psi if i == j else FockState(N))
        assert (apply_word(word(p(i), p(j)), psi) + apply_word(word(p(j), p(i)), psi)).is_zero()
        assert (apply_word(word(n(i), n(j)), psi) + apply_word(word(n(j), n(i)), psi)).is_zero()


@pytest.mark.parametrize("N", range(1, 7))
def test_words_match_kronecker_oracle(N):
    """Every word of length <= 4 agrees with products of Jordan-Wigner matrices."""
    rng = random.Random(N)
    dim = 1 << N
    mats = {}
    for i in range(1, N + 1):
        mats[p(i)] = _dense_ladder(N, i, True)
        mats[n(i)] = _dense_ladder(N, i, False)
    ops = list(mats)
    for _ in range(40):
        w = tuple(rng.choice(ops) for _ in range(rng.randint(0, 4)))
        M = linalg.identity(dim)
        for op in w:
            M = linalg.matmul(M, mats[op])
        psi = rand_state(rng, N, terms=min(6, dim))
        vec = dense_column(psi)
        expect = [sum(M[r][c] * vec[c] for c in range(dim)) for r in range(dim)]
        assert dense_column(apply_word(LadderWord(1, w), psi)) == expect
