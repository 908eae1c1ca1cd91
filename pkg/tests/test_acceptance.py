"""End-to-end acceptance battery, one test per criterion.

Each test prints a single PASS/FAIL line with its runtime; the lines are also
collected into the terminal summary.  A criterion fails if any check fails or
the runtime budget is exceeded.
"""

import io
import json
import os
import random
import re
import subprocess
import sys
import time
from itertools import combinations

from spinorlab.cli import main
from spinorlab.covariants import four_fermion_r, rho_tensor
from spinorlab.embed import embed_single, mirror_table
from spinorlab.fock import FockState
from spinorlab.pairing import is_majorana, mukai, pairing_symmetry, spin_flip
from spinorlab.roots import G_state
from spinorlab.scalars import GaussianRational
from spinorlab.statefile import parse_state, serialize_state
from spinorlab.suites import (
    _herm, rand_qubit, rand_rational, rand_state, suite_car, suite_classify, suite_e8, suite_fourqubit,
    suite_pairing, suite_roots,
)

from conftest import ACCEPTANCE


def _report(num, title, failures, total, elapsed, budget, extra=""):
    ok = not failures and elapsed < budget
    why = ""
    if failures:
        why = f"; {len(failures)} failing: " + "; ".join(failures[:12])
    if elapsed >= budget:
        why += f"; over the {budget:g} s budget"
    line = f"criterion {num}: {'PASS' if ok else 'FAIL'} {title} [{total - len(failures)}/{total} checks, {elapsed:.1f} s]{extra}{why}"
    print(line)
    ACCEPTANCE.append(line)
    assert ok, line


def _suite(num, title, budget, runner, **kw):
    t0 = time.perf_counter()
    checks = runner(**kw)
    elapsed = time.perf_counter() - t0
    failures = [f"{c.name} ({c.detail})" for c in checks if not c.passed]
    # each Check aggregates repeated records as "good/total"
    total = sum(int(re.match(r"\d+/(\d+)", c.detail).group(1)) for c in checks)
    _report(num, title, failures, total, elapsed, budget)


def test_criterion_01_car_clifford():
    _suite(1, "CAR/Clifford battery", 10, suite_car, trials=100, seed=1)


def test_criterion_02_pairing():
    _suite(2, "pairing battery", 30, suite_pairing, trials=100, seed=2)


def test_criterion_03_four_qubit_identities():
    _suite(3, "four-qubit identity suite", 180, suite_fourqubit, trials=200, seed=3)


def test_criterion_04_semisimple_f4():
    _suite(4, "semisimple/F4 suite", 60, suite_roots, trials=100, seed=4)


def test_criterion_05_e8_headline():
    _suite(5, "E8 headline on 10 points, both paths", 600, suite_e8, trials=10, seed=5, independence=False)


def test_criterion_06_independence():
    _suite(6, "Jacobian ranks 8, 8, 4", 120, suite_e8, trials=0, seed=6, independence=True)


def test_criterion_07_classification():
    _suite(7, "classification", 60, suite_classify, trials=50, seed=7)


# the reference X-tilde / Y-tilde matrices, upper triangles; rows and columns
# run over 1, 2, 3, 1b, 2b, 3b.
#
# Expected red: the twelve U/W entries sit in the other matrix.  Gamma_1 Gamma_2
# Gamma_3 sends U_3 p^3|0> to U_3 p^1 p^2|0> (Gamma_3 can only annihilate mode 3,
# then Gamma_1 Gamma_2 can only create modes 1 and 2), which is the Y_12
# coefficient.  X^12 multiplies the four-particle monomial p^3 p^1b p^2b p^3b, so
# no choice of sign or W labelling puts U_3 there.  Z, xi and eta all agree.
_REFERENCE_X = {
    ("1", "2"): (1, "U_3"), ("1", "3"): (-1, "U_2"), ("2", "3"): (1, "U_1"),
    ("1", "1b"): (1, "Z 1 2b 3b"), ("1", "2b"): (1, "Z 1 3b 1b"), ("1", "3b"): (1, "Z 1 1b 2b"),
    ("2", "1b"): (1, "Z 2 2b 3b"), ("2", "2b"): (1, "Z 2 3b 1b"), ("2", "3b"): (1, "Z 2 1b 2b"),
    ("3", "1b"): (1, "Z 3 2b 3b"), ("3", "2b"): (1, "Z 3 3b 1b"), ("3", "3b"): (1, "Z 3 1b 2b"),
    ("1b", "2b"): (1, "W^3b"), ("1b", "3b"): (-1, "W^2b"), ("2b", "3b"): (1, "W^1b"),
}
_REFERENCE_Y = {
    ("1", "2"): (-1, "W_3"), ("1", "3"): (1, "W_2"), ("2", "3"): (-1, "W_1"),
    ("1", "1b"): (-1, "Z 1b 2 3"), ("1", "2b"): (-1, "Z 2b 2 3"), ("1", "3b"): (-1, "Z 3b 2 3"),
    ("2", "1b"): (-1, "Z 1b 3 1"), ("2", "2b"): (-1, "Z 2b 3 1"), ("2", "3b"): (-1, "Z 3b 3 1"),
    ("3", "1b"): (-1, "Z 1b 1 2"), ("3", "2b"): (-1, "Z 2b 1 2"), ("3", "3b"): (-1, "Z 3b 1 2"),
    ("1b", "2b"): (-1, "U_3b"), ("1b", "3b"): (1, "U_2b"), ("2b", "3b"): (-1, "U_1b"),
}
_ORDER = {"1": 1, "2": 2, "3": 3, "1b": 4, "2b": 5, "3b": 6}


def _canonical(sign, name):
    """Sort Z indices ascending (1 < 2 < 3 < 1b < 2b < 3b), absorbing the permutation sign.

    Lower-index W_k is written W^k in the generated table.
    """
    if name.startswith("Z "):
        idx = name.split()[1:]
        for a, b in combinations(range(3), 2):
            if _ORDER[idx[a]] > _ORDER[idx[b]]:
                sign = -sign
        return sign, "Z_" + ",".join(sorted(idx, key=_ORDER.get))
    if name.startswith("W_"):
        return sign, "W^" + name[2:]
    return sign, name


def test_criterion_08_mirror_dictionary():
    t0 = time.perf_counter()
    table = mirror_table()
    reference = {}
    for (i, j), entry in _REFERENCE_X.items():
        reference[f"X^{i},{j}"] = _canonical(*entry)
    for (i, j), entry in _REFERENCE_Y.items():
        reference[f"Y_{i},{j}"] = _canonical(*entry)
    reference["xi"] = (1, "Z_1b,2b,3b")
    reference["eta"] = (-1, "Z_1,2,3")
    assert set(reference) == set(table)
    failures = [f"{k}: generated {table[k]} vs reference {v}" for k, v in sorted(reference.items()) if table[k] != v]
    z_ok = all(table[k] == v for k, v in reference.items() if v[1].startswith("Z"))
    _report(8, "mirror dictionary vs reference X~/Y~", failures, len(reference), time.perf_counter() - t0, 5,
            f" (Z, xi, eta entries {'all match' if z_ok else 'MISMATCH'})")


def test_criterion_09_majorana():
    t0 = time.perf_counter()
    rng = random.Random(9)
    failures, total = [], 0

    def check(ok, what):
        nonlocal total
        total += 1
        if not ok:
            failures.append(what)

    for t in range(100):
        N = 8 if t % 2 else rng.randint(1, 7)
        a, c = rand_state(rng, N), rand_state(rng, N)
        check(_herm(spin_flip(a), c) == mukai(a, c), f"<flip a|c> = (a,c), N={N}")
        check(spin_flip(spin_flip(a)) == a.scale(pairing_symmetry(N)), f"flip twice, N={N}")
        if N == 8:
            check(spin_flip(spin_flip(a)) == a, "flip is an involution at N=8")
    for _ in range(20):
        g = G_state([rand_rational(rng) for _ in range(8)])
        check(is_majorana(g), "real G(y) is Majorana")
        check(g.is_zero() or not is_majorana(g.scale(GaussianRational(0, 1))), "i G(y) is not Majorana")
    for _ in range(10):
        psi = embed_single(rand_qubit(rng))
        maj = psi + spin_flip(psi)
        check(is_majorana(maj), "psi + flip(psi) is Majorana")
        R, rho = four_fermion_r(maj), rho_tensor(maj)
        check(all(R.rows[a][b] == 2 * rho.rows[a][b] for a in range(64) for b in range(64)), "R = 2 rho")
    _report(9, "Majorana / spin flip", failures, total, time.perf_counter() - t0, 30)


def _cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    return main(list(argv), out, err), out.getvalue()


def test_criterion_10_cli_contract(tmp_path):
    t0 = time.perf_counter()
    failures, total = [], 0

    def check(ok, what):
        nonlocal total
        total += 1
        if not ok:
            failures.append(what)

    # round-trip canonicalization
    messy = {"modes": 8, "terms": [
        {"occupied": [5, 6, 7, 8], "coeff": {"re": "2/4", "im": "0"}},
        {"occupied": [1, 3], "coeff": {"re": "0", "im": "0"}},
        {"occupied": [1, 2, 3, 4], "coeff": {"re": "3/6"}},
    ]}
    st, _ = parse_state(json.dumps(messy))
    canon = serialize_state(st)
    check(serialize_state(parse_state(canon)[0]) == canon, "canonical form is a fixed point")
    check([t["occupied"] for t in json.loads(canon)["terms"]] == [[1, 2, 3, 4], [5, 6, 7, 8]], "terms sorted, zeros dropped")
    code, made = _cli("make", "gstate", "--y", "1/2,0,0,0,0,0,0,0")
    check(code == 0 and made == canon, "make gstate reproduces the canonical file")
    path = tmp_path / "g.json"
    path.write_text(made)

    # deterministic seeded reports
    a = _cli("verify", "--suite", "roots", "--trials", "3", "--seed", "11")
    b = _cli("verify", "--suite", "roots", "--trials", "3", "--seed", "11")
    check(a == b and a[0] == 0, "verify report is byte-identical across runs")
    r1 = _cli("invariants", "--state", str(path), "--family", "spin16", "--orders", "1,4")
    r2 = _cli("invariants", "--state", str(path), "--family", "spin16", "--orders", "1,4")
    check(r1 == r2 and r1[0] == 0, "invariants report is byte-identical across runs")

    # documented exit codes, through the installed entry point
    zero = tmp_path / "zero.json"
    zero.write_text(serialize_state(FockState(8)))
    env = dict(os.environ, SPINORLAB_SEED="3")
    cases = [
        (["classify", "--state", str(path)], 0),
        (["verify", "--suite", "no-such-suite"], 2),
        (["make", "embed", "--pattern", "011", "--amps", "1,2,3,4"], 2),
        (["classify", "--state", str(zero)], 3),
        (["invariants", "--state", str(path), "--family", "fourqubit"], 0),
    ]
    for argv, want in cases:
        proc = subprocess.run([sys.executable, "-m", "spinorlab", *argv], capture_output=True, text=True, env=env)
        check(proc.returncode == want, f"{' '.join(argv[:2])} exits {proc.returncode}, expected {want}")
    proc = subprocess.run([sys.executable, "-m", "spinorlab", "verify", "--suite", "classify", "--trials", "2"],
                          capture_output=True, text=True, env=env)
    check(proc.returncode == 0 and json.loads(proc.stdout)["suite"]["seed"] == 3, "SPINORLAB_SEED is honoured")
    _report(10, "CLI contract", failures, total, time.perf_counter() - t0, 30)
