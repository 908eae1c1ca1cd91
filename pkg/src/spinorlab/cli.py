"""spinorlab command line.

Verbs: invariants, verify, classify, make.  Mode labels in state files are
1-based; for an embedded n-qubit state the barred mode k-bar is mode k + n.

Exit codes:
  0  success
  1  a verification suite reported a failing identity
  2  parse error, unknown suite, bad flag value or arity mismatch
  3  shape mismatch (state incompatible with the family) or zero state
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys
from fractions import Fraction

from . import invariants as inv_mod
from .classify import nullity
from .clifford import chirality
from .embed import QubitState, SupportError, all_patterns, embed_pattern, embed_single, extract_qubit, pattern_monomials
from .fock import FockState, particle_sectors
from .pairing import is_majorana
from .roots import G_state, semisimple_qubit_state
from .scalars import parse_rational
from .statefile import (
    EXACT, FLOAT, StateFileError, digest, dumps, exactify, parse_state, serialize_state, state_to_doc, value_json,
)
from .suites import SUITES, run_suite

REPORT_FORMAT = "spinorlab-report-1"
FAMILIES = ("spin16", "sl8", "fourqubit", "g", "fprime")
DEFAULT_ORDERS = {
    "spin16": inv_mod.SPIN16_ORDERS,
    "sl8": inv_mod.SL8_ORDERS,
    "g": inv_mod.G_ORDERS,
    "fprime": inv_mod.G_ORDERS,
}

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_SHAPE = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


# ---------------------------------------------------------------------------
# input helpers


def _csv_rationals(text: str, flag: str) -> list[Fraction]:
    try:
        return [parse_rational(t) for t in text.split(",")]
    except ValueError as exc:
        raise CliError(EXIT_USAGE, f"{flag}: {exc}") from None


def _orders(text: str | None, family: str) -> tuple[int, ...]:
    if text is None:
        return tuple(DEFAULT_ORDERS[family])
    try:
        out = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise CliError(EXIT_USAGE, f"--orders must be comma-separated integers, got {text!r}") from None
    if any(k < 1 for k in out):
        raise CliError(EXIT_USAGE, "--orders must be positive")
    return out


def _read_state(path: str | None) -> tuple[FockState, str, str]:
    """(state, scalar kind, digest of the file bytes)."""
    if path is None:
        raise CliError(EXIT_USAGE, "--state FILE is required")
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(EXIT_USAGE, f"cannot read {path}: {exc.strerror}") from None
    try:
        state, scalar = parse_state(text)
    except StateFileError as exc:
        raise CliError(EXIT_USAGE, f"{path}: {exc}") from None
    return state, scalar, digest(text)


def _qubits_of(state: FockState) -> tuple[QubitState, tuple[int, ...]]:
    """Find the pattern whose subspace holds the state and read off the amplitudes."""
    if state.modes % 2 or state.modes > 8:
        raise CliError(EXIT_SHAPE, f"a qubit state needs 2n modes with n <= 4, got {state.modes}")
    n_ = state.modes // 2
    support = {m for m, _ in state.items()}
    for pat in all_patterns(n_):
        if support <= pattern_monomials(n_, pat):
            return extract_qubit(state, pat), pat
    raise CliError(EXIT_SHAPE, "state does not lie in any qubit-embedding subspace")


# ---------------------------------------------------------------------------
# reports


def _report(command: list[str], input_digest: str | None) -> dict:
    return {"format": REPORT_FORMAT, "command": command, "input_digest": input_digest, "values": {}}


def _put(report: dict, label: str, value, provenance: str) -> None:
    report["values"][label] = {"value": value_json(value), "provenance": provenance}


def _emit(report: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(dumps(report))
        return
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if "suite" in report:
        w.writerow(["check", "passed", "detail"])
        for c in report["suite"]["checks"]:
            w.writerow([c["name"], "true" if c["passed"] else "false", c["detail"]])
    else:
        w.writerow(["label", "re", "im"])
        for label, entry in report["values"].items():
            w.writerow([label, entry["value"]["re"], entry["value"]["im"]])
        for label, val in report.get("properties", {}).items():
            w.writerow([label, val if not isinstance(val, bool) else str(val).lower(), ""])
    out.write(buf.getvalue())


# ---------------------------------------------------------------------------
# verbs


def cmd_invariants(args, argv) -> tuple[dict, int]:
    if args.family is None:
        raise CliError(EXIT_USAGE, f"--family is required (one of {', '.join(FAMILIES)})")
    state, scalar, dg = _read_state(args.state)
    rep = _report(argv, dg)
    note = ""
    if scalar == FLOAT:
        state = exactify(state)
        note = "; inputs exactified from binary floats"
    fam = args.family
    if fam == "fourqubit":
        q, pat = _qubits_of(state)
        if q.n != 4:
            raise CliError(EXIT_SHAPE, f"fourqubit family needs a four-qubit (8-mode) state, got {q.n} qubits")
        values = inv_mod.fourqubit_invariants(q)
        tags = {"H": "contraction", "L": "determinant", "M": "determinant", "N": "determinant",
                "s3": "gram-determinant", "D": "from s3", "E": "closed-form", "F": "closed-form"}
        names = {"GammaInv": "Gamma"}
        for k, v in values.as_dict().items():
            _put(rep, names.get(k, k), v, tags.get(k, "closed-form") + note)
        rep["pattern"] = "".join(map(str, pat))
        return rep, EXIT_OK
    orders = _orders(args.orders, fam)
    if fam in ("g", "fprime"):
        q, pat = _qubits_of(state)
        if q.n != 4:
            raise CliError(EXIT_SHAPE, f"{fam} family needs a four-qubit (8-mode) state, got {q.n} qubits")
        if fam == "g":
            vals = inv_mod.g_invariants(q, orders)
            label, tag = "g", "block-trace"
        else:
            vals = inv_mod.f_prime_invariants(q, orders)
            label, tag = "f'", "28x28-trace"
        for k in orders:
            _put(rep, f"{label}_{2 * k}", vals[k], tag + note)
        rep["pattern"] = "".join(map(str, pat))
        return rep, EXIT_OK
    if state.modes != 8:
        raise CliError(EXIT_SHAPE, f"{fam} family needs an 8-mode state, got {state.modes}")
    if state.is_zero():
        raise CliError(EXIT_SHAPE, "state is zero")
    try:
        if fam == "sl8":
            vals = inv_mod.sl8_trace_invariants(state, orders, args.pairs)
            label = "I"
        else:
            vals = inv_mod.spin16_invariants(state, orders, args.pairs)
            label = "II"
    except ValueError as exc:
        raise CliError(EXIT_SHAPE, str(exc)) from None
    for k in orders:
        _put(rep, f"{label}_{2 * k}", vals[k], f"pair-trace ({args.pairs} pairs){note}")
    return rep, EXIT_OK


def cmd_verify(args, argv) -> tuple[dict, int]:
    if args.suite is None:
        raise CliError(EXIT_USAGE, f"--suite is required (one of {', '.join(SUITES)})")
    if args.suite not in SUITES:
        raise CliError(EXIT_USAGE, f"unknown suite {args.suite!r}; known: {', '.join(SUITES)}")
    if args.trials < 1:
        raise CliError(EXIT_USAGE, "--trials must be positive")
    checks = run_suite(args.suite, args.trials, args.seed)
    rep = _report(argv, None)
    failed = [c for c in checks if not c.passed]
    rep["suite"] = {
        "name": args.suite,
        "trials": args.trials,
        "seed": args.seed,
        "passed": len(checks) - len(failed),
        "failed": len(failed),
        "checks": [
            {"name": c.name, "passed": c.passed, "detail": c.detail,
             "state": state_to_doc(c.state) if (c.state is not None and not c.passed) else None}
            for c in checks
        ],
    }
    return rep, EXIT_FAIL if failed else EXIT_OK


def cmd_classify(args, argv) -> tuple[dict, int]:
    state, scalar, dg = _read_state(args.state)
    if state.is_zero():
        raise CliError(EXIT_SHAPE, "classification of the zero state is not defined")
    majorana = is_majorana(state)
    if scalar == FLOAT:
        state = exactify(state)
    rep = _report(argv, dg)
    k = nullity(state)
    rep["properties"] = {
        "modes": state.modes,
        "chirality": chirality(state).name.lower(),
        "particle_sectors": sorted(particle_sectors(state)),
        "nullity": k,
        "pure": k == state.modes,
        "majorana": majorana,
    }
    return rep, EXIT_OK


def cmd_make(args, argv) -> tuple[str, int]:
    kind = args.kind
    if kind == "semisimple4q":
        x = _csv_rationals(args.x or "", "--x")
        if len(x) != 4:
            raise CliError(EXIT_USAGE, f"semisimple4q takes 4 values in --x, got {len(x)}")
        st = embed_single(semisimple_qubit_state(x))
    elif kind == "gstate":
        y = _csv_rationals(args.y or "", "--y")
        if len(y) != 8:
            raise CliError(EXIT_USAGE, f"gstate takes 8 values in --y, got {len(y)}")
        st = G_state(y)
    elif kind == "embed":
        if not args.pattern or set(args.pattern) - {"0", "1"}:
            raise CliError(EXIT_USAGE, f"--pattern must be a bit string, got {args.pattern!r}")
        pat = tuple(int(c) for c in args.pattern)
        if args.amps is not None:
            amps = _csv_rationals(args.amps, "--amps")
            n_ = len(pat)
            if len(amps) != 1 << n_:
                raise CliError(EXIT_USAGE, f"pattern of length {n_} needs {1 << n_} amplitudes, got {len(amps)}")
            q = QubitState(n_, tuple(amps))
        else:
            src, _, _ = _read_state(args.state)
            q, _ = _qubits_of(src)
            if q.n != len(pat):
                raise CliError(EXIT_USAGE, f"pattern length {len(pat)} does not match the {q.n}-qubit input")
        st = embed_pattern(q, pat)
    else:  # argparse restricts the choices
        raise CliError(EXIT_USAGE, f"unknown kind {kind!r}")
    return serialize_state(st, EXACT), EXIT_OK


# ---------------------------------------------------------------------------


def _default_seed() -> int:
    raw = os.environ.get("SPINORLAB_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise CliError(EXIT_USAGE, f"SPINORLAB_SEED must be an integer, got {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="spinorlab",
        description="Exact spinor and qubit invariants over a fermionic Fock space.",
        epilog="Modes are 1-based; for n qubits the barred mode k-bar is mode k+n. "
               "Exit codes: 0 ok, 1 identity failure, 2 parse/usage error, 3 shape mismatch or zero state.",
    )
    sub = ap.add_subparsers(dest="verb", required=True)

    p_inv = sub.add_parser("invariants", help="compute an invariant family of a state file")
    p_inv.add_argument("--state", metavar="FILE")
    p_inv.add_argument("--family", choices=FAMILIES)
    p_inv.add_argument("--orders", metavar="CSV", help="values of p (the invariant has degree 2p)")
    p_inv.add_argument("--pairs", choices=inv_mod.PAIR_CONVENTIONS, default="unordered",
                       help="sum antisymmetric index pairs once (default) or over ordered pairs")
    p_inv.add_argument("--output", choices=("json", "csv"), default="json")

    p_ver = sub.add_parser("verify", help="run a seeded identity battery")
    p_ver.add_argument("--suite", metavar="NAME", help=", ".join(SUITES))
    p_ver.add_argument("--trials", type=int, default=20)
    p_ver.add_argument("--seed", type=int, default=None, help="default: $SPINORLAB_SEED or 0")
    p_ver.add_argument("--output", choices=("json", "csv"), default="json")

    p_cls = sub.add_parser("classify", help="chirality, nullity, purity and reality of a state")
    p_cls.add_argument("--state", metavar="FILE")
    p_cls.add_argument("--output", choices=("json", "csv"), default="json")

    p_mk = sub.add_parser("make", help="write a canonical state file to stdout")
    p_mk.add_argument("kind", choices=("semisimple4q", "gstate", "embed"))
    p_mk.add_argument("--x", metavar="CSV")
    p_mk.add_argument("--y", metavar="CSV")
    p_mk.add_argument("--pattern", metavar="BITS")
    p_mk.add_argument("--amps", metavar="CSV", help="2^n rational amplitudes, psi_{0..0} first")
    p_mk.add_argument("--state", metavar="FILE", help="embedded qubit state to re-embed")
    return ap


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.verb == "verify" and args.seed is None:
            args.seed = _default_seed()
        if args.verb == "make":
            text, code = cmd_make(args, argv)
            out.write(text)
            return code
        handler = {"invariants": cmd_invariants, "verify": cmd_verify, "classify": cmd_classify}[args.verb]
        report, code = handler(args, argv)
        _emit(report, args.output, out)
        return code
    except CliError as exc:
        err.write(f"spinorlab: error: {exc}\n")
        return exc.code
    except SupportError as exc:
        err.write(f"spinorlab: error: {exc}\n")
        return EXIT_SHAPE


if __name__ == "__main__":
    sys.exit(main())
