"""JSON state files (format 1) and report serialisation.

A state file looks like

    {"modes": 8, "scalar": "gaussian-rational",
     "terms": [{"occupied": [1, 2, 3, 4], "coeff": {"re": "1/1", "im": "0/1"}}, ...]}

Modes are 1-based; for an embedded n-qubit state mode n+k is the barred mode k.
Rationals are "p/q" strings.  The canonical form sorts terms by occupation
bitmask, writes reduced fractions and drops zero coefficients.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction

from .fock import MAX_MODES, FockState, mask_of, occupied
from .scalars import GaussianRational, parse_rational, rational_str, re_im, simplify

EXACT = "gaussian-rational"
FLOAT = "complex-float"


class StateFileError(ValueError):
    pass


def _parse_coeff(c, scalar: str):
    if not isinstance(c, dict) or set(c) - {"re", "im"} or "re" not in c:
        raise StateFileError(f"coefficient must be an object with re/im strings, got {c!r}")
    re_s, im_s = c["re"], c.get("im", "0")
    if scalar == EXACT:
        try:
            re, im = parse_rational(re_s), parse_rational(im_s)
        except ValueError as exc:
            raise StateFileError(str(exc)) from None
        return simplify(GaussianRational(re, im))
    if not isinstance(re_s, str) or not isinstance(im_s, str):
        raise StateFileError("float coefficients must be given as strings")
    try:
        return complex(float(re_s), float(im_s))
    except ValueError:
        raise StateFileError(f"malformed float coefficient {c!r}") from None


def parse_state(text: str) -> tuple[FockState, str]:
    """Parse a state file; returns (state, scalar kind)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StateFileError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise StateFileError("state file must be a JSON object")
    modes = doc.get("modes")
    if not isinstance(modes, int) or isinstance(modes, bool) or not 1 <= modes <= MAX_MODES:
        raise StateFileError(f"modes must be an integer in 1..{MAX_MODES}, got {modes!r}")
    scalar = doc.get("scalar", EXACT)
    if scalar not in (EXACT, FLOAT):
        raise StateFileError(f"scalar must be {EXACT!r} or {FLOAT!r}, got {scalar!r}")
    terms = doc.get("terms")
    if not isinstance(terms, list):
        raise StateFileError("terms must be a list")
    out = {}
    for t in terms:
        if not isinstance(t, dict) or "occupied" not in t or "coeff" not in t:
            raise StateFileError(f"each term needs 'occupied' and 'coeff': {t!r}")
        occ = t["occupied"]
        if not isinstance(occ, list) or any(not isinstance(i, int) or isinstance(i, bool) for i in occ):
            raise StateFileError(f"occupied must be a list of integers: {occ!r}")
        if any(b <= a for a, b in zip(occ, occ[1:])):
            raise StateFileError(f"occupied list must be strictly ascending: {occ}")
        if occ and not (1 <= occ[0] and occ[-1] <= modes):
            raise StateFileError(f"mode out of range 1..{modes}: {occ}")
        m = mask_of(occ)
        if m in out:
            raise StateFileError(f"duplicate monomial {occ}")
        out[m] = _parse_coeff(t["coeff"], scalar)
    return FockState(modes, out), scalar


def _coeff_json(c, scalar: str) -> dict:
    re, im = re_im(c)
    if scalar == EXACT:
        return {"re": rational_str(re), "im": rational_str(im)}
    return {"re": repr(float(re)), "im": repr(float(im))}


def state_to_doc(state: FockState, scalar: str = EXACT) -> dict:
    if scalar not in (EXACT, FLOAT):
        raise ValueError(f"unknown scalar kind {scalar!r}")
    terms = [{"occupied": list(occupied(m)), "coeff": _coeff_json(c, scalar)} for m, c in sorted(state.items())]
    return {"modes": state.modes, "scalar": scalar, "terms": terms}


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def serialize_state(state: FockState, scalar: str = EXACT) -> str:
    return dumps(state_to_doc(state, scalar))


def digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def exactify(state: FockState) -> FockState:
    """Replace float coefficients by the exact binary rationals they denote."""
    out = {}
    for m, c in state.items():
        if isinstance(c, complex):
            out[m] = simplify(GaussianRational(Fraction(c.real), Fraction(c.imag)))
        elif isinstance(c, float):
            out[m] = Fraction(c)
        else:
            out[m] = c
    return FockState(state.modes, out)


def value_json(v) -> dict:
    re, im = re_im(v)
    if isinstance(re, Fraction) or isinstance(re, int):
        return {"re": rational_str(re), "im": rational_str(im)}
    return {"re": repr(float(re)), "im": repr(float(im))}
