"""Check I_2p(G(y)) = (-1)^p 2^(2p-1) Pi_2p(x(y)) at random rational y.

    python3 scripts/headline_check.py --points 5 --seed 0 [--generic]

The fast path uses the closed-form R tensor of G(y); --generic also runs the
full 256x256 pair-trace route on the Fock state.
"""

import argparse
import random
import time
from fractions import Fraction

from spinorlab.invariants import SPIN16_ORDERS, spin16_invariants
from spinorlab.roots import G_state, headline_rhs, spin16_invariants_fast


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--points", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--generic", action="store_true")
    args = ap.parse_args()
    rng = random.Random(args.seed)
    bad = 0
    for k in range(args.points):
        y = [Fraction(rng.randint(-6, 6), rng.randint(1, 6)) for _ in range(8)]
        t0 = time.perf_counter()
        fast = spin16_invariants_fast(y, SPIN16_ORDERS)
        slow = spin16_invariants(G_state(y), SPIN16_ORDERS) if args.generic else None
        dt = time.perf_counter() - t0
        for p_ in SPIN16_ORDERS:
            rhs = headline_rhs(y, p_)
            ok = fast[p_] == rhs and (slow is None or slow[p_] == rhs)
            bad += not ok
            if not ok:
                print(f"  point {k} 2p={2 * p_}: lhs {fast[p_]} rhs {rhs}")
        print(f"point {k}: y = {[str(v) for v in y]}  ({dt:.2f} s)")
    print("all orders agree" if not bad else f"{bad} mismatches")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
