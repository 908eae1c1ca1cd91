"""Exact Jacobian ranks of the invariant families at random rational points."""

import argparse
import random

from spinorlab import linalg
from spinorlab.invariants import SPIN16_ORDERS, g_invariants
from spinorlab.roots import Pi_2p, jacobian_rank, semisimple_qubit_state, spin16_jacobian
from spinorlab.suites import generic_point


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)

    x = generic_point(rng, 8)
    r = jacobian_rank([lambda v, k=k: Pi_2p(v, k) for k in SPIN16_ORDERS], [2 * k for k in SPIN16_ORDERS], x)
    print(f"Pi_2p, 2p in {[2 * k for k in SPIN16_ORDERS]}: rank {r} of 8")

    y = generic_point(rng, 8)
    print(f"restricted spin16 invariants on G(y): rank {linalg.rank(spin16_jacobian(y))} of 8")

    x4 = generic_point(rng, 4)
    polys = [lambda v, k=k: g_invariants(semisimple_qubit_state(v), (k,))[k] for k in (1, 3, 4, 6)]
    print(f"g_2, g_6, g_8, g_12 on the semisimple family: rank {jacobian_rank(polys, [2, 6, 8, 12], x4)} of 4")


if __name__ == "__main__":
    main()
