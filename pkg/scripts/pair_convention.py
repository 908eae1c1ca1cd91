"""How the pair-summation convention rescales the trace invariants.

Summing each antisymmetric index pair once ("unordered") or over both orders
("ordered") differs by 2^p at degree 2p.  Prints both for one four-qubit state
together with the f' and g values they relate to.
"""

import random

from spinorlab.covariants import four_fermion_r
from spinorlab.embed import embed_single
from spinorlab.invariants import f_prime_invariants, g_invariants, pair_traces
from spinorlab.suites import rand_qubit

ORDERS = (1, 3, 4, 6)

q = rand_qubit(random.Random(0), real=True)
R = four_fermion_r(embed_single(q))
un = pair_traces(R, ORDERS, "unordered")
od = pair_traces(R, ORDERS, "ordered")
g = g_invariants(q, ORDERS)
f = f_prime_invariants(q, ORDERS)
print(f"{'2p':>3} {'ordered/unordered':>18} {'unordered/f_prime':>18} {'f_prime/g':>10}")
for p_ in ORDERS:
    print(f"{2 * p_:>3} {str(od[p_] / un[p_]):>18} {str(un[p_] / f[p_]):>18} {str(f[p_] / g[p_]):>10}")
