"""Dump the three-qubit mirror dictionary generated by Gamma_1 Gamma_2 Gamma_3.

Each line reads: output amplitude = sign * input amplitude.  Indices b are the
barred modes 4, 5, 6.
"""

from spinorlab.embed import mirror_table

for out, (sign, src) in sorted(mirror_table().items()):
    print(f"{out:>10} = {'+' if sign > 0 else '-'}{src}")
