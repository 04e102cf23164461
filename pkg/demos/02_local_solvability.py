"""Compare the closed-form local decisions with brute-force digit search.

The closed-form answer comes from valuation patterns, residue symbols and the
Q_3 classification.  The brute-force side knows none of that: it just lifts
digits until Hensel's lemma certifies a point or the certified depth runs out.
"""

import random

from diagcubic.localsolve import CurveSpec, solvable_Qp
from diagcubic.oracle import brute_local, count_solutions_mod

print("x^3 + 2y^3 = 5z^3 modulo 9:", count_solutions_mod(CurveSpec(1, 2, 5), 9).nontrivial_solutions, "primitive solutions")
print("decision over Q_3:", solvable_Qp(CurveSpec(1, 2, 5), 3))
print()

rng = random.Random(7)
disagreements = 0
for _ in range(60):
    a, b, c = (rng.choice([t for t in range(-40, 41) if t]) for _ in range(3))
    p = rng.choice([2, 3, 5, 7, 13, 19])
    curve = CurveSpec(a, b, c)
    fast = solvable_Qp(curve, p)
    slow = brute_local(curve, p)
    flag = "" if fast.solvable == slow.solvable else "  <-- mismatch"
    disagreements += fast.solvable != slow.solvable
    print(f"{str(curve):<32} Q_{p:<3} {str(fast.solvable):<6} via {fast.case:<20} brute {slow.solvable}{flag}")
print(f"\n{disagreements} disagreements")
