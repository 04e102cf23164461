"""Walk through the sqrt(-3)-Selmer computation for x^3 + y^3 = 550 z^3.

550 = 2 * 5^2 * 11, and all three primes are inert in Q(w), so the candidate
classes are w^m times products of 2, 5, 11 to exponents 0..2.  Most of them
fail a local test; we print which place kills each one.
"""

from diagcubic.selmer import candidate_alphas, compute_selmer

A = 550
result = compute_selmer(A)

print(f"A = {A}: {result.candidates_tested} candidate classes")
for alpha in candidate_alphas(A):
    verdicts = result.verdicts[str(alpha)]
    failing = [v for v in verdicts if not v.solvable]
    if failing:
        v = failing[0]
        print(f"  {str(alpha):>14}  rejected at {v.place:<8} ({v.case})")
    else:
        print(f"  {str(alpha):>14}  everywhere locally solvable")

print()
print("basis:", ", ".join(str(b) for b in result.basis))
print(f"dimension {result.dimension}, s = {result.s}, s0 = {result.s0}, root sign {result.root_sign:+d}")
for cls, pt in result.c_witnesses:
    print(f"global point on the torsor for {cls}: {pt.as_list()}")
print(result.conditional_statement())
