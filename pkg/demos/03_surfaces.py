"""Diagonal cubic surfaces: local solvability, descent witnesses and point search.

Three surfaces are contrasted:
  * 5x^3 + 9y^3 + 10z^3 + 12w^3 = 0, everywhere locally solvable yet with no
    rational point (a Brauer-Manin counterexample);
  * x^3 + 10y^3 + 55z^3 + 22w^3 = 0 from the three-prime family with 2, 11, 5;
  * 21x^3 + y^3 + 2z^3 + 5w^3 = 0, where a constructive criterion applies.
"""

from diagcubic.surface import (
    everywhere_local_surface,
    normalize,
    surface_point_search,
    theorem28_pipeline,
    theorem33_witness_search,
    theorem35_criteria,
)

for coeffs in [(5, 9, 10, 12), (1, 10, 55, 22), (21, 1, 2, 5)]:
    s = normalize(*coeffs)
    print(s.describe())
    ok, splittings = everywhere_local_surface(s)
    print("  everywhere locally solvable:", ok)
    for p, w in splittings.items():
        if w is not None:
            print(f"    p = {p}: splitting C = {w.C}")
    report = theorem35_criteria(s)
    print("  criteria:", report.labels or "none")
    witness = theorem33_witness_search(s)
    if witness:
        print(f"  descent obstruction witness at p1 = {witness.p1.prime}, p3 = {witness.p3.prime}")
    pt = surface_point_search(s, 12)
    print("  smallest point with |x_i| <= 12:", pt)
    print()

rep = theorem28_pipeline(2, 11, 5, search=20)
print("three-prime family for (2, 11, 5):")
print("  A =", rep.A, " torsor:", rep.torsor)
print("  torsor point:", rep.torsor_point_Q, " surface point:", rep.surface_point)
print(" ", rep.conditional_statement)
