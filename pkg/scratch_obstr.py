import sys
sys.path.insert(0, "src")
from fractions import Fraction
from stableforms import parse_structure_equations, parse_form
from stableforms.obstructions import (
    generic_pair, solve_compatibility, stability_forced_coordinates,
    certify_isotropic_covector, certify_sign_pair,
    certify_contraction_cube, search_witness, EliminationError,
)
from stableforms.scalars import Poly

E = lambda i: [Fraction(1 if j == i else 0) for j in range(6)]

def show_relations(sol):
    for a in sorted(sol.relations, key=lambda s: int(s[1:])):
        num, den = sol.relations[a]
        d = "*".join(n if e == 1 else f"{n}^{e}" for n, e in sorted(den.items()))
        print(f"    {a} = {num}" + (f" / ({d})" if d else ""))

print("=== fixture 1: (e26, e36, 0, e46, -e56, 0) — covector e6 ===")
g63 = parse_structure_equations("(e26, e36, 0, e46, -e56, 0)", name="fix1")
pair = generic_pair(g63)
print("forced:", stability_forced_coordinates(pair))
sol = solve_compatibility(pair, chart="b5")
print("chart b5 pivots:", sol.pivots, "clearing:", sol.clearing)
show_relations(sol)
c_ex = certify_isotropic_covector(g63, parse_form("e6", 6, 1), mode="exact")
print("exact:", c_ex.verdict, c_ex.side_conditions)
c_rand = certify_isotropic_covector(g63, parse_form("e6", 6, 1))
print("randomized:", c_rand.verdict, "bound:", c_rand.failure_bound)
print()

print("=== fixture 2: g6,13-type — zero pattern X=e1, denominators ===")
g613 = parse_structure_equations(
    "(-1/2*e16+e23, -e26, 1/2*e36, e46, 0, 0)", name="fix2")
p2 = generic_pair(g613)
print("forced:", stability_forced_coordinates(p2))
sol2 = solve_compatibility(
    p2, chart="b1",
    prefer_free=("a1", "a2", "a3", "a6", "a10", "a11"))
print("chart b1 pivots:", sol2.pivots, "clearing:", sol2.clearing)
show_relations(sol2)
c2_ex = certify_sign_pair(g613, E(0), mode="exact")
print("exact:", c2_ex.verdict, c2_ex.pattern, c2_ex.side_conditions)
c2 = certify_sign_pair(g613, E(0))
print("randomized:", c2.verdict, c2.pattern, "bound:", c2.failure_bound)
print()

print("=== fixture 3: g6,70-type — antisym X=e1,Y=e2 ===")
g670 = parse_structure_equations(
    "(-e26+e35, e16+e45, -e46, e36, 0, 0)", name="fix3")
p3 = generic_pair(g670)
sol3 = solve_compatibility(
    p3, chart="b1",
    prefer_free=("a1", "a4", "a5", "a7", "a9", "a10"))
print("chart b1 pivots:", sol3.pivots, "clearing:", sol3.clearing)
show_relations(sol3)
c3_ex = certify_sign_pair(g670, E(0), E(1), mode="exact")
print("exact:", c3_ex.verdict, c3_ex.pattern)
c3 = certify_sign_pair(g670, E(0), E(1))
print("randomized:", c3.verdict, c3.pattern, "bound:", c3.failure_bound)
print()

print("=== fixture 4: A5,15+R — zero pattern X=e1 ===")
a515 = parse_structure_equations(
    "(e15+e25, e25, -e35+e45, -e45, 0, 0)", name="fix4")
c4_ex = certify_sign_pair(a515, E(0), mode="exact")
print("exact:", c4_ex.verdict, c4_ex.pattern, c4_ex.side_conditions)
c4 = certify_sign_pair(a515, E(0))
print("randomized:", c4.verdict, c4.pattern)
print()

print("=== fixture 5: A6,39(3/2) — contraction cube X=e1 ===")
a639 = parse_structure_equations(
    "(-1/2*e16+e45, e15+1/2*e26, 3/2*e36, -3/2*e46, e56, 0)", name="fix5")
c5 = certify_contraction_cube(a639, E(0))
print(c5.verdict, c5.detail)
print()

print("=== fixture 6: N6,1(1,1,-1,-1) — sqrt3 covector ===")
n61 = parse_structure_equations(
    "(e15+e16, -e25-e26, e36, e45, 0, 0)", name="fix6")
alpha = parse_form("(2+sqrt3)*e5 + e6", 6, 1)
c6 = certify_isotropic_covector(n61, alpha)
print("randomized:", c6.verdict, "bound:", c6.failure_bound)
try:
    c6x = certify_isotropic_covector(n61, alpha, mode="exact")
    print("exact:", c6x.verdict, c6x.side_conditions)
except EliminationError as e:
    print("exact: EliminationError:", e)
print()

print("=== soundness: witness algebras must NOT certify ===")
g638 = parse_structure_equations(
    "(e23, -e36, e26, e26-e56, e36+e46, 0)", name="g638")
cf = certify_isotropic_covector(g638, parse_form("e1", 6, 1))
print("g638 alpha=e1:", cf.verdict,
      "counterexample" if cf.counterexample else "NO COUNTEREXAMPLE")
# these three vanish identically on the generic (rank-6) stratum;
# only the sparse sweep catches them on the rank-5 stratum
for name in ("e2", "e3", "e6"):
    cg = certify_isotropic_covector(g638, parse_form(name, 6, 1))
    print(f"g638 alpha={name}:", cg.verdict,
          f"(sweep_points={cg.sweep_points},",
          ("counterexample b=" + str(cg.counterexample.get("b"))
           if cg.counterexample else "NO COUNTEREXAMPLE") + ")")
try:
    cgx = certify_isotropic_covector(g638, parse_form("e2", 6, 1),
                                     mode="exact")
    print("g638 exact alpha=e2:", cgx.verdict, "(must not be certified!)")
except EliminationError as e:
    print("g638 exact alpha=e2: EliminationError (honest):", e)
g51 = parse_structure_equations("(e35, e45, 0, 0, 0, 0)", name="g51R")
for i in range(6):
    cb = certify_contraction_cube(g51, E(i))
    print(f"g5,1+R P22 e{i+1}:", cb.verdict, end=" ")
print()
print()

print("=== search_witness ===")
s1 = search_witness(g63)
print("fix1 search:", s1.kind if s1 else None,
      s1.witness.get("text") if s1 else "")
n617 = parse_structure_equations(
    "(0, e15, e36-e45, e35+e46, 0, 0)", name="n617")
s2 = search_witness(n617)
print("n617 search:", s2.kind if s2 else None,
      s2.witness.get("text") if s2 else "")
s3 = search_witness(g638, budget=60)
print("g638 search (should be None):", s3.kind if s3 else None)
