import sys
sys.path.insert(0, "src")
from fractions import Fraction
from stableforms import parse_structure_equations, parse_form
from stableforms.hitchin import shf_check, is_normalized
from stableforms.su2 import (
    ComplexForm, RotationAngle, SU2Structure,
    su2_axioms_check, embed_su3, extract_su2, rotate, re_omega_split,
    susy_check, from_shf,
)

P = lambda s, d=1: parse_form(s, 6, d)
C = lambda re, im: ComplexForm(P(re), P(im))


def cf(re, im):
    return ComplexForm(P(re), P(im))


EXAMPLES = [
    ("e11e11", "(0, -e13, -e12, 0, -e46, -e45)",
     cf("e1", "e4"), P("e23 + 2*e56", 2),
     cf("e2", "e3").wedge(cf("e5 - e6", "e5 + e6"))),
    ("g51R", "(0, 0, 0, 0, e12, e13)",
     cf("e1", "e4"), P("e25 - e36", 2),
     cf("e2", "e5").wedge(cf("-e3", "e6"))),
    ("a57R", "(e15, -e25, -e35, e45, 0, 0)",
     cf("e5", "e6"), P("-e13 + e24", 2),
     cf("e3", "e1").wedge(cf("e2", "e4"))),
    ("a517R(0)", "(e25, -e15, e45, -e35, 0, 0)",
     cf("e5", "e6"), P("e13 + e24", 2),
     cf("e1", "e3").wedge(cf("e2", "e4"))),
    ("a517R(1)", "(e15+e25, -e15+e25, -e35+e45, -e35-e45, 0, 0)",
     cf("e5", "e6"), P("e13 + e24", 2),
     cf("e1", "e3").wedge(cf("e2", "e4"))),
    ("a517R(2)", "(2*e15+e25, -e15+2*e25, -2*e35+e45, -e35-2*e45, 0, 0)",
     cf("e5", "e6"), P("e13 + e24", 2),
     cf("e1", "e3").wedge(cf("e2", "e4"))),
    ("g6N3", "(0, 0, 0, e12, e13, e23)",
     cf("e1", "e6"), P("-2*e34 - e25", 2),
     cf("2*e4", "e3").wedge(cf("e5", "e2"))),
    ("g638", "(e23, -e36, e26, e26-e56, e36+e46, 0)",
     cf("e6", "2*e1"), P("e34 - e25", 2),
     cf("e3", "e4").wedge(cf("-e2", "e5"))),
    ("g654", "(e16+e35, -e26+e45, e36, -e46, 0, 0)",
     cf("e5", "e6"), P("e14 + e23", 2),
     cf("e1", "e4").wedge(cf("e2", "e3"))),
    ("g6118", "(-e16+e25, -e15-e26, e36-e45, e35+e46, 0, 0)",
     cf("e6", "e5"), P("e14 + e23", 2),
     cf("e1", "e4").wedge(cf("e2", "e3"))),
]

angle = RotationAngle(Fraction(3, 5), Fraction(4, 5))
print("angle:", angle, "doubled:", angle.cos2, angle.sin2,
      "intermediate:", angle.intermediate)
print()

for name, eqs, alpha, omega, oc in EXAMPLES:
    g = parse_structure_equations(eqs, name=name)
    s = SU2Structure(algebra=g, alpha=alpha, omega=omega, omega_complex=oc)
    rep = su2_axioms_check(s)
    emb = embed_su3(s)
    shf = shf_check(g, emb.f, emb.rho)
    norm, ratio = is_normalized(emb.f, emb.rho)
    line = (f"{name:10s} axioms={'pass' if rep.ok else 'FAIL'} "
            f"shf={'pass' if shf.overall else 'FAIL'} "
            f"lam={rep.lambda_tilde} ratio={ratio}")
    if not rep.ok:
        line += " | " + "; ".join(
            f"{k}={v}" for k, v in rep.as_dict().items()
            if v is False or v is None)
        line += f" norm_detail={rep.norm_detail!r}"
    print(line)
    if not shf.overall:
        print(shf)
        continue
    data = from_shf(s, angle, report=shf)
    srep = susy_check(data, g)
    print(f"{'':10s} susy={'pass' if srep.ok else 'FAIL'}")
    if not srep.ok:
        print(srep)
    # second angle
    data2 = from_shf(s, RotationAngle(Fraction(4, 5), Fraction(3, 5)),
                     report=shf)
    srep2 = susy_check(data2, g)
    if not srep2.ok:
        print(f"{'':10s} susy(4/5,3/5) FAIL")
        print(srep2)

print()
print("=== Table-row reproduction ===")
g654 = parse_structure_equations("(e16+e35, -e26+e45, e36, -e46, 0, 0)")
s654 = SU2Structure(algebra=g654, alpha=cf("e5", "e6"), omega=P("e14+e23", 2),
                    omega_complex=cf("e1", "e4").wedge(cf("e2", "e3")))
emb = embed_su3(s654)
print("g654 F:", emb.f, "| expect e14 + e23 + e56")
print("g654 rho:", emb.rho, "| expect e125 - e136 + e246 + e345")
g6118 = parse_structure_equations("(-e16+e25, -e15-e26, e36-e45, e35+e46, 0, 0)")
s6118 = SU2Structure(algebra=g6118, alpha=cf("e6", "e5"),
                     omega=P("e14+e23", 2),
                     omega_complex=cf("e1", "e4").wedge(cf("e2", "e3")))
emb2 = embed_su3(s6118)
print("g6118 F:", emb2.f, "| expect e14 + e23 - e56")
print("g6118 rho:", emb2.rho, "| expect e126 - e135 + e245 + e346")

print()
print("=== extract round trip on g654 ===")
back = extract_su2(g654, emb, s654.alpha)
print("omega match:", (back.omega - s654.omega).is_zero())
print("Omega match:", (back.omega_complex - s654.omega_complex).is_zero())
emb_back = embed_su3(back)
print("re-embed F/rho/rho_hat match:",
      (emb_back.f - emb.f).is_zero(), (emb_back.rho - emb.rho).is_zero(),
      (emb_back.rho_hat - emb.rho_hat).is_zero())

print()
print("=== rotate / split sanity (flat model) ===")
flat = parse_structure_equations("(0, 0, 0, 0, 0, 0)", name="flat")
sflat = SU2Structure(algebra=flat, alpha=cf("e5", "e6"),
                     omega=P("e12+e34", 2),
                     omega_complex=cf("e1", "e2").wedge(cf("e3", "e4")))
print("flat axioms:", su2_axioms_check(sflat).ok)
rot = rotate(sflat, RotationAngle.from_double(Fraction(-7, 25),
                                              Fraction(24, 25)))
print("rotated axioms:", su2_axioms_check(rot).ok)
ident = rotate(sflat, RotationAngle.from_double(1, 0))
print("identity rotation fixes:",
      (ident.omega - sflat.omega).is_zero()
      and (ident.omega_complex - sflat.omega_complex).is_zero())
par, perp = re_omega_split(sflat.omega, sflat.omega_complex.re,
                           RotationAngle.from_double(0, 1))
print("split at (0,1): par == (ReOmega+omega)/2:",
      (par - (sflat.omega_complex.re + sflat.omega) * Fraction(1, 2)).is_zero(),
      "sum:", (par + perp - sflat.omega_complex.re).is_zero())
from stableforms.forms import Form
bad = SU2Structure(algebra=flat, alpha=cf("e5", "e6"), omega=P("e12+e34", 2),
                   omega_complex=ComplexForm(P("e13+e24", 2),
                                             Form.zero(6, 2)))
badrep = su2_axioms_check(bad)
print("real Omega fails Omega^2=0:", not badrep.omega_complex_sq_zero)
try:
    extract_su2(flat, embed_su3(sflat), cf("2*e5", "2*e6"))
    print("norm error NOT raised (BUG)")
except ValueError as e:
    print("norm error raised:", e)
