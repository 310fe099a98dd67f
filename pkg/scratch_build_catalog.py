"""One-off generator for src/stableforms/data/catalog.json."""
import json
import sys
from pathlib import Path

sys.path.insert(0, "src")
from stableforms import parse_form  # noqa: E402


def omega_parts(re1, im1, re2, im2):
    """Real/imaginary part of (re1 + i*im1) ^ (re2 + i*im2) as text."""
    a, b = parse_form(re1, 6, 1), parse_form(im1, 6, 1)
    c, d = parse_form(re2, 6, 1), parse_form(im2, 6, 1)
    re = a.wedge(c) + (-1) * b.wedge(d)
    im = a.wedge(d) + b.wedge(c)
    return str(re), str(im)


def su2(alpha_re, alpha_im, omega, pair=None, omega_re=None, omega_im=None):
    if pair is not None:
        omega_re, omega_im = omega_parts(*pair)
    return {"alpha_re": alpha_re, "alpha_im": alpha_im, "omega": omega,
            "omega_re": omega_re, "omega_im": omega_im}


def hint(kind, witness, when=None):
    case = {"witness": witness}
    if when is not None:
        case["when"] = when
    return kind, case


def obstruction(kind, *cases):
    return {"kind": kind, "cases": list(cases)}


E = []


def entry(name, source, equations, verdict, decomposition, unimodular,
          parameters=(), constraint="", samples=({},), witness=None,
          obstr=None, su2_data=None, notes=""):
    rec = {
        "name": name,
        "source": source,
        "equations": equations,
        "parameters": list(parameters),
        "constraint": constraint,
        "samples": [dict(s) for s in samples],
        "verdict": verdict,
        "decomposition": decomposition,
        "unimodular": unimodular,
    }
    if witness is not None:
        rec["witness"] = {"f": witness[0], "rho": witness[1]}
    if obstr is not None:
        rec["obstruction"] = obstr
    if su2_data is not None:
        rec["su2"] = su2_data
    if notes:
        rec["notes"] = notes
    E.append(rec)


def cov(text, when=None):
    c = {"witness": text}
    if when is not None:
        c["when"] = when
    return c


def vec(text, when=None):
    return cov(text, when)


def pair_case(x, y, when=None):
    c = {"witness": [x, y]}
    if when is not None:
        c["when"] = when
    return c


# ---------------------------------------------------------------- table 1
T1 = "table-1"
IND = "indecomposable"
entry("g_{6,3}^{0,-1}", T1, "(e26, e36, 0, e46, -e56, 0)", "no", IND, True,
      obstr=obstruction("P21-i", cov("e6")))
entry("g_{6,10}^{0,0}", T1, "(e26, e36, 0, e56, -e46, 0)", "no", IND, True,
      obstr=obstruction("P21-i", cov("e6")))
entry("g_{6,13}^{-1,1/2,0}", T1, "(-1/2*e16 + e23, -e26, 1/2*e36, e46, 0, 0)",
      "no", IND, True, obstr=obstruction("P21-ii-zero", vec("e1")))
entry("g_{6,13}^{1/2,-1,0}", T1, "(-1/2*e16 + e23, 1/2*e26, -e36, e46, 0, 0)",
      "no", IND, True, obstr=obstruction("P21-ii-zero", vec("e1")))
entry("g_{6,15}^{-1}", T1, "(e23, e26, -e36, e26 + e46, e36 - e56, 0)",
      "no", IND, True, obstr=obstruction("P21-ii-zero", vec("e4")))
entry("g_{6,18}^{-1,-1}", T1, "(e23, -e26, e36, e36 + e46, -e56, 0)",
      "no", IND, True, obstr=obstruction("P21-i", cov("e6")))
entry("g_{6,21}^{0}", T1, "(e23, 0, e26, e46, -e56, 0)", "no", IND, True,
      obstr=obstruction("P21-i", cov("e6")))
entry("g_{6,36}^{0,0}", T1, "(e23, 0, e26, -e56, e46, 0)", "no", IND, True,
      obstr=obstruction("P21-i", cov("e6")))
entry("g_{6,38}^{0}", T1, "(e23, -e36, e26, e26 - e56, e36 + e46, 0)",
      "yes", IND, True,
      witness=("-2*e16 + e34 - e25", "-2*e135 - 2*e124 + e236 - e456"),
      su2_data=su2("e6", "2*e1", "e34 - e25",
                   omega_re="e23 - e45", omega_im="e24 + e35"),
      notes="su2 record phase-normalized so its embedding reproduces the "
            "stored (f, rho) witness")
entry("g_{6,54}^{0,-1}", T1, "(e16 + e35, -e26 + e45, e36, -e46, 0, 0)",
      "yes", IND, True,
      witness=("e14 + e23 + e56", "e125 - e136 + e246 + e345"),
      su2_data=su2("e5", "e6", "e14 + e23", pair=("e1", "e4", "e2", "e3")))
entry("g_{6,70}^{0,0}", T1, "(-e26 + e35, e16 + e45, -e46, e36, 0, 0)",
      "no", IND, True,
      obstr=obstruction("P21-ii-antisym", pair_case("e1", "e2")))
entry("g_{6,78}", T1, "(-e16 + e25, e45, e24 + e36 + e46, e46, -e56, 0)",
      "no", IND, True, obstr=obstruction("P21-ii-zero", vec("e1")))
entry("g_{6,118}^{0,-1,-1}", T1,
      "(-e16 + e25, -e15 - e26, e36 - e45, e35 + e46, 0, 0)",
      "yes", IND, True,
      witness=("e14 + e23 - e56", "e126 - e135 + e245 + e346"),
      su2_data=su2("e6", "e5", "e14 + e23", pair=("e1", "e4", "e2", "e3")))
entry("n_{6,84}^{s}", T1,
      "(-e45, -e15 - e36, -e14 + e26 - s*e56, e56, -e46, 0)",
      "no", IND, True, parameters=("s",), constraint="s == 1 or s == -1",
      samples=({"s": "1"}, {"s": "-1"}),
      obstr=obstruction("P21-ii-zero", vec("e2")),
      notes="single row covering the sign pair s = 1 and s = -1; the "
            "discrete domain is sampled exhaustively")

# ---------------------------------------------------------------- table 2
T2 = "table-2"
entry("A_{6,13}^{-2/3,1/3,-1}", T2,
      "(-1/3*e16 + e23, -2/3*e26, 1/3*e36, e46, -e56, 0)",
      "yes", IND, False,
      witness=("e13 + e26 + e45",
               "e124 + 2/3*e146 + 4/3*e156 - e234 + e235 + e346"),
      notes="witness rederived so every closure and positivity check "
            "passes exactly")
entry("A_{6,39}^{3/2,-3/2}", T2,
      "(-1/2*e16 + e45, e15 + 1/2*e26, 3/2*e36, -3/2*e46, e56, 0)",
      "no", IND, False, obstr=obstruction("P22", vec("e1")))
entry("A_{6,39}^{1,-1}", T2, "(e45, e15 + e26, e36, -e46, e56, 0)",
      "no", IND, False, obstr=obstruction("P22", vec("e2")))
entry("A_{6,42}^{-1}", T2, "(e45, e15 + e26, e36 + e56, -e46, e56, 0)",
      "no", IND, False, obstr=obstruction("P22", vec("e2")))
entry("A_{6,51}^{s}", T2, "(e45, e15 + s*e46, e36, 0, 0, 0)",
      "no", IND, False, parameters=("s",), constraint="s == 1 or s == -1",
      samples=({"s": "1"}, {"s": "-1"}),
      obstr=obstruction("P22", vec("e3")),
      notes="single row covering the sign pair s = 1 and s = -1; the "
            "discrete domain is sampled exhaustively")
entry("A_{6,54}^{-1,-2}", T2,
      "(e16 + e35, -2*e26 + e45, 2*e36, -e46, -e56, 0)",
      "no", IND, False, obstr=obstruction("P22", vec("e1")))
entry("A_{6,54}^{a,a-1}", T2,
      "(e16 + e35, (a-1)*e26 + e45, (1-a)*e36, -e46, a*e56, 0)",
      "no", IND, False, parameters=("a",), constraint="0 < a < 2",
      samples=({"a": "1"}, {"a": "1/2"}, {"a": "3/2"}),
      obstr=obstruction("P22", vec("e1")))
entry("A_{6,54}^{2,1}", T2, "(e16 + e35, e26 + e45, -e36, -e46, 2*e56, 0)",
      "yes", IND, False,
      witness=("e31 + e42 + 2*e65", "e346 + e235 - e145 - 2*e126"))
entry("A_{6,56}^{1}", T2, "(e16 + e35, e36 + e45, 0, -e46, e56, 0)",
      "no", IND, False, obstr=obstruction("P22", vec("e1")))
entry("A_{6,65}^{1,2}", T2,
      "(e16 + e35, e16 + e26 + e45, -e36, e36 - e46, 2*e56, 0)",
      "no", IND, False, obstr=obstruction("P22", vec("e2")))
entry("A_{6,70}^{a,a/2}", T2,
      "(a/2*e16 - e26 + e35, e16 + a/2*e26 + e45, -a/2*e36 - e46, "
      "e36 - a/2*e46, a*e56, 0)",
      "yes", IND, False, parameters=("a",), constraint="a != 0",
      samples=({"a": "1"}, {"a": "2"}, {"a": "3"}),
      witness=("e13 + e24 - a*e65", "-a*e126 - e145 + e235 + a*e346"))
entry("A_{6,71}^{-3/2}", T2,
      "(3/2*e16 + e25, 1/2*e26 + e35, -1/2*e36 + e45, -3/2*e46, e56, 0)",
      "yes", IND, False,
      witness=("e41 + e23 + 2*e56", "-e245 + 2*e346 - 2*e126 - e135"))
entry("A_{6,76}^{-3}", T2,
      "(-5*e16 + e25, -2*e26 + e45, e24 - e36, e46, -3*e56, 0)",
      "no", IND, False, obstr=obstruction("P22", vec("e1")))
entry("A_{6,82}^{2,5,9}", T2,
      "(2*e16 + e24 + e35, 6*e26, 10*e36, -4*e46, -8*e56, 0)",
      "no", IND, False, obstr=obstruction("P22", vec("e1")))
entry("A_{6,94}^{-3}", T2,
      "(-e16 + e25 + e34, -2*e26 + e35, -3*e36, 2*e46, e56, 0)",
      "no", IND, False, obstr=obstruction("P22", vec("e1")))
entry("A_{6,94}^{-3/2}", T2,
      "(1/3*e16 + e25 + e34, -2/3*e26 + e35, -5/3*e36, 2*e46, e56, 0)",
      "no", IND, False, obstr=obstruction("P22", vec("e1")),
      notes="the superscript of this row is rendered inconsistently in "
            "classification listings; the structure equations stored here "
            "are authoritative")
entry("A_{6,94}^{-1}", T2, "(e16 + e25 + e34, e35, -e36, 2*e46, e56, 0)",
      "no", IND, False, obstr=obstruction("P22", vec("e1")))

# ---------------------------------------------------------------- table 3
T3 = "table-3"
SGN4 = ({"a": "1", "b": "1"}, {"a": "1", "b": "-1"},
        {"a": "-1", "b": "1"}, {"a": "-1", "b": "-1"},
        {"a": "2", "b": "1/2"})
entry("N_{6,1}^{a,b,-a,-b}", T3,
      "(a*e15 + b*e16, -a*e25 - b*e26, e36, e45, 0, 0)",
      "no", IND, False, parameters=("a", "b"), constraint="a*b != 0",
      samples=SGN4,
      obstr=obstruction("P21-i", cov("(2+sqrt3)*e5 + e6")))
entry("N_{6,1}^{a,b,0,-1}", T3, "(a*e15 + b*e16, -e26, e36, e45, 0, 0)",
      "no", IND, False, parameters=("a", "b"), constraint="a*b != 0",
      samples=SGN4,
      obstr=obstruction("P21-i",
                        cov("(1+sqrt3)*e5 + e6", when="b > 0"),
                        cov("(1+sqrt3)*e5 - e6", when="b < 0")))
entry("N_{6,1}^{a,b,-1,0}", T3, "(a*e15 + b*e16, -e25, e36, e45, 0, 0)",
      "no", IND, False, parameters=("a", "b"), constraint="a*b != 0",
      samples=SGN4,
      obstr=obstruction("P21-i",
                        cov("(1+sqrt3)*e5 - 2*e6", when="a > 0"),
                        cov("(1+sqrt3)*e5 + 2*e6", when="a < 0")))
entry("N_{6,2}^{-1,b,-b}", T3,
      "(-e15 + b*e16, e25 - b*e26, e36, e35 + e46, 0, 0)",
      "no", IND, False, parameters=("b",),
      samples=({"b": "1"}, {"b": "-1"}, {"b": "2"}),
      obstr=obstruction("P22", vec("e3")))
entry("N_{6,2}^{0,-1,c}", T3,
      "(-e16, e25 + c*e26, e36, e35 + e46, 0, 0)",
      "no", IND, False, parameters=("c",),
      samples=({"c": "0"}, {"c": "1"}, {"c": "-1"}),
      obstr=obstruction("P22", vec("e2")))
entry("N_{6,7}^{0,b,0}", T3,
      "(-e26, e16, e35, e35 + b*e36 + e45, 0, 0)",
      "no", IND, False, parameters=("b",), constraint="b != 0",
      samples=({"b": "1"}, {"b": "-1"}, {"b": "2"}),
      obstr=obstruction("P22", vec("e3")))
entry("N_{6,13}^{a,b,-a,-b}", T3,
      "(a*e15 + b*e16, -a*e25 - b*e26, e36 - e45, e35 + e46, 0, 0)",
      "no", IND, False, parameters=("a", "b"),
      constraint="a**2 + b**2 != 0 and (a, b) != (0, 2) "
                 "and (a, b) != (0, -2)",
      samples=({"a": "1", "b": "1"}, {"a": "0", "b": "1"},
               {"a": "1", "b": "0"}, {"a": "1", "b": "2"},
               {"a": "1", "b": "-2"}, {"a": "2", "b": "-1"}),
      obstr=obstruction("P22", vec("e3")))
entry("N_{6,13}^{0,-2,0,2}", T3, "(-2*e16, 2*e26, e36 - e45, e35 + e46, 0, 0)",
      "yes", IND, False,
      witness=("e12 + e35 + e46", "e134 - e156 - 3*e236 + e245"),
      notes="witness rederived so every closure and positivity check "
            "passes exactly")
entry("N_{6,14}^{a,b,0}", T3, "(a*e15 + b*e16, e26, -e45, e35, 0, 0)",
      "no", IND, False, parameters=("a", "b"), constraint="a*b != 0",
      samples=({"a": "1", "b": "1"}, {"a": "1", "b": "-1"},
               {"a": "-2", "b": "1/2"}),
      obstr=obstruction("P22", vec("e1")))
entry("N_{6,15}^{0,b,c,0}", T3,
      "(e15 + c*e16 - e26, e16 + e25 + c*e26, -b*e45, b*e35, 0, 0)",
      "no", IND, False, parameters=("b", "c"), constraint="b != 0",
      samples=({"b": "1", "c": "0"}, {"b": "1", "c": "1"},
               {"b": "-1", "c": "2"}, {"b": "2", "c": "-1"}),
      obstr=obstruction("P22", vec("e1")))
entry("N_{6,16}^{0,0}", T3, "(e16, e15 + e26, -e45, e35, 0, 0)",
      "no", IND, False, obstr=obstruction("P22", vec("e1")))
entry("N_{6,17}^{0}", T3, "(0, e15, e36 - e45, e35 + e46, 0, 0)",
      "no", IND, False, obstr=obstruction("P22", vec("e3")))
entry("N_{6,18}^{0,b,0}", T3, "(e16 - e25, e15 + e26, -b*e45, b*e35, 0, 0)",
      "no", IND, False, parameters=("b",), constraint="b != 0",
      samples=({"b": "1"}, {"b": "-1"}, {"b": "2"}),
      obstr=obstruction("P22", vec("e1")))
entry("N_{6,20}^{0,-1}", T3, "(-e56, -e26, e36, e45, 0, 0)",
      "no", IND, False, obstr=obstruction("P22", vec("e1")))
entry("N_{6,22}^{a,0}", T3, "(e15 + a*e16, e26, 0, e35, 0, 0)",
      "no", IND, False, parameters=("a",), constraint="a != 0",
      samples=({"a": "1"}, {"a": "-1"}, {"a": "2"}),
      obstr=obstruction("P22", vec("e1")))
entry("N_{6,23}^{a,0}", T3, "(e15 - e26, e16 + e25, 0, e35 + a*e36, 0, 0)",
      "no", IND, False, parameters=("a",),
      samples=({"a": "0"}, {"a": "1"}, {"a": "-1"}),
      obstr=obstruction("P22", vec("e1")))
entry("N_{6,26}^{0}", T3, "(-e56, e26, -e45, e35, 0, 0)",
      "no", IND, False, obstr=obstruction("P22", vec("e1")))
entry("N_{6,28}", T3,
      "(-e24 + e15, -e34 + e26, -e35 + 2*e36, e45 - e46, 0, 0)",
      "no", IND, False,
      obstr=obstruction("P21-ii-antisym", pair_case("e5", "e6")))
entry("N_{6,29}^{a,b}", T3,
      "(-e23 + e15 + e16, e25, e36, a*e45 + b*e46, 0, 0)",
      "no", IND, False, parameters=("a", "b"),
      constraint="a**2 + b**2 != 0",
      samples=({"a": "1", "b": "0"}, {"a": "0", "b": "1"},
               {"a": "1", "b": "-2"}),
      obstr=obstruction("P22", vec("e1")))
entry("N_{6,30}^{a}", T3, "(-e23 + 2*e15, e25, e26 + e35, a*e45 + e46, 0, 0)",
      "no", IND, False, parameters=("a",),
      samples=({"a": "0"}, {"a": "1"}, {"a": "-1"}),
      obstr=obstruction("P22", vec("e1")))
entry("N_{6,32}^{a}", T3,
      "(-e23 + e45 + e16, e25 + a*e26, (1-a)*e36 - e35, e46, 0, 0)",
      "no", IND, False, parameters=("a",),
      samples=({"a": "0"}, {"a": "1"}, {"a": "2"}),
      obstr=obstruction("P22", vec("e1")))
entry("N_{6,33}", T3, "(-e23 + e15 + e16, e25, e36, e36 + e46, 0, 0)",
      "no", IND, False, obstr=obstruction("P22", vec("e1")))
entry("N_{6,34}^{a}", T3,
      "(-e23 + e15 + (1+a)*e16, e25 + a*e26, e36, e35 + e46, 0, 0)",
      "no", IND, False, parameters=("a",),
      samples=({"a": "0"}, {"a": "1"}, {"a": "-1"}),
      obstr=obstruction("P22", vec("e1")))
entry("N_{6,35}^{a,b}", T3,
      "(-e23 + 2*e16, -e35 + e26, e36 + e25, a*e45 + b*e46, 0, 0)",
      "no", IND, False, parameters=("a", "b"), constraint="a != 0",
      samples=({"a": "1", "b": "0"}, {"a": "1", "b": "1"},
               {"a": "-1", "b": "2"}),
      obstr=obstruction("P22", vec("e1")))
entry("N_{6,37}^{a}", T3,
      "(-e23 + e45 + 2*e16, e26 - e35 - a*e36, e25 + a*e26 + e36, "
      "2*e46, 0, 0)",
      "no", IND, False, parameters=("a",),
      samples=({"a": "0"}, {"a": "1"}, {"a": "-1"}),
      obstr=obstruction("P22", vec("e1")))
entry("N_{6,38}", T3, "(-e23 + e15 + e16, e25, e36, -e56, 0, 0)",
      "no", IND, False, obstr=obstruction("P22", vec("e1")))
entry("N_{6,39}", T3, "(-e23 + 2*e16, -e35 + e26, e25 + e36, -e56, 0, 0)",
      "no", IND, False, obstr=obstruction("P22", vec("e1")))

# ---------------------------------------------------------------- table 4
T4 = "table-4"
D33 = "3+3"
entry("e(2)+e(2)", T4, "(0, -e13, e12, 0, -e46, e45)", "no", D33, True,
      obstr=obstruction("P21-ii-antisym", pair_case("e1", "e2")))
entry("e(1,1)+e(1,1)", T4, "(0, -e13, -e12, 0, -e46, -e45)", "yes", D33,
      True,
      witness=("e14 + e23 + 2*e56",
               "e125 - e126 - e135 - e136 + e245 + e246 + e345 - e346"),
      su2_data=su2("e1", "e4", "e23 + 2*e56",
                   pair=("e2", "e3", "e5 - e6", "e5 + e6")))
entry("e(2)+R^3", T4, "(0, -e13, e12, 0, 0, 0)", "no", D33, True,
      obstr=obstruction("P21-ii-zero", vec("e2")))
entry("e(1,1)+R^3", T4, "(0, -e13, -e12, 0, 0, 0)", "no", D33, True,
      obstr=obstruction("P21-ii-zero", vec("e2")))
entry("e(2)+e(1,1)", T4, "(0, -e13, e12, 0, -e46, -e45)", "no", D33, True,
      obstr=obstruction("P21-ii-antisym", pair_case("e2", "e3")))
entry("e(2)+h", T4, "(0, -e13, e12, 0, 0, e45)", "no", D33, True,
      obstr=obstruction("P21-ii-zero", vec("e6")))
entry("e(1,1)+h", T4, "(0, -e13, -e12, 0, 0, e45)", "no", D33, True,
      obstr=obstruction("P21-ii-zero", vec("e6")))
entry("e(2)+r_2+R", T4, "(0, -e13, e12, 0, -e45, 0)", "no", D33, False,
      obstr=obstruction("P21-i", cov("e4")))
entry("e(1,1)+r_2+R", T4, "(0, -e13, -e12, 0, -e45, 0)", "no", D33, False,
      obstr=obstruction("P21-i", cov("e4")))

# ---------------------------------------------------------------- table 5
T5 = "table-5"
D42 = "4+2"
entry("A_{4,1}+r_2", T5, "(e24, e34, 0, 0, 0, e56)", "no", D42, False,
      obstr=obstruction("P21-i", cov("e5")))
entry("A_{4,9}^{-1/2}+r_2", T5,
      "(1/2*e14 + e23, e24, -1/2*e34, 0, 0, e56)", "no", D42, False,
      obstr=obstruction("P21-i", cov("e4")))
entry("A_{4,12}+r_2", T5, "(e13 + e24, -e14 + e23, 0, 0, 0, e56)",
      "no", D42, False, obstr=obstruction("P21-i", cov("e3")))
entry("r_2+r_2+r_2", T5, "(0, -e12, 0, -e34, 0, -e56)", "no", D42, False,
      obstr=obstruction("P21-i", cov("e1 + e3")))

# ---------------------------------------------------------------- table 6
T6 = "table-6"
D51 = "5+1"
entry("A_{5,7}^{-1,b,-b}+R", T6, "(e15, -e25, b*e35, -b*e45, 0, 0)",
      "no", D51, True, parameters=("b",), constraint="0 < b < 1",
      samples=({"b": "1/2"}, {"b": "1/4"}, {"b": "3/4"}),
      obstr=obstruction("P21-ii-zero", vec("e1")))
entry("A_{5,7}^{-1,-1,1}+R", T6, "(e15, -e25, -e35, e45, 0, 0)",
      "yes", D51, True,
      witness=("-e13 + e24 + e56", "-e126 - e145 - e235 - e346"),
      su2_data=su2("e5", "e6", "-e13 + e24", pair=("e3", "e1", "e2", "e4")))
entry("A_{5,8}^{-1}+R", T6, "(e25, 0, e35, -e45, 0, 0)", "no", D51, True,
      obstr=obstruction("P21-ii-zero", vec("e1")))
entry("A_{5,13}^{-1,0,c}+R", T6, "(e15, -e25, c*e45, -c*e35, 0, 0)",
      "no", D51, True, parameters=("c",), constraint="c > 0",
      samples=({"c": "1"}, {"c": "1/2"}, {"c": "2"}),
      obstr=obstruction("P21-ii-zero", vec("e1")))
entry("A_{5,14}^{0}+R", T6, "(e25, 0, e45, -e35, 0, 0)", "no", D51, True,
      obstr=obstruction("P21-ii-zero", vec("e1")))
entry("A_{5,15}^{-1}+R", T6, "(e15 + e25, e25, -e35 + e45, -e45, 0, 0)",
      "no", D51, True, obstr=obstruction("P21-ii-zero", vec("e1")))
entry("A_{5,17}^{0,0,c}+R", T6, "(e25, -e15, c*e45, -c*e35, 0, 0)",
      "no", D51, True, parameters=("c",), constraint="0 < c < 1",
      samples=({"c": "1/2"}, {"c": "1/4"}, {"c": "3/4"}),
      obstr=obstruction("P21-ii-zero", vec("e1")))
entry("A_{5,17}^{a,-a,1}+R", T6,
      "(a*e15 + e25, -e15 + a*e25, -a*e35 + e45, -e35 - a*e45, 0, 0)",
      "yes", D51, True, parameters=("a",), constraint="a >= 0",
      samples=({"a": "0"}, {"a": "1"}, {"a": "2"}),
      witness=("e13 + e24 + e56", "e125 - e146 + e236 - e345"),
      su2_data=su2("e5", "e6", "e13 + e24", pair=("e1", "e3", "e2", "e4")))
entry("A_{5,18}^{0}+R", T6, "(e25 + e35, -e15 + e45, e45, -e35, 0, 0)",
      "no", D51, True, obstr=obstruction("P21-ii-zero", vec("e1")))
entry("A_{5,19}^{-1,2}+R", T6, "(-e15 + e23, e25, -2*e35, 2*e45, 0, 0)",
      "no", D51, True, obstr=obstruction("P21-ii-zero", vec("e1")))
entry("A_{5,36}+R", T6, "(e14 + e23, e24 - e25, e35, 0, 0, 0)",
      "no", D51, False, obstr=obstruction("P21-ii-zero", vec("e1")))
entry("A_{5,37}+R", T6, "(2*e14 + e23, e24 + e35, -e25 + e34, 0, 0, 0)",
      "no", D51, False, obstr=obstruction("P21-ii-zero", vec("e1")))

# ------------------------------------------------------------- nilpotent
NP = "nilpotent"
entry("g_{5,1}+R", NP, "(0, 0, 0, 0, e12, e13)", "yes", D51, True,
      su2_data=su2("e1", "e4", "e25 - e36", pair=("e2", "e5", "-e3", "e6")))
entry("g_{6,N3}", NP, "(0, 0, 0, e12, e13, e23)", "yes", IND, True,
      su2_data=su2("e1", "e6", "-2*e34 - e25",
                   pair=("2*e4", "e3", "e5", "e2")))

document = {
    "schema": 1,
    "annotations": {
        "table-1": [
            "the su2 record of g_{6,38}^{0} is phase-normalized so that "
            "its embedding reproduces the stored (f, rho) witness",
        ],
        "table-2": [
            "the stored witness for A_{6,13}^{-2/3,1/3,-1} was rederived "
            "so that all closure and positivity checks pass exactly",
            "the superscript of the A_{6,94}^{-3/2} row is rendered "
            "inconsistently in classification listings; the structure "
            "equations stored here are authoritative",
        ],
        "table-3": [
            "the stored witness for N_{6,13}^{0,-2,0,2} was rederived so "
            "that all closure and positivity checks pass exactly",
        ],
    },
    "entries": E,
}

out = Path("src/stableforms/data/catalog.json")
out.parent.mkdir(parents=True, exist_ok=True)
out.write_text(json.dumps(document, indent=1) + "\n")
counts = {}
for e in E:
    counts[e["source"]] = counts.get(e["source"], 0) + 1
print(f"wrote {out} with {len(E)} entries: {counts}")
