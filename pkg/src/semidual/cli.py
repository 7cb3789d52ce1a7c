"""Command-line front end: verification pipeline, family generation,
classification, and the summary-table reproduction.

Subcommands: verify, family, semidual, classify, table1, selftest.
Exit codes: 0 all checks pass, 1 a check fails, 2 malformed input.
All output is deterministic and uses exact "p/q" rationals.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import bialgebra, bianchi, factorize, jsonio, lie, solutions
from .jsonio import InputError
from .lie import LieAlgebra
from .linalg import Matrix, rat
from .solutions import ConstraintViolation, Family, SolutionInstance


def _parse_rat(text: str, what: str) -> Fraction:
    try:
        return rat(text)
    except (ValueError, TypeError) as exc:
        raise InputError(f"{what}: {exc}") from exc


def _parse_vec(text: str, what: str):
    parts = text.split(",")
    if len(parts) != 3:
        raise InputError(f"{what}: expected three comma-separated rationals")
    return tuple(_parse_rat(p, what) for p in parts)


@dataclass
class Check:
    name: str
    passed: bool
    components: list[dict]  # sparse nonzero components, exact rationals

    @property
    def lines(self) -> list[str]:
        out = []
        for c in self.components:
            idx = ",".join(str(c[k]) for k in ("i", "j", "k") if k in c)
            out.append(f"[{idx}] = {c['v']}" if idx else f"residual = {c['v']}")
        return out


@dataclass
class VerificationReport:
    """Everything cmd_verify / cmd_family print: the echoed input, one exact
    residual summary per check, the m-algebra, Bianchi type and r-matrix."""

    algebra_name: str
    algebra: LieAlgebra
    F: Matrix
    lam: Fraction
    checks: list[Check]
    m_brackets: list[str] | None
    classification: bianchi.Classification | None
    r_coeffs: Matrix

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _linear_combo(terms) -> str:
    """Render [(coefficient, symbol), ...] as an exact sum, '0' if empty."""
    parts = []
    for v, name in terms:
        if v == 1:
            parts.append(name)
        elif v == -1:
            parts.append(f"-{name}")
        else:
            parts.append(f"{v} {name}")
    return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def build_report(name: str, g: LieAlgebra, F: Matrix, lam: Fraction) -> VerificationReport:
    checks: list[Check] = []
    fact = factorize.factorization_check(g, F, lam)
    checks.append(Check("factorisation (closure of Q')", fact.is_zero(),
                        jsonio.tensor_components(fact)))

    if g.dim == 3 and g.metric is not None:
        quad = factorize.quadratic_condition(F, g, lam)
        checks.append(Check("quadratic matrix form", quad.is_zero(),
                            jsonio.matrix_components(quad)))
        split = factorize.split_sv(F, g)
        proj = factorize.projected_equations(split, lam)
        checks.append(Check("projected scalar part", proj.scalar == 0,
                            [] if proj.scalar == 0 else [{"v": str(proj.scalar)}]))
        checks.append(Check("projected vector part", proj.vector.is_zero(),
                            jsonio.matrix_components(proj.vector)))
        checks.append(Check("projected traceless part", proj.traceless.is_zero(),
                            jsonio.matrix_components(proj.traceless)))

    sd_alg = bialgebra.semidual_algebra(g)
    r = bialgebra.r_matrix(F)
    mcybe = bialgebra.mcybe_check(sd_alg, r, lam)
    checks.append(Check("mCYBE [[r,r]] + lambda Omega (tensor and matrix paths)",
                        mcybe.is_zero(), jsonio.tensor_components(mcybe)))

    dualco = bialgebra.dualco_delta(g, F)
    cob = bialgebra.coboundary_delta(sd_alg, r)
    agree = dualco - cob
    checks.append(Check("cocommutator agreement (semidual vs coboundary)",
                        agree.is_zero(), jsonio.tensor_components(agree)))

    m_brackets = None
    classification = None
    if fact.is_zero():
        dcs = factorize.verify_closure_in_complexification(g, F, lam)
        nz = dcs.g_tensor.nonzero()
        m_brackets = [
            f"[Q'_{a},Q'_{b}] = " + _linear_combo(
                [(v, f"Q'_{c}") for a2, b2, c, v in nz if (a2, b2) == (a, b)]
            )
            for a in range(g.dim)
            for b in range(a + 1, g.dim)
            if any((a2, b2) == (a, b) for a2, b2, _, _ in nz)
        ] or ["all Q' commute (abelian m)"]
        if g.dim == 3:
            classification = bianchi.classify(dcs.m_algebra)
    return VerificationReport(name, g, F, lam, checks, m_brackets, classification, F)


def _metric_str(g: LieAlgebra) -> str:
    if g.metric is None:
        return "none"
    return "diag(" + ",".join(str(g.metric[i, i]) for i in range(g.dim)) + ")"


def _print_matrix(F: Matrix, indent="  "):
    for row in F.data:
        print(indent + "[ " + "  ".join(str(v) for v in row) + " ]")


def _print_report(rep: VerificationReport):
    print("input algebra: %s (dim %d, metric %s)" % (
        rep.algebra_name, rep.algebra.dim, _metric_str(rep.algebra)))
    print(f"lambda: {rep.lam}")
    print("F (columns are images of the J basis):")
    _print_matrix(rep.F)
    for c in rep.checks:
        print(f"check {c.name}: {'PASS' if c.passed else 'FAIL'}")
        if not c.passed:
            for line in c.lines:
                print(f"  nonzero {line}")
    if rep.m_brackets is not None:
        print("m-algebra brackets:")
        for line in rep.m_brackets:
            print(f"  {line}")
    if rep.classification is not None:
        cl = rep.classification
        h = "-" if cl.h is None else str(cl.h)
        print(f"bianchi type: {cl.label} (h = {h})")
    print("r-matrix coefficients R[b][a] (r = R^b_a P^a ^ J_b):")
    _print_matrix(rep.r_coeffs)
    print(f"overall: {'PASS' if rep.passed else 'FAIL'}")


def _report_json(rep: VerificationReport) -> dict:
    out = {
        "algebra": jsonio.algebra_to_json(rep.algebra),
        "algebra_name": rep.algebra_name,
        "lambda": str(rep.lam),
        "F": jsonio.fmap_to_json(rep.F),
        "checks": [
            {"name": c.name, "pass": c.passed, "nonzero": c.components}
            for c in rep.checks
        ],
        "m_brackets": rep.m_brackets,
        "r_matrix": jsonio.rmatrix_to_json(rep.r_coeffs),
        "pass": rep.passed,
    }
    if rep.classification is not None:
        out["bianchi"] = _classification_json(rep.classification)
    else:
        out["bianchi"] = None
    return out


def _classification_json(cl: bianchi.Classification) -> dict:
    return {
        "type": cl.label,
        "h": None if cl.h is None else str(cl.h),
        "n_rank": cl.n_rank,
        "n_inertia": list(cl.n_inertia),
        "a_zero": cl.a_zero,
    }


def cmd_verify(args) -> int:
    name, g = jsonio.load_algebra(args.algebra)
    F = jsonio.fmap_from_json(jsonio.load_json_file(args.f), g.dim, where=str(args.f))
    lam = _parse_rat(args.lam, "--lambda")
    rep = build_report(name, g, F, lam)
    if args.json:
        print(json.dumps(_report_json(rep), indent=2, sort_keys=True))
    else:
        _print_report(rep)
    return 0 if rep.passed else 1


_FAMILY_DESCRIPTIONS = {
    Family.ZERO: "F = 0",
    Family.DOUBLE: "F = sqrt(lambda) id",
    Family.KAPPA: "F = ad_V",
    Family.GENKAPPA: "F = beta |V><V| + alpha ad_V",
    Family.RANKONE: "F = beta |m><m|",
    Family.SMALL_JORDAN: "F = beta |N><N| - sqrt(lambda) |J1><J1| + sqrt(lambda) ad_J1",
    Family.LIGHT_JORDAN: "F = beta |n><n| + ad_n",
    Family.LARGE_JORDAN: "F = beta |J1><n|",
}


def _build_family(args) -> SolutionInstance:
    metric = args.metric
    g = lie.so3() if metric == "euclidean" else lie.so21()
    fam = args.family

    def need(flag, name):
        if flag is None:
            raise InputError(f"--family {fam} requires --{name}")
        return flag

    try:
        if fam == "zero":
            return solutions.zero_solution(g, _parse_rat(need(args.lam, "lambda"), "--lambda"))
        if fam == "double":
            return solutions.double_solution(
                g, _parse_rat(need(args.lam, "lambda"), "--lambda"),
                _parse_rat(need(args.sqrt, "sqrt"), "--sqrt"))
        if fam == "kappa":
            return solutions.kappa_solution(
                g, _parse_vec(need(args.v, "v"), "--v"),
                _parse_rat(need(args.lam, "lambda"), "--lambda"))
        if fam == "genkappa":
            return solutions.generalized_kappa(
                g, _parse_vec(need(args.v, "v"), "--v"),
                _parse_rat(need(args.beta, "beta"), "--beta"),
                int(need(args.alpha, "alpha")),
                _parse_rat(need(args.lam, "lambda"), "--lambda"))
        if fam == "rankone":
            return solutions.rank_one(
                g, _parse_vec(need(args.v, "v"), "--v"),
                _parse_rat(need(args.beta, "beta"), "--beta"))
        if fam == "small-jordan":
            return solutions.small_jordan(
                g, _parse_rat(need(args.beta, "beta"), "--beta"),
                _parse_rat(need(args.lam, "lambda"), "--lambda"),
                _parse_rat(need(args.sqrt, "sqrt"), "--sqrt"))
        if fam == "light-jordan":
            return solutions.light_jordan(g, _parse_rat(need(args.beta, "beta"), "--beta"))
        if fam == "large-jordan":
            return solutions.large_jordan(g, _parse_rat(need(args.beta, "beta"), "--beta"))
    except ValueError as exc:
        if isinstance(exc, (InputError, ConstraintViolation)):
            raise
        raise InputError(str(exc)) from exc
    raise InputError(f"unknown family {fam}")


def cmd_family(args) -> int:
    inst = _build_family(args)
    name = "so3" if inst.algebra.metric == lie.EUCLIDEAN_METRIC else "so21"
    rep = build_report(name, inst.algebra, inst.F, inst.lam)
    expected = inst.expected_bianchi.label if inst.expected_bianchi else None
    computed = rep.classification.label if rep.classification else None
    type_ok = expected is None or expected == computed
    fjson = jsonio.fmap_to_json(inst.F)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(fjson, fh, indent=2, sort_keys=True)
            fh.write("\n")
    if args.json:
        obj = _report_json(rep)
        obj["family"] = inst.family.value
        obj["params"] = {
            k: (str(v) if isinstance(v, Fraction) else [str(x) for x in v])
            for k, v in inst.params.items()
        }
        obj["expected_bianchi"] = expected
        obj["bianchi_matches_expected"] = type_ok
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        print(f"family: {inst.family.value} ({_FAMILY_DESCRIPTIONS[inst.family]})")
        params = ", ".join(
            f"{k} = {v}" if isinstance(v, Fraction) else
            f"{k} = ({','.join(str(x) for x in v)})"
            for k, v in inst.params.items()
        )
        print(f"parameters: {params or 'none'}")
        _print_report(rep)
        print(f"expected bianchi type: {expected or '-'}"
              + ("" if type_ok else f"  MISMATCH (computed {computed})"))
        if args.out:
            print(f"F written to {args.out}")
    return 0 if rep.passed and type_ok else 1


def cmd_semidual(args) -> int:
    name, g = jsonio.load_algebra(args.algebra)
    F = jsonio.fmap_from_json(jsonio.load_json_file(args.f), g.dim, where=str(args.f))
    lam = _parse_rat(args.lam, "--lambda")
    try:
        bi = bialgebra.semidualize(g, F, lam)
    except bialgebra.NotAFactorisation as exc:
        print(f"FAIL: {exc}")
        return 1
    r = bialgebra.r_matrix(F)
    n = g.dim
    names = [f"J_{a}" for a in range(n)] + [f"P^{a}" for a in range(n)]
    if args.json:
        obj = {
            "algebra_name": name,
            "lambda": str(lam),
            "commutators": jsonio.tensor_components(bi.algebra.f),
            "delta": jsonio.tensor_components(bi.delta),
            "r_matrix": jsonio.rmatrix_to_json(r.coeffs),
            "r_tensor": jsonio.matrix_components(r.tensor),
            "basis": names,
        }
        print(json.dumps(obj, indent=2, sort_keys=True))
        return 0
    print(f"semidual bialgebra of {name} with lambda = {lam}")
    print(f"basis: {', '.join(names)} (indices 0..{2 * n - 1})")
    print("nonzero commutators:")
    for i, j, k, v in bi.algebra.f.nonzero():
        if i < j:
            print(f"  [{names[i]},{names[j]}] += {v} {names[k]}")
    print("cocommutator delta(e_i) = delta[i][j][k] e_j (x) e_k, nonzero:")
    for i, j, k, v in bi.delta.nonzero():
        print(f"  delta({names[i]})[{names[j]} (x) {names[k]}] = {v}")
    print("r-matrix coefficients R[b][a]:")
    _print_matrix(r.coeffs)
    return 0


def cmd_classify(args) -> int:
    name, g = jsonio.load_algebra(args.algebra)
    try:
        cl = bianchi.classify(g)
    except (bianchi.NotThreeDimensional, bianchi.JacobiFails) as exc:
        raise InputError(f"{name}: {exc}") from exc
    if args.json:
        print(json.dumps(_classification_json(cl), indent=2, sort_keys=True))
    else:
        h = "-" if cl.h is None else str(cl.h)
        p, m, z = cl.n_inertia
        print(f"algebra: {name}")
        print(f"bianchi type: {cl.label} (h = {h})")
        print(f"n rank: {cl.n_rank}, inertia (+,-,0): ({p},{m},{z}), a = 0: "
              f"{'yes' if cl.a_zero else 'no'}")
    return 0


_M_NAMES = {
    "I": "R^3",
    "II": "heisenberg",
    "III": "R (+) L(2)",
    "IV": "R |x R^2",
    "V": "R |x R^2",
    "VI": "R |x R^2",
    "VII": "R |x R^2",
    "VIII": "so(2,1)",
    "IX": "so(3)",
}


def _table1_rows():
    """One representative per summary-table row, both signatures where
    applicable; (row label, instance factory, expected type)."""
    e, l = lie.so3(), lie.so21()
    half = Fraction(1, 2)
    return [
        ("F = 0", "euclidean", solutions.zero_solution(e, 0), "I"),
        ("F = 0", "lorentzian", solutions.zero_solution(l, 0), "I"),
        ("sqrt(lambda) id", "euclidean", solutions.double_solution(e, 1, 1), "IX"),
        ("sqrt(lambda) id", "lorentzian", solutions.double_solution(l, 1, 1), "VIII"),
        ("beta|V><V| + ad_V, timelike v", "euclidean",
         solutions.generalized_kappa(e, (1, 0, 0), 1, 1, -1), "VII"),
        ("beta|V><V| + ad_V, timelike v", "lorentzian",
         solutions.generalized_kappa(l, (1, 0, 0), 1, 1, -1), "VII"),
        ("beta|V><V| + ad_V, spacelike v", "lorentzian",
         solutions.generalized_kappa(l, (0, 1, 0), 2, 1, 1), "VI"),
        ("ad_V, lightlike v (beta = 0)", "lorentzian",
         solutions.generalized_kappa(l, (-1, 0, -1), 0, 1, 0), "V"),
        ("beta|V><V| + ad_V, lightlike v", "lorentzian",
         solutions.generalized_kappa(l, (-1, 0, -1), 1, 1, 0), "IV"),
        ("small Jordan (beta = 1)", "lorentzian",
         solutions.small_jordan(l, 1, 1, 1), "III"),
        ("large Jordan (beta = 1)", "lorentzian",
         solutions.large_jordan(l, 1), "III"),
    ]


def _r_matrix_formula(inst: SolutionInstance) -> str:
    return _linear_combo([(v, f"P^{a}^J_{b}") for b, a, v in inst.F.nonzero()])


def cmd_table1(args) -> int:
    rows = []
    failures = []
    for label, sig, inst, expected in _table1_rows():
        rep = build_report(sig, inst.algebra, inst.F, inst.lam)
        computed = rep.classification.label if rep.classification else "?"
        ok = rep.passed and computed == expected
        if not ok:
            failures.append(f"{label} [{sig}]")
        rows.append((label, sig, str(inst.lam), _r_matrix_formula(inst),
                     _M_NAMES[computed], computed, expected,
                     "PASS" if ok else "FAIL"))
    if args.json:
        obj = [
            {
                "F": label, "signature": sig, "lambda": lam, "r_matrix": rm,
                "m_algebra": m, "bianchi": comp, "expected": exp, "status": st,
            }
            for label, sig, lam, rm, m, comp, exp, st in rows
        ]
        print(json.dumps({"rows": obj, "pass": not failures}, indent=2, sort_keys=True))
    else:
        header = ("F", "signature", "lambda", "r-matrix", "m", "bianchi")
        widths = [max(len(str(r[i])) for r in rows + [header + ("", "")])
                  for i in range(6)]
        fmt = "  ".join("%%-%ds" % w for w in widths) + "  %s"
        print(fmt % (header + ("status",)))
        print(fmt % tuple("-" * w for w in widths + [6]))
        for label, sig, lam, rm, m, comp, exp, st in rows:
            mark = comp if comp == exp else f"{comp} (expected {exp})"
            print(fmt % (label, sig, lam, rm, m, mark, st))
        print()
        if failures:
            print("table1: FAIL (%s)" % "; ".join(failures))
        else:
            print(f"table1: PASS ({len(rows)} rows)")
    return 1 if failures else 0


def _selftest_suites():
    from .lie import so21, so3

    e, l = so3(), so21()
    rng = random.Random(20130824)

    def rrat():
        return Fraction(rng.randint(-3, 3), rng.randint(1, 3))

    def rvec():
        return tuple(rrat() for _ in range(3))

    def rmat():
        return Matrix([[rrat() for _ in range(3)] for _ in range(3)])

    def eps_identity():
        for g in (e, l):
            eta = g.metric
            for a in range(3):
                for b in range(3):
                    for c in range(3):
                        for x in range(3):
                            for y in range(3):
                                for z in range(3):
                                    up = sum(
                                        Fraction(lie.eps(d, f2, h))
                                        * eta[d, x] * eta[f2, y] * eta[h, z]
                                        for d in range(3)
                                        for f2 in range(3)
                                        for h in range(3)
                                    )
                                    d_ = lambda i, j: 1 if i == j else 0
                                    rhs = (
                                        d_(a, x) * (d_(b, y) * d_(c, z) - d_(b, z) * d_(c, y))
                                        - d_(a, y) * (d_(b, x) * d_(c, z) - d_(b, z) * d_(c, x))
                                        + d_(a, z) * (d_(b, x) * d_(c, y) - d_(b, y) * d_(c, x))
                                    )
                                    if Fraction(lie.eps(a, b, c)) * up != rhs:
                                        return False
        return True

    def double_bracket():
        for g in (e, l):
            for _ in range(50):
                x, y, z = rvec(), rvec(), rvec()
                lhs = g.bracket(x, g.bracket(y, z))
                rhs = tuple(
                    g.inner(x, z) * y[i] - g.inner(x, y) * z[i] for i in range(3)
                )
                if lhs != rhs:
                    return False
        return True

    def cyclic_identity():
        for g in (e, l):
            for _ in range(50):
                x, y, z, v = rvec(), rvec(), rvec(), rvec()
                lhs = (
                    g.inner(g.bracket(x, y), v) * g.inner(v, z)
                    + g.inner(g.bracket(y, z), v) * g.inner(v, x)
                    + g.inner(g.bracket(z, x), v) * g.inner(v, y)
                )
                rhs = g.inner(v, v) * g.inner(g.bracket(x, y), z)
                if lhs != rhs:
                    return False
        return True

    def adjugate_agrees():
        from .linalg import adjugate_cofactor

        for g in (e, l):
            for _ in range(20):
                F = rmat()
                if factorize.adjugate(F) != adjugate_cofactor(F):
                    return False
                adj = factorize.adjugate(F)
                basis = g.basis()
                for a in range(3):
                    for b in range(3):
                        for c in range(3):
                            lhs = g.inner(adj.apply(basis[c]), g.bracket(basis[a], basis[b]))
                            rhs = g.inner(basis[c], g.bracket(F.col(a), F.col(b)))
                            if lhs != rhs:
                                return False
        return True

    def forms_agree():
        for g in (e, l):
            for lam in (Fraction(-1), Fraction(0), Fraction(1)):
                for _ in range(15):
                    F = rmat()
                    s1 = factorize.factorization_check(g, F, lam).is_zero()
                    s2 = factorize.quadratic_condition(F, g, lam).is_zero()
                    split = factorize.split_sv(F, g)
                    s3 = factorize.projected_equations(split, lam).is_zero()
                    s4 = factorize.master_residual(split, lam).is_zero()
                    if not (s1 == s2 == s3 == s4):
                        return False
        return True

    def behr_round_trip():
        for g in bianchi.canonical_representatives().values():
            bianchi.behr_decompose(g)  # raises on round-trip failure
        return True

    return [
        ("epsilon identity (exhaustive, both signatures)", eps_identity),
        ("double-bracket identity [X,[Y,Z]] = <X,Z>Y - <X,Y>Z", double_bracket),
        ("cyclic inner-product identity", cyclic_identity),
        ("adjugate: quadratic formula vs cofactors and defining property", adjugate_agrees),
        ("equivalence of the four factorisation forms", forms_agree),
        ("Behr decomposition round trip", behr_round_trip),
    ]


def cmd_selftest(args) -> int:
    ok = True
    for name, fn in _selftest_suites():
        passed = fn()
        ok = ok and passed
        print(f"selftest {name}: {'PASS' if passed else 'FAIL'}")
    print(f"selftest: {'PASS' if ok else 'FAIL'}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semidual",
        description="Exact verification of double-cross-sum factorisations and "
        "the classical r-matrices of their semiduals.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="verify a candidate F against an algebra")
    p.add_argument("--algebra", required=True, help="so3, so21, or a JSON file")
    p.add_argument("--f", required=True, help="F-matrix JSON file")
    p.add_argument("--lambda", dest="lam", required=True, help="rational p/q")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("family", help="generate a solution-family instance")
    p.add_argument("--family", required=True,
                   choices=[f.value for f in Family])
    p.add_argument("--metric", choices=["euclidean", "lorentzian"],
                   default="lorentzian")
    p.add_argument("--v", help="three comma-separated rationals")
    p.add_argument("--beta", help="rational p/q")
    p.add_argument("--alpha", type=int, choices=[0, 1])
    p.add_argument("--lambda", dest="lam", help="rational p/q")
    p.add_argument("--sqrt", help="rational square root of |lambda|")
    p.add_argument("--out", help="write the F-matrix JSON here")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("semidual", help="emit the semidual bialgebra tensors")
    p.add_argument("--algebra", required=True)
    p.add_argument("--f", required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_semidual)

    p = sub.add_parser("classify", help="Bianchi type of a 3d Lie algebra")
    p.add_argument("--algebra", required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("table1", help="reproduce the summary table")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("selftest", help="run the identity and property suites")
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ConstraintViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (factorize.ClosureFailure, bialgebra.NotAFactorisation) as exc:
        print(f"FAIL: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
