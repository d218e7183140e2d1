"""Command-line entry point: `singmod <command> ...`.

Exit status is 0 on success, 1 on domain errors (bad discriminant, failed
reconstruction, invalid data file, ...) and 2 on usage errors.  Results go
to stdout; logging goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

from . import abc
from .exact import DomainError, factorize
from .gross_zagier import gz_norm
from .interpolation import classical_min_poly, shimura_min_poly
from .nf.field import NumberField
from .quadforms import class_number
from .shimura import bundled_path, check_document, load_norm_file, validate_data

log = logging.getLogger("singmod")


# ---- polynomial input ----------------------------------------------------


def parse_poly(text: str, var: str | None = None) -> tuple[list[Fraction], str]:
    """Ascending rational coefficients of a one-variable polynomial expression."""
    import sympy
    from sympy.parsing.sympy_parser import convert_xor, implicit_multiplication, parse_expr, standard_transformations

    try:
        expr = parse_expr(text, transformations=standard_transformations + (convert_xor, implicit_multiplication))
    except Exception as exc:  # sympy raises many types here
        raise DomainError(f"cannot parse polynomial {text!r}: {exc}") from None
    syms = sorted(expr.free_symbols, key=str)
    if len(syms) > 1 or (var is not None and syms and str(syms[0]) != var):
        raise DomainError(f"{text!r} must be a polynomial in {var or 'one variable'}")
    x = syms[0] if syms else sympy.Symbol(var or "x")
    try:
        poly = sympy.Poly(expr, x)
    except sympy.PolynomialError as exc:
        raise DomainError(f"{text!r} is not a polynomial: {exc}") from None
    coeffs = []
    for c in reversed(poly.all_coeffs()):
        if not c.is_Rational:
            raise DomainError(f"coefficient {c} of {text!r} is not rational")
        coeffs.append(Fraction(int(c.p), int(c.q)))
    return coeffs, str(x)


def _read_minpoly(spec: str):
    """A minimal polynomial from a JSON norm file, a text file or an inline expression."""
    path = Path(spec)
    if path.is_file():
        if path.suffix == ".json":
            cand = shimura_min_poly(load_norm_file(path))
            return list(cand.coefficients), abc.Curve.SHIMURA6
        spec = path.read_text().strip()
    coeffs, _ = parse_poly(spec)
    return coeffs, None


def _sweep_items(directory: Path) -> list[abc.SweepItem]:
    """Inputs for `abc sweep`.

    Every *.json file in the directory is one of
      - a Shimura norm file (reconstructed, curve shimura6);
      - {"curve": "classical", "discriminants": [39, 23, ...]};
      - {"curve": ..., "discriminant": d, "minpoly": "<polynomial>"}.
    """
    files = sorted(directory.glob("*.json"))
    if not files:
        raise DomainError(f"no *.json inputs in {directory}")
    items = []
    for f in files:
        try:
            doc = json.loads(f.read_text())
        except json.JSONDecodeError as exc:
            raise DomainError(f"{f}: invalid JSON: {exc}") from None
        if not isinstance(doc, dict):
            raise DomainError(f"{f}: top level must be an object")
        if "points" in doc:
            rep = check_document(doc, str(f))
            d = doc.get("cmDiscriminant")
            if not rep.ok:
                items.append(abc.SweepItem(d, abc.Curve.SHIMURA6, error="; ".join(rep.problems)))
                continue
            try:
                cand = shimura_min_poly(rep.dataset)
                items.append(abc.SweepItem(d, abc.Curve.SHIMURA6, tuple(cand.coefficients)))
            except DomainError as exc:
                items.append(abc.SweepItem(d, abc.Curve.SHIMURA6, error=str(exc)))
            continue
        try:
            curve = abc.Curve(doc.get("curve", "classical"))
        except ValueError:
            raise DomainError(f"{f}: unknown curve {doc.get('curve')!r}") from None
        if "minpoly" in doc:
            coeffs, _ = parse_poly(str(doc["minpoly"]))
            items.append(abc.SweepItem(doc.get("discriminant"), curve, tuple(coeffs)))
            continue
        for d in doc.get("discriminants", []):
            if curve is not abc.Curve.CLASSICAL:
                raise DomainError(f"{f}: discriminant lists are only supported for the classical curve")
            try:
                cand = classical_min_poly(int(d))
                items.append(abc.SweepItem(int(d), curve, tuple(cand.coefficients)))
            except DomainError as exc:
                items.append(abc.SweepItem(int(d), curve, error=str(exc)))
    return items


# ---- commands ------------------------------------------------------------


def _tolerance(args) -> float:
    return 10.0 ** (-args.precision)


def cmd_classnum(args, out):
    data = class_number(args.d)
    print(f"h={data.class_number} omega={data.unit_count}", file=out)
    for a, b, c in data.reduced_forms:
        print(f"({a}, {b}, {c})", file=out)


def cmd_gznorm(args, out):
    res = gz_norm(args.d1, args.d2)
    if args.expanded:
        print(res.norm.value, file=out)
        print(f"product={res.product.value} exponent={res.exponent_applied}", file=out)
    else:
        print(res.norm, file=out)
        print(f"product={res.product} exponent={res.exponent_applied}", file=out)


def _print_candidate(cand, args, out):
    print(cand.format(), file=out)
    if not args.expanded:
        print(cand.format(factored=True), file=out)
    print(f"signs={cand.signs_text()}", file=out)


def cmd_minpoly_classical(args, out):
    _print_candidate(classical_min_poly(args.d), args, out)


def cmd_minpoly_shimura(args, out):
    path = Path(args.file) if args.file else bundled_path()
    _print_candidate(shimura_min_poly(load_norm_file(path)), args, out)


def cmd_abc_alpha(args, out):
    a, b = args.a, args.b
    print(f"alpha({a},{b},{a + b})={abc.alpha(a, b):.6f}", file=out)


def _print_report(rep: abc.AbcReport, args, out):
    print(f"gamma={rep.gamma:.6f} interval=[{rep.gamma_low:.9f}, {rep.gamma_high:.9f}]", file=out)
    print(f"lnH={rep.height_log:.9f}", file=out)
    rad = rep.radical.value if args.expanded else rep.radical
    print(f"rad={rad} lnRad={rep.radical_log:.9f}", file=out)
    disc = rep.discriminant if args.expanded else factorize(rep.discriminant)
    print(f"disc={disc} lnDisc={rep.discriminant_log:.9f}", file=out)


def cmd_abc_gamma(args, out):
    if args.poly is not None:
        if args.triple is None:
            raise DomainError("--poly needs --triple")
        coeffs, var = parse_poly(args.poly)
        if any(c.denominator != 1 for c in coeffs) or coeffs[-1] != 1:
            raise DomainError("--poly must be a monic integer polynomial")
        K = NumberField([int(c) for c in coeffs], var=var)
        parts = args.triple.split(",")
        if len(parts) != 3:
            raise DomainError("--triple needs three comma-separated entries")
        elems = [K.from_poly(parse_poly(p, var)[0]) for p in parts]
        triple = abc.FieldTriple(*elems)
    elif args.minpoly is not None:
        coeffs, implied = _read_minpoly(args.minpoly)
        curve = abc.Curve(args.curve) if args.curve else (implied or abc.Curve.CLASSICAL)
        triple = abc.singular_moduli_triple(coeffs, curve)
    else:
        raise DomainError("give --minpoly or --poly with --triple")
    _print_report(abc.gamma(triple, _tolerance(args), args.seed), args, out)


def cmd_abc_median(args, out):
    res = abc.median_alpha_sweep(args.bound, coprime=not args.no_coprime, ordered=args.ordered_pairs)
    a, b, c = res.best
    print(f"median={res.median:.6f} count={res.count}", file=out)
    print(f"max=alpha({a},{b},{c})={res.best_alpha:.6f}", file=out)


def cmd_abc_sweep(args, out):
    directory = Path(args.input)
    if not directory.is_dir():
        raise DomainError(f"{directory} is not a directory")
    text = abc.gamma_sweep_csv(_sweep_items(directory), min(_tolerance(args), 1e-8), args.seed)
    if args.out == "-":
        out.write(text)
    else:
        Path(args.out).write_text(text, encoding="utf-8", newline="\n")
        log.info("wrote %s", args.out)


def cmd_validate(args, out):
    rep = validate_data(args.path)
    if rep.ok:
        ds = rep.dataset
        print(f"valid: {len(ds.points)} points, degree {ds.degree}", file=out)
        return 0
    for p in rep.problems:
        print(f"error: {p}", file=out)
    return 1


# ---- parser --------------------------------------------------------------


def _globals(parser, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--seed", type=int, default=d(None), help="seed for the factorizer's pseudorandomness")
    parser.add_argument("--precision", type=int, default=d(5), help="certified decimal digits for gamma")
    parser.add_argument("--expanded", action="store_true", default=d(False), help="print integers expanded")
    parser.add_argument("-v", "--verbose", action="store_true", default=d(False))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="singmod", description="Singular moduli, norms and abc-ratios.")
    _globals(parser, False)
    common = argparse.ArgumentParser(add_help=False)
    _globals(common, True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classnum", parents=[common], help="class number and reduced forms of -d")
    p.add_argument("-d", type=int, required=True)
    p.set_defaults(func=cmd_classnum)

    p = sub.add_parser("gznorm", parents=[common], help="|N(j(tau1) - j(tau2))| by Gross-Zagier")
    p.add_argument("-d1", type=int, required=True)
    p.add_argument("-d2", type=int, required=True)
    p.set_defaults(func=cmd_gznorm)

    mp = sub.add_parser("minpoly", help="reconstruct a minimal polynomial")
    msub = mp.add_subparsers(dest="kind", required=True)
    p = msub.add_parser("classical", parents=[common])
    p.add_argument("-d", type=int, required=True)
    p.set_defaults(func=cmd_minpoly_classical)
    p = msub.add_parser("shimura", parents=[common])
    p.add_argument("--file", help="norm data file (default: the bundled d'=244 data)")
    p.set_defaults(func=cmd_minpoly_shimura)

    ap = sub.add_parser("abc", help="abc-ratios")
    asub = ap.add_subparsers(dest="kind", required=True)
    p = asub.add_parser("alpha", parents=[common])
    p.add_argument("-a", type=int, required=True)
    p.add_argument("-b", type=int, required=True)
    p.set_defaults(func=cmd_abc_alpha)
    p = asub.add_parser("gamma", parents=[common])
    p.add_argument("--minpoly", help="file (.json norm data or text) or inline polynomial")
    p.add_argument("--curve", choices=[c.value for c in abc.Curve])
    p.add_argument("--poly", help="monic integer polynomial defining K")
    p.add_argument("--triple", help="a,b,c as polynomials in the generator")
    p.set_defaults(func=cmd_abc_gamma)
    p = asub.add_parser("median", parents=[common])
    p.add_argument("--bound", type=int, default=100)
    p.add_argument("--no-coprime", action="store_true")
    p.add_argument("--ordered-pairs", action="store_true")
    p.set_defaults(func=cmd_abc_median)
    p = asub.add_parser("sweep", parents=[common])
    p.add_argument("--input", required=True, help="directory of *.json inputs")
    p.add_argument("--out", required=True, help="CSV path, or - for stdout")
    p.set_defaults(func=cmd_abc_sweep)

    p = sub.add_parser("validate-data", parents=[common], help="check a Shimura norm data file")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        code = args.func(args, out)
    except DomainError as exc:
        print(f"singmod: error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"singmod: error: {exc}", file=sys.stderr)
        return 1
    return code or 0


if __name__ == "__main__":
    sys.exit(main())
