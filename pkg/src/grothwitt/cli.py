"""Command-line interface: ``grothwitt <module> <operation> [options]``.

Exit codes: 0 success, 1 internal error, 2 invalid input, 3 inconclusive or
failed result.  Options override GROTHWITT_* environment variables, which
override the defaults in :class:`grothwitt.config.Config`.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import acceptance, dh, jacobi, serial, skolem, witt
from .config import Config
from .curves import CurveDescriptor, count_points, curve_zeta, motivic_measure, zeta_from_counts, zeta_from_numerator
from .errors import BudgetExceeded, Inconclusive, InvalidInputError
from .rational import measure_frobenius, measure_ghost, measure_mul, measure_verschiebung
from .zerodim import SElement, psi, s_mul, zero_divisor_witness

EXIT_OK, EXIT_INTERNAL, EXIT_INVALID, EXIT_FAILED = 0, 1, 2, 3


class Failed(Exception):
    """A well-formed request whose answer is a failure value; printed, exit 3."""

    def __init__(self, payload: str):
        super().__init__(payload)
        self.payload = payload


# -- input helpers ---------------------------------------------------------------

def _text(arg: str) -> str:
    """Inline text, or the contents of a file given as @path or an existing path."""
    if arg.startswith("@"):
        with open(arg[1:], encoding="utf-8") as fh:
            return fh.read()
    if not arg.lstrip().startswith(("{", "[")) and os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            return fh.read()
    return arg


def _json(arg: str):
    try:
        return json.loads(_text(arg))
    except json.JSONDecodeError as exc:
        raise InvalidInputError("json", f"cannot parse JSON: {exc}") from exc


def _rationals(arg: str) -> list[Fraction]:
    """A JSON array or a comma-separated list of rationals."""
    text = _text(arg).strip().replace("−", "-")
    if text.startswith("["):
        items = _json(text)
    else:
        items = [v for v in text.split(",") if v.strip()]
    try:
        return [Fraction(str(v).strip()) for v in items]
    except (ValueError, ZeroDivisionError) as exc:
        raise InvalidInputError("rational", f"bad rational in {arg!r}: {exc}") from exc


def _zeta(arg: str, q: int | None):
    """ZetaData from zeta JSON or from a numerator list (needs q)."""
    text = _text(arg).strip()
    if text.startswith("{"):
        obj = _json(text)
        return zeta_from_numerator(int(obj["q"]), [1] + [Fraction(c) for c in obj["numerator"]])
    if q is None:
        raise InvalidInputError("q", "--q is required with a numerator list")
    return zeta_from_numerator(q, skolem.parse_numerator(text))


# -- output helpers --------------------------------------------------------------

def _series_out(f: witt.LambdaSeries, as_json: bool) -> str:
    if as_json:
        return serial.dumps(serial.series_to_json(f))
    return ",".join(serial.rat_str(c) for c in f.full())


def _values_out(values, as_json: bool) -> str:
    vals = [serial.rat_str(v) for v in values]
    return serial.dumps(vals) if as_json else ",".join(vals)


# -- witt ------------------------------------------------------------------------

def _precision(cfg: Config, args, *inputs: list) -> int:
    if args.trunc is not None or cfg.is_set("precision"):
        return cfg.precision
    return max(1, *(len(x) for x in inputs))


def cmd_witt(args, cfg: Config) -> str:
    a = _rationals(args.a)
    b = _rationals(args.b) if getattr(args, "b", None) is not None else None
    n = _precision(cfg, args, a, *([b] if b is not None else []))
    fa = witt.LambdaSeries.from_poly(a, n)
    op = args.op
    if op in ("add", "mul"):
        if b is None:
            raise InvalidInputError("b", f"witt {op} needs --b")
        fb = witt.LambdaSeries.from_poly(b, n)
        out = witt.lambda_add(fa, fb) if op == "add" else witt.lambda_mul(fa, fb)
        return _series_out(out, args.json)
    if op == "ghost":
        return _values_out(witt.ghost(fa).values, args.json)
    if op == "frob":
        return _series_out(witt.frobenius(fa, args.nu), args.json)
    return _series_out(witt.verschiebung(fa, args.nu), args.json)


# -- measure / zeta --------------------------------------------------------------

def _curve(arg: str) -> CurveDescriptor:
    return CurveDescriptor.from_json(_json(arg))


def cmd_measure(args, cfg: Config) -> str:
    op = args.op
    if op == "of":
        if args.zeta is not None:
            z = _zeta(args.zeta, args.q)
        elif args.curve is not None:
            z = curve_zeta(_curve(args.curve), cfg.budget)
        else:
            raise InvalidInputError("curve", "measure of needs --curve or --zeta")
        return serial.dumps(serial.measure_to_json(motivic_measure(z)))
    if op == "mul":
        m = measure_mul(serial.measure_from_json(_json(args.a)), serial.measure_from_json(_json(args.b)))
        return serial.dumps(serial.measure_to_json(m))
    m = serial.measure_from_json(_json(args.input))
    if op == "ghost":
        return serial.dumps([serial.rat_str(c) for c in measure_ghost(m, args.nu)])
    fn = measure_frobenius if op == "frob" else measure_verschiebung
    return serial.dumps(serial.measure_to_json(fn(m, args.nu)))


def cmd_zeta(args, cfg: Config) -> str:
    if args.op == "count":
        return str(count_points(_curve(args.curve), args.ext, cfg.budget))
    if args.curve is not None:
        z = curve_zeta(_curve(args.curve), cfg.budget)
    elif args.counts is not None:
        if args.q is None or args.genus is None:
            raise InvalidInputError("q", "--counts needs --q and --genus")
        z = zeta_from_counts(args.q, args.genus, [int(c) for c in _rationals(args.counts)])
    elif args.numerator is not None:
        z = _zeta(args.numerator, args.q)
    else:
        raise InvalidInputError("curve", "zeta compute needs --curve, --counts or --numerator")
    return serial.dumps(z.to_json())


# -- k0s -------------------------------------------------------------------------

def _elem(arg: str) -> SElement:
    try:
        return SElement.from_json(_json(arg))
    except (AttributeError, TypeError) as exc:
        raise InvalidInputError("element", f"expected an object of index: coefficient, got {arg!r}") from exc


def _elem_out(a: SElement) -> dict:
    return {str(k): v for k, v in a.terms.items()}


def cmd_k0s(args, cfg: Config) -> str:
    if args.op == "mul":
        return serial.dumps(_elem_out(s_mul(_elem(args.a), _elem(args.b))))
    if args.op == "psi":
        return str(psi(_elem(args.elem), args.n))
    x, y = zero_divisor_witness(args.nu)
    return serial.dumps({"a": _elem_out(x), "b": _elem_out(y), "product": _elem_out(s_mul(x, y))})


# -- indep -----------------------------------------------------------------------

def cmd_indep(args, cfg: Config) -> str:
    if args.op == "two-curves":
        z1, z2 = _zeta(args.p1, args.q), _zeta(args.p2, args.q)
        v = skolem.classify_two_curves(z1, z2, cfg.m_max, cfg.horizon)
        out = serial.dumps(v.to_json())
        if v.case == "Inconclusive":
            raise Failed(out)
        return out
    reps = jacobi.reps_from_json(_json(args.input))
    if args.op == "lattice":
        v = jacobi.lattice_dims(reps)
        out = serial.dumps({"dims": list(v.dims), "geometrically_independent": v.geometrically_independent})
        if not v.geometrically_independent:
            raise Failed(out)
        return out
    points = [tuple(_rationals(p)) for p in args.point or ()]
    fs = jacobi.char_from_eigenvalues(reps)
    v = jacobi.independence_witness(fs, cfg.trials, cfg.seed, points)
    payload = v.to_json()
    payload["characters"] = [str(f) for f in fs]
    out = serial.dumps(payload)
    if v.status == "inconclusive":
        raise Failed(out)
    return out


# -- skolem ----------------------------------------------------------------------

def cmd_skolem(args, cfg: Config) -> str:
    if args.op == "goodset":
        m = serial.measure_from_json(_json(args.input))
        return serial.dumps(skolem.ghost_zero_set(m, cfg.horizon).to_json())
    measures = serial.measures_from_json(_json(args.measures))
    raw = _json(args.factors) if _text(args.factors).lstrip().startswith("[") else [args.factors]
    factors = [skolem.IntPoly.parse(str(f), len(measures)) for f in raw]
    loc = skolem.localize_irreducible_relation(measures, factors, cfg.horizon)
    if loc is None:
        raise Failed(serial.dumps({"localized": None, "horizon": cfg.horizon}))
    return serial.dumps(loc.to_json())


# -- dh --------------------------------------------------------------------------

def cmd_dh(args, cfg: Config) -> str:
    op = args.op
    if op == "sigma":
        return str(dh.digit_sum(args.t, args.p, args.a))
    if op == "val":
        return str(dh.stickelberger_valuation(dh.JacobiSumIndex(args.j, args.t), args.p, args.a))
    if op == "jacobi":
        return str(dh.jacobi_sum(dh.JacobiSumIndex(args.j, args.t), args.p, args.a, cfg.bits, cfg.budget))
    if op == "threshold":
        th = dh.phi_threshold(args.p, cfg.horizon)
        return serial.dumps({"T": th.T, "failures": list(th.failures), "horizon": th.horizon, "note": th.note})
    m = dh.valuation_matrix(args.p, args.n, args.gamma)
    return serial.dumps({"X": [list(r) for r in m.X], "det": m.det, "a": m.a})


# -- verify ----------------------------------------------------------------------

def cmd_verify(args, cfg: Config) -> str:
    if args.suite == "all":
        numbers = sorted(acceptance.CHECKS)
    else:
        try:
            numbers = [int(v) for v in args.suite.split(",")]
        except ValueError as exc:
            raise InvalidInputError("suite", "--suite is 'all' or a comma list of criterion numbers") from exc
        unknown = [n for n in numbers if n not in acceptance.CHECKS]
        if unknown:
            raise InvalidInputError("suite", f"unknown criteria {unknown}")
    results = acceptance.run_all(numbers)
    lines = [r.line() for r in results]
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} passed")
    out = "\n".join(lines)
    if passed != len(results):
        raise Failed(out)
    return out


# -- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("configuration")
    g.add_argument("--trunc", type=int, help="truncation precision N (env GROTHWITT_TRUNC)")
    g.add_argument("--budget", type=int, help="enumeration budget (env GROTHWITT_BUDGET)")
    g.add_argument("--trials", type=int, help="random trial budget")
    g.add_argument("--seed", type=int, help="RNG seed (env GROTHWITT_SEED)")
    g.add_argument("--horizon", type=int, help="ghost-index horizon")
    g.add_argument("--mmax", type=int, dest="m_max", help="largest extension degree searched")
    g.add_argument("--bits", type=int, help="working precision of Jacobi sums")

    parser = argparse.ArgumentParser(prog="grothwitt", description="Big Witt vectors and motivic measures over finite fields.")
    mods = parser.add_subparsers(dest="module", metavar="module", required=True)

    def group(name, help_, handler):
        p = mods.add_parser(name, help=help_)
        p.set_defaults(handler=handler)
        sub = p.add_subparsers(dest="op", metavar="operation", required=True)
        return lambda op, help_: sub.add_parser(op, help=help_, parents=[common])

    add = group("witt", "truncated big Witt vectors", cmd_witt)
    for op, h in (("add", "Lambda-sum (series product)"), ("mul", "Lambda-product"), ("ghost", "ghost components"),
                  ("frob", "Frobenius F_nu"), ("versch", "Verschiebung V_nu")):
        p = add(op, h)
        p.add_argument("--a", required=True, help="coefficients of t^1, t^2, ... (comma list or JSON array)")
        if op in ("add", "mul"):
            p.add_argument("--b", required=True)
        if op in ("frob", "versch"):
            p.add_argument("--nu", type=int, required=True)
        p.add_argument("--json", action="store_true", help="print a JSON array of t^1.. coefficients")

    add = group("measure", "the motivic measure mu_q", cmd_measure)
    p = add("of", "measure of a curve")
    p.add_argument("--curve", help="curve JSON (inline, @file or path)")
    p.add_argument("--zeta", help="zeta JSON or numerator list")
    p.add_argument("--q", type=int)
    for op, h in (("ghost", "ghost component as a polynomial in T"), ("frob", "F_nu"), ("versch", "V_nu")):
        p = add(op, h)
        p.add_argument("--input", required=True, help="measure JSON")
        p.add_argument("--nu", type=int, required=True)
    p = add("mul", "product of measures")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)

    add = group("zeta", "point counts and zeta functions", cmd_zeta)
    p = add("count", "points over the degree-ext extension")
    p.add_argument("--curve", required=True)
    p.add_argument("--ext", type=int, default=1)
    p = add("compute", "zeta numerator")
    p.add_argument("--curve")
    p.add_argument("--counts", help="N_1..N_2g")
    p.add_argument("--numerator", help="P_1 coefficients")
    p.add_argument("--q", type=int)
    p.add_argument("--genus", type=int)

    add = group("k0s", "the zero-dimensional subring", cmd_k0s)
    p = add("mul", "product")
    p.add_argument("--a", required=True, help='element as JSON, e.g. {"2": 1}')
    p.add_argument("--b", required=True)
    p = add("psi", "number of k_n points")
    p.add_argument("--elem", required=True)
    p.add_argument("--n", type=int, required=True)
    p = add("zerodiv", "zero-divisor pair x_nu, x_nu - nu")
    p.add_argument("--nu", type=int, required=True)

    add = group("indep", "independence criteria", cmd_indep)
    p = add("jacobi", "Jacobian criterion on characters")
    p.add_argument("--input", required=True, help="representations JSON")
    p.add_argument("--point", action="append", help="extra specialization point, tried first (repeatable)")
    p = add("lattice", "rank growth of eigenvalue lattices")
    p.add_argument("--input", required=True)
    p = add("two-curves", "classify a pair of curves")
    p.add_argument("--q", type=int)
    p.add_argument("--p1", required=True, help="numerator list or zeta JSON")
    p.add_argument("--p2", required=True)

    add = group("skolem", "ghost zero sets and relations", cmd_skolem)
    p = add("goodset", "zero set of the ghost components")
    p.add_argument("--input", required=True)
    p = add("localize", "localize a relation to one irreducible factor")
    p.add_argument("--measures", required=True, help="JSON list of measures")
    p.add_argument("--factors", required=True, help='JSON list such as ["T1", "T1 - 2"]')

    add = group("dh", "Davenport-Hasse curves", cmd_dh)
    for op, h in (("sigma", "base-p digit sum"), ("val", "Stickelberger valuation"), ("jacobi", "Jacobi sum")):
        p = add(op, h)
        p.add_argument("--p", type=int, required=True)
        p.add_argument("--a", type=int, required=True)
        p.add_argument("--t", type=int, required=True)
        if op != "sigma":
            p.add_argument("--j", type=int, default=1)
    p = add("threshold", "phi threshold")
    p.add_argument("--p", type=int, required=True)
    p = add("matrix", "valuation matrix")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--gamma", type=int, required=True)

    p = mods.add_parser("verify", help="run the acceptance suite", parents=[common])
    p.add_argument("--suite", default="all", help="'all' or a comma list of criterion numbers")
    p.set_defaults(handler=cmd_verify, op=None)
    return parser


VALUE_FLAGS = {"--a", "--b", "--elem", "--p1", "--p2", "--counts", "--numerator", "--point", "--factors"}


def _glue_negative_values(argv: list[str]) -> list[str]:
    """Turn ``--a -3,2`` into ``--a=-3,2`` so argparse does not read -3,2 as an option."""
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in VALUE_FLAGS:
            nxt = next(it, None)
            if nxt is None:
                out.append(tok)
            elif nxt.startswith("-") and not nxt.startswith("--"):
                out.append(f"{tok}={nxt}")
            else:
                out.extend((tok, nxt))
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(_glue_negative_values(argv))
    except SystemExit as exc:  # usage errors and --help
        return int(exc.code or 0)
    try:
        cfg = Config.from_env().override(
            precision=args.trunc, budget=args.budget, trials=args.trials, seed=args.seed,
            horizon=args.horizon, m_max=args.m_max, bits=args.bits,
        )
        out = args.handler(args, cfg)
    except Failed as exc:
        print(exc.payload)
        return EXIT_FAILED
    except Inconclusive as exc:
        print(json.dumps({"inconclusive": str(exc), "data": exc.data}, default=str, separators=(",", ":")))
        return EXIT_FAILED
    except (InvalidInputError, BudgetExceeded, ValueError, KeyError, ZeroDivisionError, OSError) as exc:
        print(f"grothwitt: error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except Exception as exc:  # noqa: BLE001 - last-resort report
        print(f"grothwitt: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    print(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
