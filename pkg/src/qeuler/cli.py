"""Command-line front end: single values, tables, and the verification suite.

Output conventions: scalar commands print a plain value by default and a
typed JSON object with --format json; tables default to CSV (--format
json for a JSON array); verify always emits newline-delimited JSON
reports on stdout with a one-line summary on stderr.

Exit codes: 0 all good, 1 a verification failed, 2 usage/configuration
error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from .characters import enumerate_characters
from .cyclotomic import CyclotomicRational
from .euler import euler_number_q, euler_poly_q, gen_euler_number
from .integral import teichmuller
from .padic import Padic
from .padic_l import PLContext, l_pq
from .scalars import QParameter
from .verify import RunConfig, fmt_scalar, render_report_stream, run_verify
from .zeta import SeriesBudget, l_q_series, partial_zeta_Hq, zeta_qE, zeta_qE_at


class UsageError(ValueError):
    pass


def parse_q(text: str) -> QParameter:
    """Rational "a/b" or integer, float/complex, or "padic:p:M:value"."""
    text = text.strip()
    if text.startswith("padic:"):
        parts = text.split(":")
        if len(parts) != 4:
            raise UsageError("padic q spec is padic:p:M:value")
        p, M = int(parts[1]), int(parts[2])
        return QParameter.padic(Padic.from_rational(Fraction(parts[3]), p, M))
    if "/" in text:
        return QParameter.exact(Fraction(text))
    if any(c in text for c in ".eEjJ"):
        return QParameter.from_float(complex(text))
    return QParameter.exact(Fraction(int(text)))


def parse_s(text: str):
    text = text.strip()
    if "/" in text:
        return Fraction(text)
    try:
        return int(text)
    except ValueError:
        return complex(text)


def parse_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..")
        lo, hi = int(lo), int(hi)
        if hi < lo:
            raise UsageError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return [int(text)]


def plain(v) -> str:
    if isinstance(v, (Fraction, CyclotomicRational, Padic)):
        return str(v) if isinstance(v, Fraction) else repr(v)
    z = complex(v)
    if z.imag == 0:
        return repr(z.real)
    return repr(z)


def emit_scalar(v, fmt: str):
    if fmt == "json":
        print(json.dumps(fmt_scalar(v), sort_keys=True))
    else:
        print(plain(v))


def emit_table(rows: list[dict], fmt: str):
    if fmt == "json":
        print(json.dumps(rows, sort_keys=True))
        return
    if not rows:
        return
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]))
    writer.writeheader()
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


def _character(d: int, index: int):
    chis = enumerate_characters(d)
    if not 0 <= index < len(chis):
        raise UsageError(f"chi index {index} out of range (modulus {d} has {len(chis)})")
    return chis[index]


def _default_F(p: int, chi) -> int:
    F = p
    while F % chi.conductor or F % 2 == 0:
        F += p
    return F


def _table_value(v, fmt: str):
    return fmt_scalar(v) if fmt == "json" else plain(v)


# -- subcommand bodies ----------------------------------------------------------


def parse_x(text: str, q: QParameter):
    """Polynomial argument in the domain matching q."""
    if q.kind == "float":
        return float(text)
    return Fraction(text)


def cmd_euler(args, cfg: RunConfig) -> int:
    q = parse_q(args.q)
    if args.x is not None:
        v = euler_poly_q(args.n, parse_x(args.x, q), q)
    else:
        v = euler_number_q(args.n, q)
    emit_scalar(v, cfg.fmt)
    return 0


def cmd_euler_poly(args, cfg: RunConfig) -> int:
    q = parse_q(args.q)
    emit_scalar(euler_poly_q(args.n, parse_x(args.x, q), q), cfg.fmt)
    return 0


def cmd_gen_euler(args, cfg: RunConfig) -> int:
    q = parse_q(args.q)
    chi = _character(args.d, args.chi_index)
    F = args.F if args.F is not None else chi.modulus
    emit_scalar(gen_euler_number(args.n, chi, q, F), cfg.fmt)
    return 0


def cmd_zeta(args, cfg: RunConfig) -> int:
    q = parse_q(args.q)
    s = parse_s(args.s)
    budget = SeriesBudget(tolerance=cfg.tol / 1000, max_terms=cfg.max_terms)
    if args.x is not None:
        x = Fraction(args.x)
        v = zeta_qE(s, x, q, budget)
    else:
        v = zeta_qE_at(s, q, budget)
    emit_scalar(v, cfg.fmt)
    return 0


def cmd_lq(args, cfg: RunConfig) -> int:
    q = parse_q(args.q)
    chi = _character(args.d, args.chi_index)
    budget = SeriesBudget(tolerance=cfg.tol / 1000, max_terms=cfg.max_terms)
    emit_scalar(l_q_series(parse_s(args.s), chi, q, budget), cfg.fmt)
    return 0


def cmd_partial_zeta(args, cfg: RunConfig) -> int:
    q = parse_q(args.q)
    budget = SeriesBudget(tolerance=cfg.tol / 1000, max_terms=cfg.max_terms)
    v = partial_zeta_Hq(parse_s(args.s), args.a, args.F, q, budget, mode=args.mode)
    emit_scalar(v, cfg.fmt)
    return 0


def cmd_padic_l(args, cfg: RunConfig) -> int:
    q = parse_q(args.q)
    chi = _character(args.d, args.chi_index)
    F = args.F if args.F is not None else _default_F(args.p, chi)
    ctx = PLContext(p=args.p, q=q, chi=chi, F=F, M=cfg.prec)
    emit_scalar(l_pq(parse_s(args.s), ctx), cfg.fmt)
    return 0


def cmd_teichmuller(args, cfg: RunConfig) -> int:
    emit_scalar(teichmuller(args.a, args.p, cfg.prec), cfg.fmt)
    return 0


def cmd_table(args, cfg: RunConfig) -> int:
    kind = args.kind
    rows: list[dict] = []
    if kind == "characters":
        if args.d is None:
            raise UsageError("table characters needs --d")
        for i, chi in enumerate(enumerate_characters(args.d)):
            s = chi.serialize()
            rows.append(
                {
                    "index": i,
                    "modulus": s["modulus"],
                    "order": s["order"],
                    "conductor": s["conductor"],
                    "exponents": ";".join(map(str, s["exponent_list"])),
                    "generators": ";".join(map(str, s["generator_list"])),
                }
            )
    elif kind == "euler":
        q = parse_q(args.q)
        for n in parse_range(args.n):
            rows.append({"n": n, "value": _table_value(euler_number_q(n, q), cfg.fmt)})
    elif kind == "gen-euler":
        q = parse_q(args.q)
        chi = _character(args.d, args.chi_index)
        F = args.F if args.F is not None else chi.modulus
        for n in parse_range(args.n):
            rows.append(
                {"n": n, "value": _table_value(gen_euler_number(n, chi, q, F), cfg.fmt)}
            )
    elif kind == "zeta":
        q = parse_q(args.q)
        budget = SeriesBudget(tolerance=cfg.tol / 1000, max_terms=cfg.max_terms)
        for s in parse_range(args.s):
            if args.x is not None:
                v = zeta_qE(s, Fraction(args.x), q, budget)
            else:
                v = zeta_qE_at(s, q, budget)
            rows.append({"s": s, "value": _table_value(v, cfg.fmt)})
    elif kind == "lq":
        q = parse_q(args.q)
        chi = _character(args.d, args.chi_index)
        budget = SeriesBudget(tolerance=cfg.tol / 1000, max_terms=cfg.max_terms)
        for s in parse_range(args.s):
            rows.append(
                {"s": s, "value": _table_value(l_q_series(s, chi, q, budget), cfg.fmt)}
            )
    elif kind == "padic-l":
        q = parse_q(args.q)
        chi = _character(args.d, args.chi_index)
        F = args.F if args.F is not None else _default_F(args.p, chi)
        ctx = PLContext(p=args.p, q=q, chi=chi, F=F, M=cfg.prec)
        for s in parse_range(args.s):
            rows.append({"s": s, "value": _table_value(l_pq(s, ctx), cfg.fmt)})
    else:
        raise UsageError(f"unknown table kind {kind!r}")
    emit_table(rows, cfg.fmt if cfg.fmt in ("json", "csv") else "csv")
    return 0


def cmd_verify(args, cfg: RunConfig) -> int:
    reports, ok = run_verify(args.identities, cfg)
    sys.stdout.write(render_report_stream(reports, cfg))
    passed = sum(1 for r in reports if r.status == "pass")
    print(f"verify: {passed}/{len(reports)} instances passed", file=sys.stderr)
    return 0 if ok else 1


# -- argument wiring ----------------------------------------------------------------


def _add_global_flags(parser: argparse.ArgumentParser, suppress: bool):
    d = argparse.SUPPRESS if suppress else None
    parser.add_argument("--format", choices=["json", "csv", "plain"], default=d)
    parser.add_argument("--tol", type=float, default=d, help="float tolerance target")
    parser.add_argument("--prec", type=int, default=d, help="p-adic precision (digits)")
    parser.add_argument("--seed", type=int, default=d, help="seed for randomized sweeps")
    parser.add_argument("--max-level", type=int, default=d, help="cap on integral levels")
    parser.add_argument("--max-terms", type=int, default=d, help="cap on series terms")
    parser.add_argument(
        "--timings",
        action="store_true",
        default=argparse.SUPPRESS if suppress else False,
        help="include timings in reports",
    )
    parser.add_argument("--config", default=d, help="key=value configuration file")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="qeuler",
        description="q-Euler numbers/polynomials, q-zeta and l series, and their "
        "p-adic interpolations, with a machine-checked identity suite",
    )
    _add_global_flags(ap, suppress=False)
    # the same flags are accepted after the subcommand; SUPPRESS keeps the
    # subparser from clobbering values parsed before it
    common = argparse.ArgumentParser(add_help=False)
    _add_global_flags(common, suppress=True)
    subparsers = ap.add_subparsers(dest="command", required=True)

    def sub_parser(name, **kw):
        return subparsers.add_parser(name, parents=[common], **kw)

    sub = type("S", (), {"add_parser": staticmethod(sub_parser)})()

    p = sub.add_parser("euler", help="E_{n,q}, or E_{n,q}(x) with --x")
    p.add_argument("n", type=int)
    p.add_argument("--q", required=True)
    p.add_argument("--x", default=None)
    p.set_defaults(fn=cmd_euler)

    p = sub.add_parser("euler-poly", help="E_{n,q}(x)")
    p.add_argument("n", type=int)
    p.add_argument("--x", required=True)
    p.add_argument("--q", required=True)
    p.set_defaults(fn=cmd_euler_poly)

    p = sub.add_parser("gen-euler", help="generalized number E_{n,chi,q}")
    p.add_argument("n", type=int)
    p.add_argument("--d", type=int, required=True, help="character modulus")
    p.add_argument("--chi-index", type=int, default=0)
    p.add_argument("--q", required=True)
    p.add_argument("--F", type=int, default=None)
    p.set_defaults(fn=cmd_gen_euler)

    p = sub.add_parser("zeta", help="alternating q-zeta value")
    p.add_argument("--s", required=True)
    p.add_argument("--x", default=None)
    p.add_argument("--q", required=True)
    p.set_defaults(fn=cmd_zeta)

    p = sub.add_parser("lq", help="chi-weighted l series value")
    p.add_argument("--s", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--chi-index", type=int, default=0)
    p.add_argument("--q", required=True)
    p.set_defaults(fn=cmd_lq)

    p = sub.add_parser("partial-zeta", help="one residue class of the l series")
    p.add_argument("--s", required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--F", type=int, required=True)
    p.add_argument("--q", required=True)
    p.add_argument("--mode", choices=["closed", "direct"], default="closed")
    p.set_defaults(fn=cmd_partial_zeta)

    p = sub.add_parser("padic-l", help="p-adic interpolating function")
    p.add_argument("--s", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", required=True)
    p.add_argument("--d", type=int, default=1)
    p.add_argument("--chi-index", type=int, default=0)
    p.add_argument("--F", type=int, default=None)
    p.set_defaults(fn=cmd_padic_l)

    p = sub.add_parser("teichmuller", help="Teichmuller root of unity at a")
    p.add_argument("a", type=int)
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(fn=cmd_teichmuller)

    p = sub.add_parser("table", help="value tables (CSV/JSON)")
    p.add_argument(
        "kind", choices=["euler", "gen-euler", "zeta", "lq", "padic-l", "characters"]
    )
    p.add_argument("--n", default="0..5")
    p.add_argument("--s", default="-5..-1")
    p.add_argument("--x", default=None)
    p.add_argument("--q", default="1/2")
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--chi-index", type=int, default=0)
    p.add_argument("--F", type=int, default=None)
    p.add_argument("--p", type=int, default=3)
    p.set_defaults(fn=cmd_table)

    p = sub.add_parser("verify", help="run identity verification sweeps")
    p.add_argument(
        "identities",
        nargs="+",
        help="identity names (thm1 thm2 thm4 thm6 thm7b thm7c cor8 eq9 eq21 "
        "eq22 eq24prime measure_additivity measure_scaling "
        "distribution_relation) or 'all'",
    )
    p.set_defaults(fn=cmd_verify)
    return ap


def load_config_file(path: str) -> dict:
    out = {}
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise UsageError(f"bad config line: {line!r}")
            key, _, value = line.partition("=")
            out[key.strip()] = value.strip()
    return out


_CONFIG_KEYS = {
    "tol": float,
    "prec": int,
    "seed": int,
    "max_level": int,
    "max_terms": int,
    "format": str,
}


def resolve_config(args) -> RunConfig:
    cfg = RunConfig()
    format_from_file = None
    if args.config:
        fileconf = load_config_file(args.config)
        unknown = set(fileconf) - set(_CONFIG_KEYS)
        if unknown:
            raise UsageError(f"unknown config keys: {', '.join(sorted(unknown))}")
        for key, conv in _CONFIG_KEYS.items():
            if key in fileconf:
                setattr(cfg, "fmt" if key == "format" else key, conv(fileconf[key]))
        format_from_file = fileconf.get("format")
    env_seed = os.environ.get("QEULER_SEED")
    if env_seed is not None and args.seed is None:
        cfg.seed = int(env_seed)
    for attr, flag in [
        ("tol", args.tol),
        ("prec", args.prec),
        ("seed", args.seed),
        ("max_level", args.max_level),
        ("max_terms", args.max_terms),
    ]:
        if flag is not None:
            setattr(cfg, attr, flag)
    if args.format is not None:
        cfg.fmt = args.format
    elif format_from_file is None:
        # per-command defaults: CSV tables, JSON verify stream, plain scalars
        fn = getattr(args, "fn", None)
        cfg.fmt = "csv" if fn is cmd_table else "json" if fn is cmd_verify else "plain"
    cfg.timings = args.timings
    return cfg


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        cfg = resolve_config(args)
        return args.fn(args, cfg)
    except BrokenPipeError:
        return 0
    except KeyboardInterrupt:
        return 2
    except Exception as exc:  # noqa: BLE001 - CLI boundary
        print(f"qeuler: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
