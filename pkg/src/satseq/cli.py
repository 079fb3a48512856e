"""Command-line entry point.

Exit codes: 0 success, 2 verification failure, 3 resource limit (or rows
skipped for one), 4 bad arguments.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from . import __version__, explore, gordan, laurent, reps, splitting, verify
from .config import FORMATS, ConfigError, RunConfig, build_config, load_config_file
from .linalg import ResourceLimitExceeded
from .poly import serialize
from .report import jsonable, seq, to_csv, to_json
from .saturation import CacheMismatch, SaturationEngine, ic_dim
from .store import ResultCache
from .transvectants import ExpressionError, evaluate, specialize

EXIT_OK, EXIT_VERIFY, EXIT_LIMIT, EXIT_ARGS = 0, 2, 3, 4


class ArgumentError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        kwargs.setdefault("allow_abbrev", False)  # --m must not match --max-rows
        super().__init__(*args, **kwargs)

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ARGS, f"{self.prog}: error: {message}\n")


# flags that map onto RunConfig fields
_CONFIG_FLAGS = ("seed", "certify", "max_rows", "max_cols", "max_primes", "guard_degrees",
                 "guard_max_rows", "time_budget", "cache_dir", "no_cache", "format")


def _global_options() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    S = argparse.SUPPRESS
    p.add_argument("--format", choices=FORMATS, default=S)
    p.add_argument("--seed", type=int, default=S, help="prime / sampling seed")
    p.add_argument("--certify", action="store_true", default=S, help="exact rational ranks")
    p.add_argument("--max-rows", type=int, default=S)
    p.add_argument("--max-cols", type=int, default=S)
    p.add_argument("--max-primes", type=int, default=S)
    p.add_argument("--guard-degrees", type=int, default=S)
    p.add_argument("--guard-max-rows", type=int, default=S)
    p.add_argument("--time-budget", type=float, default=S, help="seconds per row")
    p.add_argument("--cache-dir", default=S)
    p.add_argument("--no-cache", action="store_true", default=S)
    p.add_argument("--config", default=S, help="JSON file with RunConfig fields")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _global_options()
    parser = _Parser(prog="satseq", parents=[common],
                     description="Saturation sequences of Hessian ideals of binary forms.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("table", parents=[common], help="saturation sequences for a range of d")
    p.add_argument("d_min", type=int)
    p.add_argument("d_max", type=int)

    p = sub.add_parser("saturation", parents=[common], help="saturation sequence of one d")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--dims", action="store_true", help="also list dim J_2q,m and dim I_C,m")

    p = sub.add_parser("transvect", parents=[common], help="evaluate a transvectant expression")
    p.add_argument("expr")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--specialize", help="comma separated coefficients of x1^(d-i) x2^i")

    p = sub.add_parser("gordan", parents=[common], help="Gordan syzygies and elimination determinants")
    gsub = p.add_subparsers(dest="gordan_command", required=True, parser_class=_Parser)
    g = gsub.add_parser("verify", parents=[common])
    g.add_argument("--d", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--w", type=int, required=True)
    g.add_argument("--upper", action="store_true")
    g = gsub.add_parser("delta", parents=[common])
    g.add_argument("--s", type=int, required=True)
    g.add_argument("--t", type=int, required=True)
    g.add_argument("--d", type=int, required=True)
    g.add_argument("--below-limit", action="store_true", help="allow d < 4s-2 when indices fit")
    g = gsub.add_parser("threshold", parents=[common])
    g.add_argument("--s", type=int, required=True)
    g.add_argument("--dmax", type=int, required=True)

    p = sub.add_parser("splitting", parents=[common], help="splitting type of the syzygy bundle")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--rule", choices=splitting.RULES, default="lowest")

    p = sub.add_parser("decompose", parents=[common], help="isotypic decomposition of Sym^m S_d")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("verify-paper", parents=[common], help="reproduce the published values")
    p.add_argument("--full", action="store_true", help="include the slower table rows")

    p = sub.add_parser("explore", parents=[common], help="empirical checks of the open statements")
    p.add_argument("--dmax", type=int, required=True)
    p.add_argument("--smax", type=int, default=3)
    return parser


# -- output ----------------------------------------------------------------------


def _flatten(obj: Any, prefix: str = "") -> List[tuple]:
    if isinstance(obj, dict):
        out = []
        for k in sorted(obj):
            out.extend(_flatten(obj[k], f"{prefix}.{k}" if prefix else str(k)))
        return out
    if isinstance(obj, list) and all(not isinstance(x, (dict, list)) for x in obj):
        return [(prefix, seq(obj))]
    if isinstance(obj, list):
        out = []
        for i, x in enumerate(obj):
            out.extend(_flatten(x, f"{prefix}[{i}]"))
        return out
    return [(prefix, "" if obj is None else obj)]


def emit(cfg: RunConfig, payload: Dict[str, Any], rows: Optional[tuple] = None) -> str:
    """payload always carries the config; ``rows`` = (header, rows) for tabular csv."""
    data = {"config": cfg.as_dict(), **payload}
    if cfg.format == "json":
        return to_json(data)
    flat = _flatten(jsonable(data))
    if cfg.format == "csv":
        if rows is not None:
            config_line = "# config " + json.dumps(jsonable(cfg.as_dict()), sort_keys=True) + "\n"
            return config_line + to_csv(*rows)
        return to_csv(("key", "value"), flat)
    return "".join(f"{k}: {v}\n" for k, v in flat)


# -- commands ----------------------------------------------------------------------


def _engine(cfg: RunConfig) -> SaturationEngine:
    directory = cfg.resolved_cache_dir()
    cache = ResultCache(directory) if directory is not None else None
    return SaturationEngine(cfg.rank_config(), cache)


def _flush(engine: SaturationEngine) -> None:
    if engine.cache is not None:
        engine.cache.flush()


def _row(rec) -> Dict[str, Any]:
    s = rec.big_s
    lower_ok = s is not None and rec.zeta.at_most(s)
    upper_ok = s is not None and s <= rec.d + 2
    return {
        "d": rec.d,
        "status": "ok",
        "alphas": rec.alphas,
        "satieties": rec.satieties,
        "S": s,
        "zeta_square": rec.zeta.square,
        "zeta_decimal": str(rec.zeta.decimal(12)),
        "bounds_hold": lower_ok and upper_ok,
        "methods": rec.methods,
        "certified": rec.certified,
        "guards": rec.guards,
        "notes": rec.notes,
    }


def cmd_table(cfg: RunConfig, d_min: int, d_max: int):
    if not 4 <= d_min <= d_max:
        raise ArgumentError("need 4 <= d_min <= d_max")
    engine = _engine(cfg)
    rows = []
    for d in range(d_min, d_max + 1):
        engine.set_budget(cfg.time_budget)
        try:
            rows.append(_row(engine.saturation_sequence(d)))
        except ResourceLimitExceeded as exc:
            rows.append({"d": d, "status": "skipped: limit", "reason": str(exc)})
        _flush(engine)  # a partial table resumes from here
    engine.set_budget(None)
    code = EXIT_OK
    if any(r["status"] != "ok" for r in rows):
        code = EXIT_LIMIT
    if any(r.get("bounds_hold") is False or any(g["status"] == "failed" for g in r.get("guards", []))
           for r in rows):
        code = EXIT_VERIFY
    header = ("d", "status", "alphas", "satieties", "S", "zeta_square", "bounds_hold", "certified")
    table = [(r["d"], r["status"], seq(r.get("alphas", [])), seq(r.get("satieties", [])),
              r.get("S", ""), jsonable(r.get("zeta_square", "")), r.get("bounds_hold", ""),
              seq(r.get("certified", []))) for r in rows]
    return {"rows": rows}, code, (header, table)


def cmd_saturation(cfg: RunConfig, d: int, dims: bool):
    if d < 4:
        raise ArgumentError("d must be >= 4")
    engine = _engine(cfg)
    engine.set_budget(cfg.time_budget)
    try:
        rec = engine.saturation_sequence(d)
        payload: Dict[str, Any] = {"record": _row(rec)}
        if dims:
            top = rec.big_s or d + 2
            payload["dims"] = [
                {"m": m, "ic": ic_dim(d, m),
                 "ideal": [engine.ideal_dim(d, q, m).dim for q in range(1, d // 2 + 1)]}
                for m in range(2, top + 1)
            ]
    finally:
        _flush(engine)
    bad = not payload["record"]["bounds_hold"] or any(g["status"] == "failed" for g in rec.guards)
    return payload, EXIT_VERIFY if bad else EXIT_OK, None


def cmd_transvect(cfg: RunConfig, expr: str, d: int, coeffs: Optional[str]):
    if d < 1:
        raise ArgumentError("d must be >= 1")
    try:
        C = evaluate(expr, d)
    except ExpressionError as exc:
        raise ArgumentError(str(exc)) from exc
    payload: Dict[str, Any] = {"expr": expr, "d": d, "degree": C.degree, "order": C.order}
    if coeffs is not None:
        try:
            values = [int(x) if "/" not in x else x for x in coeffs.split(",")]
            C = specialize(C, [Fraction(v) for v in values])
        except ValueError as exc:
            raise ArgumentError(str(exc)) from exc
        payload["specialized"] = coeffs
    payload["zero"] = C.is_zero()
    payload["value"] = serialize(C.body)
    return payload, EXIT_OK, None


def cmd_gordan_verify(cfg: RunConfig, d: int, k: int, w: int, upper: bool):
    try:
        combo = gordan.gordan_upper(d, k, w) if upper else gordan.gordan_lower(d, k, w)
    except ValueError as exc:
        raise ArgumentError(str(exc)) from exc
    zero = gordan.expand_to_zero(d, combo)
    payload = {"family": "upper" if upper else "lower", "k": k, "combination": combo,
               "expands_to_zero": zero}
    return payload, EXIT_OK if zero else EXIT_VERIFY, None


def cmd_gordan_delta(cfg: RunConfig, s: int, t: int, d: int, below_limit: bool):
    try:
        M = gordan.build_matrix(d, s, t, require_bound=not below_limit)
        det = gordan.elimination_determinant(d, s, t, require_bound=not below_limit)
    except ValueError as exc:
        raise ArgumentError(str(exc)) from exc
    return {"d": d, "s": s, "t": t, "matrix": M, "determinant": det,
            "vanishes": det == 0}, EXIT_OK, None


def cmd_gordan_threshold(cfg: RunConfig, s: int, d_max: int):
    if s < 1 or d_max < gordan.threshold_lower_limit(s):
        raise ArgumentError(f"need s >= 1 and dmax >= {gordan.threshold_lower_limit(max(s, 1))}")
    return {"result": gordan.threshold_search(s, d_max)}, EXIT_OK, None


def cmd_splitting(cfg: RunConfig, d: int, rule: str):
    if d < 3:
        raise ArgumentError("d must be >= 3")
    res = splitting.splitting_type(d, rule)
    b = res.factorization
    ok = splitting.bounds_hold(d, res.twists)
    payload = {
        "d": d,
        "rule": rule,
        "twists": res.twists,
        "multiset": res.multiset,
        "rank": len(res.twists),
        "bounds_hold": ok,
        "all_equal_minus_3d_plus_1": all(t == -(3 * d - 1) for t in res.twists),
        "Q": laurent.format_matrix(res.Q),
        "E": laurent.format_matrix(b.E),
        "D": laurent.format_matrix(b.D),
        "F": laurent.format_matrix(b.F),
    }
    return payload, EXIT_OK if ok else EXIT_VERIFY, None


def cmd_decompose(cfg: RunConfig, d: int, m: int):
    if d < 0 or m < 0:
        raise ArgumentError("d and m must be >= 0")
    dec = reps.decompose_sym(d, m)
    return {"d": d, "m": m, "decomposition": str(dec),
            "parts": [{"order": n, "multiplicity": k} for n, k in dec.parts],
            "dimension": dec.dimension()}, EXIT_OK, None


def cmd_verify_paper(cfg: RunConfig, full: bool):
    results = verify.run(full)
    failed = [r.label for r in results if not r.ok]
    for label in failed:
        print(f"FAILED: {label}", file=sys.stderr)
    return {"items": results, "passed": len(results) - len(failed), "failed": failed}, \
        EXIT_VERIFY if failed else EXIT_OK, None


def cmd_explore(cfg: RunConfig, d_max: int, s_max: int):
    if d_max < 4 or s_max < 1:
        raise ArgumentError("need dmax >= 4 and smax >= 1")
    engine = _engine(cfg)
    engine.set_budget(cfg.time_budget)
    try:
        rep = explore.explore(d_max, s_max, engine)
    finally:
        _flush(engine)
    if rep.counterexamples_found:
        print("COUNTEREXAMPLE FOUND: see the report", file=sys.stderr)
    return {"report": rep}, EXIT_OK, None


def _dispatch(cfg: RunConfig, ns: argparse.Namespace):
    c = ns.command
    if c == "table":
        return cmd_table(cfg, ns.d_min, ns.d_max)
    if c == "saturation":
        return cmd_saturation(cfg, ns.d, ns.dims)
    if c == "transvect":
        return cmd_transvect(cfg, ns.expr, ns.d, ns.specialize)
    if c == "gordan":
        if ns.gordan_command == "verify":
            return cmd_gordan_verify(cfg, ns.d, ns.k, ns.w, ns.upper)
        if ns.gordan_command == "delta":
            return cmd_gordan_delta(cfg, ns.s, ns.t, ns.d, ns.below_limit)
        return cmd_gordan_threshold(cfg, ns.s, ns.dmax)
    if c == "splitting":
        return cmd_splitting(cfg, ns.d, ns.rule)
    if c == "decompose":
        return cmd_decompose(cfg, ns.d, ns.m)
    if c == "verify-paper":
        return cmd_verify_paper(cfg, ns.full)
    return cmd_explore(cfg, ns.dmax, ns.smax)


_NON_PARAMS = set(_CONFIG_FLAGS) | {"config", "command"}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    values = vars(ns)
    try:
        file_values = load_config_file(values["config"]) if "config" in values else {}
        flags = {k: values.get(k) for k in _CONFIG_FLAGS}
        params = {k: v for k, v in values.items() if k not in _NON_PARAMS}
        flags["command"] = ns.command
        flags["params"] = params
        cfg = build_config(file_values, flags)
    except ConfigError as exc:
        print(f"satseq: error: {exc}", file=sys.stderr)
        return EXIT_ARGS
    try:
        payload, code, rows = _dispatch(cfg, ns)
    except ArgumentError as exc:
        print(f"satseq: error: {exc}", file=sys.stderr)
        return EXIT_ARGS
    except ResourceLimitExceeded as exc:
        print(f"satseq: resource limit: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except CacheMismatch as exc:
        print(f"satseq: cache mismatch: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    sys.stdout.write(emit(cfg, payload, rows))
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
