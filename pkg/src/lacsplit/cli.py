"""Command-line front end.

Exit status: 0 success, 1 bad configuration, 2 invariant violation found by
a verification suite, 3 enumeration budget exhausted.
"""

from __future__ import annotations

import argparse
import logging
import math
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import __version__, census, emit, sweeps
from .cache import ResultCache, cache_key
from .errors import BudgetExceeded, InvariantViolation, NotPrime, TooLarge
from .fieldcore import divisors_at_least, make_context
from .lacunary import ExponentPattern, LacunaryPoly
from .zerostats import dt_floor_check, zero_bound_report

log = logging.getLogger("lacsplit")

COMMANDS = ("census", "verify-lemmas", "zero-bound", "domination", "bound-compare")
EXIT_OK, EXIT_CONFIG, EXIT_VIOLATION, EXIT_BUDGET = 0, 1, 2, 3
DEFAULT_BUDGET = 10**9


class ConfigError(Exception):
    def __init__(self, field_name: str, message: str):
        super().__init__(f"{field_name}: {message}")
        self.field = field_name


@dataclass
class RunConfig:
    command: str
    p: int
    k: int
    t: list[int] = field(default_factory=list)
    D: int | None = None
    jobs: int = 1
    out: str | None = None
    format: str = "csv"
    budget: int = DEFAULT_BUDGET
    strict_pattern: bool = True
    all_patterns: bool = False
    cache: bool = False


def parse_range(text: str) -> list[int]:
    """``7`` or ``2..12`` (inclusive) into an ascending list."""
    text = str(text).strip()
    if ".." in text:
        lo, hi = text.split("..", 1)
        lo, hi = int(lo), int(hi)
        if lo > hi:
            raise ValueError(f"empty range {text}")
        return list(range(lo, hi + 1))
    return [int(text)]


def read_config_file(path: str) -> dict[str, str]:
    """Flat ``key = value`` file; ``#`` starts a comment."""
    entries = {}
    for n, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError("config", f"{path}:{n}: expected key=value")
        key, value = (s.strip() for s in line.split("=", 1))
        entries[key.replace("-", "_")] = value
    return entries


def _bool(text) -> bool:
    if isinstance(text, bool):
        return text
    v = str(text).lower()
    if v in ("1", "true", "yes", "on"):
        return True
    if v in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {text}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="flat key=value file; flags override it")
    common.add_argument("--p")
    common.add_argument("--k")
    common.add_argument("--t", help="value or inclusive range such as 2..12")
    common.add_argument("--D")
    common.add_argument("--jobs")
    common.add_argument("--out")
    common.add_argument("--format", choices=("csv", "json"))
    common.add_argument("--budget")
    common.add_argument("--strict-pattern", dest="strict_pattern", action="store_const", const="true")
    common.add_argument("--no-strict-pattern", dest="strict_pattern", action="store_const", const="false")
    common.add_argument("--all-patterns", dest="all_patterns", action="store_const", const="true",
                        help="census: also list patterns without a split witness")
    common.add_argument("--cache", action="store_const", const="true",
                        help="reuse results from the cache directory")
    common.add_argument("-v", "--verbose", action="store_true")
    parser = argparse.ArgumentParser(prog="lacsplit", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def make_config(ns: argparse.Namespace) -> RunConfig:
    values = read_config_file(ns.config) if ns.config else {}
    for key, v in vars(ns).items():
        if v is not None and key not in ("config", "verbose", "command"):
            values[key] = v

    def need(name, conv):
        if name not in values:
            raise ConfigError(name, "is required")
        try:
            return conv(values[name])
        except (TypeError, ValueError) as exc:
            raise ConfigError(name, str(exc)) from None

    def opt(name, conv, default):
        return need(name, conv) if name in values else default

    cfg = RunConfig(command=ns.command, p=need("p", int), k=opt("k", int, 1))
    cfg.t = opt("t", parse_range, [])
    cfg.D = opt("D", int, None)
    cfg.jobs = opt("jobs", int, 1)
    cfg.out = values.get("out")
    cfg.format = opt("format", str, "csv")
    cfg.budget = opt("budget", int, DEFAULT_BUDGET)
    cfg.strict_pattern = opt("strict_pattern", _bool, True)
    cfg.all_patterns = opt("all_patterns", _bool, False)
    cfg.cache = opt("cache", _bool, False)
    validate(cfg)
    return cfg


def validate(cfg: RunConfig) -> None:
    try:
        make_context(cfg.p)
    except (NotPrime, TooLarge) as exc:
        raise ConfigError("p", str(exc)) from None
    if cfg.k < 1:
        raise ConfigError("k", "must be >= 1")
    if cfg.command in ("census", "bound-compare", "domination") and not cfg.t:
        raise ConfigError("t", "is required")
    for t in cfg.t:
        if not 1 <= t < cfg.p:
            raise ConfigError("t", f"{t} must satisfy 1 <= t < p = {cfg.p}")
    if cfg.jobs < 1:
        raise ConfigError("jobs", "must be >= 1")
    if cfg.D is not None and cfg.D < 1:
        raise ConfigError("D", "must be >= 1")
    if cfg.format not in ("csv", "json"):
        raise ConfigError("format", "must be csv or json")
    if cfg.budget < 1:
        raise ConfigError("budget", "must be >= 1")


def _t_values(cfg: RunConfig) -> list[int]:
    return cfg.t or list(range(1, cfg.p))


def _render(cfg, header, rows, obj) -> str:
    return emit.csv_text(header, rows) if cfg.format == "csv" else emit.json_text(obj)


def run_census(cfg: RunConfig) -> tuple[str, int]:
    ctx = make_context(cfg.p)
    records = [census.count_Nk(ctx, cfg.k, t, strict=cfg.strict_pattern, jobs=cfg.jobs,
                               budget=cfg.budget)
               for t in _t_values(cfg)]
    if cfg.format == "csv":
        return emit.census_csv(records, cfg.all_patterns), EXIT_OK
    return emit.census_json(records, cfg.all_patterns), EXIT_OK


def run_bound_compare(cfg: RunConfig) -> tuple[str, int]:
    ctx = make_context(cfg.p)
    header = ("p", "k", "t", "N", "trivial_bound", "bound_leading", "slack",
              "simplified_exponent", "simplified_value", "nontrivial")
    rows, objs = [], []
    for t in _t_values(cfg):
        rec = census.count_Nk(ctx, cfg.k, t, strict=cfg.strict_pattern, jobs=cfg.jobs,
                              budget=cfg.budget)
        b = census.theorem_bound(cfg.p, cfg.k, t)
        row = (cfg.p, cfg.k, t, rec.N, b.trivial_bound, b.leading, rec.N / b.leading,
               b.simplified_exponent, b.simplified_value, b.nontrivial)
        rows.append(row)
        objs.append(dict(zip(header, row)))
    return _render(cfg, header, rows, objs), EXIT_OK


def run_zero_bound(cfg: RunConfig) -> tuple[str, int]:
    ctx = make_context(cfg.p)
    header = ("p", "k", "t", "pattern", "witness", "D", "Q", "leading", "secondary", "ratio",
              "dt_rhs", "dt_ratio")
    rows = []
    for t in _t_values(cfg):
        rec = census.count_Nk(ctx, cfg.k, t, strict=cfg.strict_pattern, jobs=cfg.jobs,
                              budget=cfg.budget)
        for e in rec.per_pattern:
            if not e.splittable:
                continue
            pattern = ExponentPattern(e.pattern, ctx)
            zb = zero_bound_report(LacunaryPoly(pattern, e.witness, strict=cfg.strict_pattern))
            dt = dt_floor_check(pattern, True)
            rows.append((cfg.p, cfg.k, t, e.pattern, e.witness, zb.D, zb.Q, zb.leading,
                         zb.secondary, zb.ratio, dt.rhs, dt.ratio))
    max_ratio = max((r[9] for r in rows), default=0.0)
    max_dt = max((r[11] for r in rows), default=0.0)
    log.info("max zero-bound ratio %r, max D-floor ratio %r", max_ratio, max_dt)
    summary = ("#max", max_ratio, max_dt)
    obj = {"rows": [dict(zip(header, r)) for r in rows], "max_ratio": max_ratio,
           "max_dt_ratio": max_dt}
    return _render(cfg, header, rows + [summary], obj), EXIT_OK


def run_domination(cfg: RunConfig) -> tuple[str, int]:
    ctx = make_context(cfg.p)
    header = ("p", "k", "t", "D", "graph", "M", "min_degree", "dominating_set", "case",
              "eq5", "eq6", "eq7", "case_bound", "slack", "excluded")
    rows, objs = [], []
    for t in _t_values(cfg):
        Ds = [cfg.D] if cfg.D else [d for d in divisors_at_least(ctx, 1) if d <= t]
        for D in Ds:
            recs = census.mp_bound_report(ctx, cfg.k, t, D, budget=cfg.budget)
            for r in recs:
                row = (cfg.p, cfg.k, t, D, r.graph, r.M, r.min_degree, r.dominating_set or None,
                       r.case, r.eq5, r.eq6, r.eq7, r.case_bound, r.slack, r.excluded)
                rows.append(row)
                objs.append(dict(zip(header, row)))
            total = sum(r.M for r in recs)
            if total != math.comb(t - 1, cfg.k - 1):
                raise InvariantViolation(f"classification lost patterns at t={t}, D={D}")
            rows.append(("#total", t, D, total))
    return _render(cfg, header, rows, objs), EXIT_OK


def verification_cost(p: int, k: int) -> int:
    """Rough count of enumeration steps performed by verify-lemmas."""
    ks = range(1, min(k, p - 1) + 1)
    coeff = sum(math.comb(p - 1, j) * (p - 1) ** j for j in ks)
    roots = math.comb(2 * p - 3, p - 1)
    graphs = 1 << ((k + 1) * k // 2)
    return 2 * coeff + roots + graphs


def run_verify(cfg: RunConfig) -> tuple[str, int]:
    p, k = cfg.p, cfg.k
    cost = verification_cost(p, k)
    if cost > cfg.budget:
        raise BudgetExceeded(f"verification needs ~{cost} steps, budget is {cfg.budget}")
    results = [
        sweeps.multiplicity_sweep((p,), k),
        sweeps.determinant_sweep(tmax=p - 1, kmax=min(k, p - 1)),
        sweeps.ore_sweep(2, k + 1),
        sweeps.delta_claim_sweep((p,), k),
        sweeps.split_equivalence_sweep((p,), k, random_cases=0),
    ]
    cs = sweeps.census_sweep((p,), k)
    results += [cs.equivalence, cs.root_floor, cs.witnesses]
    header = ("check", "cases", "violations")
    rows = [(r.name, r.cases, len(r.violations)) for r in results]
    for r in results:
        for v in r.violations[:20]:
            log.error("%s violation: %s", r.name, v)
    obj = {r.name: {"cases": r.cases, "violations": len(r.violations)} for r in results}
    status = EXIT_OK if all(r.ok for r in results) else EXIT_VIOLATION
    return _render(cfg, header, rows, obj), status


RUNNERS = {
    "census": run_census,
    "verify-lemmas": run_verify,
    "zero-bound": run_zero_bound,
    "domination": run_domination,
    "bound-compare": run_bound_compare,
}


def _write(cfg: RunConfig, data: bytes) -> None:
    if cfg.out:
        Path(cfg.out).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def run(cfg: RunConfig) -> int:
    cacheable = cfg.cache and cfg.command != "verify-lemmas"
    key = None
    if cacheable:
        key = cache_key(command=cfg.command, p=cfg.p, k=cfg.k, t=cfg.t, D=cfg.D,
                        strict=cfg.strict_pattern, format=cfg.format,
                        all_patterns=cfg.all_patterns, version=__version__)
        hit = ResultCache().get(key)
        if hit is not None:
            log.info("cache hit %s", key[:12])
            _write(cfg, hit)
            return EXIT_OK
    try:
        text, status = RUNNERS[cfg.command](cfg)
    except BudgetExceeded as exc:
        log.error("budget exhausted: %s", exc)
        return EXIT_BUDGET
    except InvariantViolation as exc:
        log.error("invariant violated: %s", exc)
        return EXIT_VIOLATION
    data = text.encode("utf-8")
    if key is not None and status == EXIT_OK:
        ResultCache().put(key, data)
    _write(cfg, data)
    return status


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if ns.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        cfg = make_config(ns)
    except ConfigError as exc:
        print(f"lacsplit: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"lacsplit: error: config: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
