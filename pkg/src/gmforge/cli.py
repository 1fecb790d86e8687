"""The ``gm`` command line.

Verbs: ``table1``, ``recipe STEP``, ``congruence``, ``describe``, ``export``
and ``selfcheck``.  Session settings come from flags, then the environment
(``GMFORGE_PRIME``, ``GMFORGE_SEED``, ``GMFORGE_TIER``, ``GMFORGE_FIXTURES``,
``GMFORGE_FORMAT``), then defaults.

Exit codes: 0 all checks passed, 1 unexpected failure, 2 usage error,
3 computation budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from .arith import DEFAULT_PRIME, is_prime

REPORT_SCHEMA = "gmforge-report v1"
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

RECIPE_TARGETS = {
    "edge": "edge",
    "nodal": "nodal",
    "quintic": "quintic",
    "scroll": "scroll",
    "semple": "semple",
    "t-surface": "t-surface",
    "gm4": "gm4",
    "all": "gm4",
}


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class SessionConfig:
    prime: int = DEFAULT_PRIME
    seed: int = 0
    tier: str = "core"
    format: str = "text"
    fixtures: str | None = None

    def to_dict(self) -> dict:
        return {"prime": self.prime, "seed": self.seed, "tier": self.tier, "fixtures": self.fixtures}


def resolve_config(args, env=None) -> SessionConfig:
    """Flag > environment > default."""
    env = os.environ if env is None else env

    def pick(flag, key, default, conv=str):
        if flag is not None:
            return conv(flag)
        if key in env and env[key] != "":
            try:
                return conv(env[key])
            except ValueError as exc:
                raise UsageError(f"bad value for {key}: {env[key]!r}") from exc
        return default

    cfg = SessionConfig(
        prime=pick(args.prime, "GMFORGE_PRIME", DEFAULT_PRIME, int),
        seed=pick(args.seed, "GMFORGE_SEED", 0, int),
        tier=pick(args.tier, "GMFORGE_TIER", "core"),
        format=pick(args.format, "GMFORGE_FORMAT", "text"),
        fixtures=pick(args.fixtures, "GMFORGE_FIXTURES", None),
    )
    if not (2 < cfg.prime < 2**31) or not is_prime(cfg.prime):
        raise UsageError(f"-p must be an odd prime below 2^31, got {cfg.prime}")
    if cfg.tier not in ("core", "stretch"):
        raise UsageError(f"--tier must be core or stretch, got {cfg.tier!r}")
    if cfg.format not in ("text", "json"):
        raise UsageError(f"--format must be text or json, got {cfg.format!r}")
    return cfg


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _common_flags(default):
    # session flags are accepted before and after the verb; the copy on the
    # verb parsers must not overwrite a value given before the verb
    common = _Parser(add_help=False)
    common.add_argument("-p", "--prime", type=int, default=default, help="prime field characteristic")
    common.add_argument("--seed", type=int, default=default, help="session seed")
    common.add_argument("--tier", choices=("core", "stretch"), default=default)
    common.add_argument("--fixtures", default=default, help="fixture directory")
    common.add_argument("--format", choices=("text", "json"), default=default)
    common.add_argument("-v", "--verbose", action="store_true",
                        default=False if default is None else default)
    return common


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="gm", description="Special Gushel-Mukai fourfolds over prime fields.",
                 parents=[_common_flags(None)])
    common = _common_flags(argparse.SUPPRESS)
    sub = ap.add_subparsers(dest="verb", parser_class=_Parser)
    sub.required = True

    sub.add_parser("table1", parents=[common], help="recompute the surface table")
    r = sub.add_parser("recipe", parents=[common], help="run the construction chain")
    r.add_argument("target", choices=sorted(RECIPE_TARGETS))
    r.add_argument("--smooth-check", action="store_true", help="also test smoothness of X (slow)")
    c = sub.add_parser("congruence", parents=[common], help="count lines through a general point")
    c.add_argument("--fixture", default=None, help="ideal file of the variety V")
    c.add_argument("--stretch", action="store_true", help="same as --tier stretch")
    c.add_argument("--no-classify", action="store_true")
    d = sub.add_parser("describe", parents=[common], help="summarize an ideal or map file")
    d.add_argument("--fixture", required=True)
    e = sub.add_parser("export", parents=[common], help="write the constructed ideals to files")
    e.add_argument("--out", required=True)
    e.add_argument("--until", choices=sorted(RECIPE_TARGETS), default="all")
    e.add_argument("--m2", action="store_true", help="also write Macaulay2 scripts")
    sub.add_parser("selfcheck", parents=[common], help="fast internal consistency checks")
    return ap


# --------------------------------------------------------------------------
# output
# --------------------------------------------------------------------------


def make_report(command: str, cfg: SessionConfig, ok: bool, results: list, status: str | None = None) -> dict:
    return {
        "schema": REPORT_SCHEMA,
        "command": command,
        "config": cfg.to_dict(),
        "ok": ok,
        "status": status or ("pass" if ok else "fail"),
        "results": results,
    }


def emit(report: dict, text: str, cfg: SessionConfig, out=None):
    out = out or sys.stdout
    if cfg.format == "json":
        out.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    else:
        out.write(text.rstrip("\n") + "\n")
        out.write(f"seed={cfg.seed} p={cfg.prime} status={report['status']}\n")


# --------------------------------------------------------------------------
# verbs
# --------------------------------------------------------------------------


def cmd_table1(args, cfg):
    from .gmtheory import format_table1, load_table1, table1_check

    path = None
    if cfg.fixtures and (Path(cfg.fixtures) / "table1.tsv").exists():
        path = Path(cfg.fixtures) / "table1.tsv"
    results = [table1_check(r) for r in load_table1(path)]
    ok = all(r.ok for r in results)
    rows = []
    for r in results:
        rows.append({
            "name": r.row.name,
            "a": r.row.a,
            "b": r.row.b,
            "self_int": r.record.self_int,
            "d": r.record.disc,
            "label": r.record.label.kind,
            "expected": r.row.expected_locus,
            "parameters": r.parameters,
            "status": r.status,
            "diffs": r.diffs,
        })
    counts = {}
    for r in results:
        counts[r.status] = counts.get(r.status, 0) + 1
    text = format_table1(results) + "\n" + ", ".join(f"{v} {k}" for k, v in sorted(counts.items()))
    return make_report("table1", cfg, ok, rows), text, EXIT_OK if ok else EXIT_FAIL


def cmd_recipe(args, cfg):
    from .recipes import Pipeline

    pipe = Pipeline(cfg.seed, cfg.prime, smooth_check=args.smooth_check)
    reports = pipe.run(RECIPE_TARGETS[args.target])
    ok = all(r.ok for r in reports) and reports[-1].step == RECIPE_TARGETS[args.target]
    text = "\n".join(r.format() for r in reports)
    total = sum(r.elapsed for r in reports)
    text += f"\ntotal {total:.1f}s"
    report = make_report(f"recipe {args.target}", cfg, ok, [r.to_dict() for r in reports])
    return report, text, EXIT_OK if ok else EXIT_FAIL


def cmd_congruence(args, cfg):
    from .geom import Scheme, random_point
    from .ideals import read_ideal, make_rng
    from .recipes import Pipeline, fivefold_census, lines_through_point

    stretch = args.stretch or cfg.tier == "stretch"
    rng = make_rng(f"gmforge:{cfg.seed}:congruence")
    if args.fixture:
        path = Path(args.fixture)
        if not path.exists() and cfg.fixtures:
            path = Path(cfg.fixtures) / args.fixture
        if not path.exists():
            report = make_report("congruence", cfg, True, [], status="skipped")
            return report, f"congruence: fixture {args.fixture} not found, skipped", EXIT_OK
        V = Scheme(read_ideal(path), path.stem)
        q = random_point(V, rng)
        census = lines_through_point(V, q, rng)
        res = census.to_dict()
        text = f"lines through {q}: {census.total} ({len(census.lines)} rational)"
        return make_report("congruence", cfg, True, [res]), text, EXIT_OK
    if not stretch:
        report = make_report("congruence", cfg, True, [], status="skipped")
        return report, "congruence: needs --stretch (or --tier stretch)", EXIT_OK
    pipe = Pipeline(cfg.seed, cfg.prime)
    reports = pipe.run("t-surface")
    if not all(r.ok for r in reports):
        text = "\n".join(r.format() for r in reports)
        return make_report("congruence", cfg, False, [r.to_dict() for r in reports]), text, EXIT_FAIL
    V, census = fivefold_census(pipe, rng, classify=not args.no_classify)
    res = {"V": V.summary(), **census.to_dict()}
    expected_total = 12
    expected_classes = {(1, 1): 7, (2, 3): 4, (3, 5): 1}
    ok = census.total == expected_total
    if not args.no_classify and census.unclassified == 0:
        ok = ok and census.profile() == expected_classes
    lines = [
        f"V: {', '.join(f'{k}={v}' for k, v in V.summary().items())}",
        f"lines through a general point: {census.total} (expected {expected_total})",
    ]
    for (e, s), m in census.profile().items():
        lines.append(f"  degree {e} curves, {s}-secant: {m}")
    if census.unclassified:
        lines.append(f"  unclassified (non-rational) lines: {census.unclassified}")
    return make_report("congruence", cfg, ok, [res]), "\n".join(lines), EXIT_OK if ok else EXIT_FAIL


def describe_text(obj) -> tuple[dict, str]:
    from .geom import RationalMap

    if isinstance(obj, RationalMap):
        X = obj.source
        summ = {
            "kind": "map",
            "source": X.summary() if X.ideal.gens else {"ambient": X.ambient_dim},
            "target": obj.target_dim,
            "form_degree": obj.form_degree,
        }
        text = (f"rational map from a subvariety of PP^{X.ambient_dim} to PP^{obj.target_dim} "
                f"defined by forms of degree {obj.form_degree}")
        return summ, text
    X = obj
    s = X.summary()
    names = {0: "points", 1: "curve", 2: "surface", 3: "threefold", 4: "fourfold", 5: "fivefold"}
    kind = names.get(s["dim"], f"{s['dim']}-dimensional variety")
    parts = [f"{kind} in PP^{s['ambient']} of dimension {s['dim']} and degree {s['degree']}"]
    if "genus" in s:
        parts.append(f"sectional genus {s['genus']}" if s["dim"] == 2 else f"arithmetic genus {s['genus']}")
    gens = s["generators"]
    cut = " and ".join(f"{n} hypersurface{'s' if n > 1 else ''} of degree {d}" for d, n in gens.items())
    text = ", ".join(parts) + (f", cut out by {cut}" if cut else "")
    if s["dim"] == 4 and s["degree"] == 10 and s["ambient"] == 8:
        text += "\nGushel-Mukai fourfold candidate (degree 10 in PP^8)"
    return {"kind": "scheme", **s}, text


def cmd_describe(args, cfg):
    from .geom import Scheme, parse_map
    from .ideals import parse_ideal

    path = Path(args.fixture)
    if not path.exists() and cfg.fixtures:
        path = Path(cfg.fixtures) / args.fixture
    if not path.exists():
        raise UsageError(f"no such fixture: {args.fixture}")
    text = path.read_text()
    first = text.lstrip().splitlines()[0].strip() if text.strip() else ""
    if first.startswith("gmforge-map"):
        obj = parse_map(text)
    else:
        obj = Scheme(parse_ideal(text), path.stem)
    summ, out = describe_text(obj)
    return make_report("describe", cfg, True, [summ]), out, EXIT_OK


def cmd_export(args, cfg):
    from .geom import format_map
    from .ideals import to_macaulay2, write_ideal
    from .recipes import Pipeline

    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    pipe = Pipeline(cfg.seed, cfg.prime)
    reports = pipe.run(RECIPE_TARGETS[args.until])
    st = pipe.state
    objects = {}
    if "edge" in st:
        objects["Eprime"] = st["edge"].surface.ideal
    if "nodal" in st:
        objects["E"] = st["nodal"].surface.ideal
    if "quintic" in st:
        objects["C"] = st["quintic"].curve.ideal
    if "scroll" in st:
        objects["B"] = st["scroll"].scroll.ideal
    if "semple" in st:
        objects["Y"] = st["semple"].fivefold.ideal
        (out / "semple.map").write_text(format_map(st["semple"].map))
    if "T" in st:
        objects["T"] = st["T"].ideal
    if "X" in st:
        objects["X"] = st["X"].ideal
    written = []
    for name, I in objects.items():
        write_ideal(I, out / f"{name}.ideal")
        written.append(f"{name}.ideal")
        if args.m2:
            (out / f"{name}.m2").write_text(to_macaulay2(I, name))
    (out / "report.json").write_text(json.dumps(
        make_report("export", cfg, all(r.ok for r in reports), [r.to_dict() for r in reports]),
        indent=2, sort_keys=True) + "\n")
    ok = all(r.ok for r in reports)
    text = f"wrote {len(written)} ideals to {out}: " + ", ".join(written)
    return make_report("export", cfg, ok, [{"files": written}]), text, EXIT_OK if ok else EXIT_FAIL


def cmd_selfcheck(args, cfg):
    import random

    from . import _kernels
    from .arith import Ring
    from .gmtheory import det3, discriminant, gram_matrix, load_table1, table1_check
    from .grass import SchubertCycle, integral
    from .ideals import Ideal

    checks = []

    def check(name, expected, computed):
        checks.append({"name": name, "expected": expected, "computed": computed, "ok": expected == computed})

    R = Ring(4, cfg.prime)
    x = R.gens()
    cubic = Ideal(R, [x[0] * x[2] - x[1] ** 2, x[0] * x[3] - x[1] * x[2], x[1] * x[3] - x[2] ** 2])
    check("twisted cubic (dim, degree)", [1, 3], [cubic.dimension(), cubic.degree()])
    s1 = SchubertCycle.sigma(4, 1)
    check("sigma_1^6 on G(1,4)", 5, integral(s1 ** 6))
    check("sigma_1^8 on G(1,5)", 14, integral(SchubertCycle.sigma(5, 1) ** 8))
    rng = random.Random(cfg.seed)
    agree = True
    for _ in range(200):
        a, b, s = (rng.randint(-50, 50) for _ in range(3))
        agree &= discriminant(a, b, s) == det3(gram_matrix(a, b, s))
    check("discriminant = Gram determinant", True, agree)
    statuses = [table1_check(r).status for r in load_table1()]
    check("table rows passing", 8, statuses.count("pass"))
    check("kernel backend", _kernels.BACKEND, _kernels.BACKEND)
    ok = all(c["ok"] for c in checks)
    text = "\n".join(f"{'ok ' if c['ok'] else 'XX '}{c['name']}: {c['computed']}" for c in checks)
    return make_report("selfcheck", cfg, ok, checks), text, EXIT_OK if ok else EXIT_FAIL


VERBS = {
    "table1": cmd_table1,
    "recipe": cmd_recipe,
    "congruence": cmd_congruence,
    "describe": cmd_describe,
    "export": cmd_export,
    "selfcheck": cmd_selfcheck,
}


def run_command(argv, env=None, out=None) -> int:
    from .geom import BudgetExhausted

    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        cfg = resolve_config(args, env)
    except UsageError as exc:
        sys.stderr.write(f"gm: usage error: {exc}\n")
        return EXIT_USAGE
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    t0 = time.perf_counter()
    try:
        report, text, code = VERBS[args.verb](args, cfg)
    except UsageError as exc:
        sys.stderr.write(f"gm: usage error: {exc}\n")
        return EXIT_USAGE
    except BudgetExhausted as exc:
        report = make_report(args.verb, cfg, False, [{"error": str(exc)}], status="budget-exhausted")
        emit(report, f"budget exhausted: {exc}", cfg, out)
        return EXIT_BUDGET
    report["elapsed"] = round(time.perf_counter() - t0, 3)
    emit(report, text, cfg, out)
    return code


def main(argv=None) -> int:
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
