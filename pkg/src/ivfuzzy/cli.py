"""Command-line front end: ``ivfuzzy <subcommand> ...``.

Exit status is 0 when the check passes or the sweep verifies, 1 when a
predicate is false or a counterexample turns up (the witness is printed),
and 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence

from . import algebra as alg_mod
from . import fuzzy as fz_mod
from .algebra import AlgebraError, FinitePseudoBL, InvalidAlgebra, check_derived_properties, validate
from .filters import (
    FilterVerdict,
    is_iv_evq_fuzzy_filter,
    is_iv_evq_fuzzy_filter_pointwise,
    is_iv_evq_g_filter,
    is_iv_evq_implicative_filter,
    is_iv_evq_mv_filter,
    is_iv_fuzzy_filter,
    is_threshold_fuzzy_filter,
    is_threshold_implicative_filter,
    satisfies_F7_F8,
    satisfies_F9_F10,
    satisfies_F14,
)
from .harness import (
    DEFAULT_ALGEBRAS,
    DEFAULT_GRID,
    THEOREM_IDS,
    SweepConfig,
    VerificationResult,
    search_problem_4,
    verify_all,
    verify_theorem,
)
from .implication import ImplicationOperator, is_t_implication_based_implicative_filter, is_tautology_filter
from .interval import DEFAULT_DENOMINATOR, IntervalNumber, half, one

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

PREDICATE_TAGS = ("F1F2", "F3F4", "F5F6", "P36", "F9F10", "F11F12", "F13", "F14", "F15",
                  "F16", "F17", "F18-21", "F26-29")


class _UsageError(Exception):
    pass


def _interval(text: str, den: int) -> IntervalNumber:
    text = text.strip()
    if text.startswith("["):
        return IntervalNumber.parse(text, den)
    return IntervalNumber.of(text, text, den)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fp:
        return fp.read()


def _load_algebra(path: str) -> FinitePseudoBL:
    return alg_mod.loads(_read(path), descriptor="stdin" if path == "-" else path)


def _emit(args, record: dict, text: str) -> None:
    print(json.dumps(record, sort_keys=True) if args.json else text)


def _names(alg: FinitePseudoBL, s) -> str:
    return "{" + ",".join(alg.name(x) for x in sorted(s)) + "}"


# -- subcommands ---------------------------------------------------------------

def _cmd_validate(args) -> int:
    alg = _load_algebra(args.file)
    rep = validate(alg, args.a2_literature)
    fails = [{"axiom": a, "witness": list(w)} for a, w in rep.failures]
    lines = [f"valid pseudo BL-algebra (n={alg.n})"] if rep else \
        [f"invalid: {f['axiom']} fails at {tuple(f['witness'])}" for f in fails]
    _emit(args, {"valid": rep.passed, "n": alg.n, "failures": fails}, "\n".join(lines))
    return EXIT_OK if rep else EXIT_FAIL


def _cmd_properties(args) -> int:
    alg = _load_algebra(args.file)
    try:
        rep = check_derived_properties(alg, args.a2_literature)
    except InvalidAlgebra:
        bad = validate(alg, args.a2_literature)
        fails = [{"axiom": a, "witness": list(w)} for a, w in bad.failures]
        _emit(args, {"valid": False, "failures": fails},
              "\n".join(f"invalid: {a} fails at {w}" for a, w in bad.failures))
        return EXIT_FAIL
    failed = dict(rep.failures)
    lines, laws = [], {}
    for law in map(str, range(1, 11)):
        ok = law not in failed
        laws[law] = ok
        lines.append(f"law {law}: " + ("holds" if ok else f"fails at {failed[law]}"))
    _emit(args, {"valid": True, "laws": laws}, "\n".join(lines))
    return EXIT_OK if rep else EXIT_FAIL


def _cmd_filters(args) -> int:
    alg = _load_algebra(args.file)
    rep = validate(alg, args.a2_literature)
    if not rep:
        raise InvalidAlgebra(f"{rep.failures[0][0]} fails at {rep.failures[0][1]}")
    rows = []
    for s in alg_mod.enumerate_filters(alg):
        tags = [tag for tag, pred in (("implicative", alg_mod.is_implicative_filter),
                                      ("MV", alg_mod.is_mv_filter), ("G", alg_mod.is_g_filter))
                if pred(alg, s)]
        rows.append({"filter": sorted(s), "tags": tags})
    text = "\n".join(_names(alg, r["filter"]) + ("  " + " ".join(r["tags"]) if r["tags"] else "")
                     for r in rows)
    _emit(args, {"filters": rows}, text)
    return EXIT_OK


def _predicate(args, den: int) -> Callable[[FinitePseudoBL, fz_mod.IVFuzzySet], FilterVerdict]:
    tag = args.predicate

    def thresholds():
        if args.alpha is None or args.beta is None:
            raise _UsageError(f"--predicate {tag} needs --alpha and --beta")
        return _interval(args.alpha, den), _interval(args.beta, den)

    op = ImplicationOperator.from_name(args.op)
    if tag == "F11F12":
        a, b = thresholds()
        return lambda alg, F: is_threshold_fuzzy_filter(alg, F, a, b)
    if tag == "F15":
        a, b = thresholds()
        return lambda alg, F: is_threshold_implicative_filter(alg, F, a, b)
    if tag == "F18-21":
        t = _interval(args.t, den) if args.t else one(den)
        return lambda alg, F: is_tautology_filter(alg, F, t, op)
    if tag == "F26-29":
        t = _interval(args.t, den) if args.t else half(den)
        return lambda alg, F: is_t_implication_based_implicative_filter(alg, F, t, op)
    simple = {
        "F1F2": is_iv_fuzzy_filter,
        "F3F4": lambda alg, F: is_iv_evq_fuzzy_filter_pointwise(alg, F, strict_both=args.strict_both),
        "F5F6": is_iv_evq_fuzzy_filter,
        "P36": satisfies_F7_F8,
        "F9F10": satisfies_F9_F10,
        "F13": is_iv_evq_implicative_filter,
        "F14": satisfies_F14,
        "F16": is_iv_evq_mv_filter,
        "F17": is_iv_evq_g_filter,
    }
    return simple[tag]


def _cmd_check(args) -> int:
    alg = _load_algebra(args.algebra)
    F = fz_mod.loads(_read(args.fuzzyset), args.den)
    if len(F) != alg.n:
        raise fz_mod.CarrierMismatch(f"fuzzy set has {len(F)} elements, algebra has {alg.n}")
    verdict = _predicate(args, args.den)(alg, F)
    rec = {"predicate": args.predicate, "holds": verdict.holds}
    if not verdict:
        rec["violated"] = verdict.violated_condition
        rec["witness"] = [str(w) for w in verdict.witness or ()]
    _emit(args, rec, f"{args.predicate}: {verdict.describe()}")
    return EXIT_OK if verdict else EXIT_FAIL


def _config(args) -> SweepConfig:
    return SweepConfig(
        algebras=tuple(args.algebra or DEFAULT_ALGEBRAS),
        endpoint_grid=tuple(g.strip() for g in args.grid.split(",") if g.strip()),
        thresholds_mode="degenerate" if args.degenerate else "general",
        strict_both=args.strict_both,
        a2_literature=args.a2_literature,
        parallelism=args.jobs,
    )


def _report(args, results: Sequence[VerificationResult]) -> int:
    for r in results:
        _emit(args, r.to_record(args.timings), r.to_text())
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


def _cmd_verify(args) -> int:
    cfg = _config(args)
    if args.theorem == "all":
        return _report(args, verify_all(cfg))
    return _report(args, [verify_theorem(cfg, args.theorem)])


def _cmd_search(args) -> int:
    return _report(args, [search_problem_4(_config(args))])


def _cmd_generate(args) -> int:
    make = {"godel": alg_mod.godel_chain, "lukasiewicz": alg_mod.lukasiewicz_chain}[args.kind]
    text = alg_mod.dumps(make(args.n))
    if args.output:
        with open(args.output, "w") as fp:
            fp.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="one JSON record per result")
    axioms = argparse.ArgumentParser(add_help=False)
    a2 = axioms.add_mutually_exclusive_group()
    a2.add_argument("--a2-literature", dest="a2_literature", action="store_true", default=True,
                    help="divisibility read as x^y = (x->y)*x (default)")
    a2.add_argument("--a2-residual", dest="a2_literature", action="store_false",
                    help="divisibility read as x^y = (x->y)->x")

    p = argparse.ArgumentParser(prog="ivfuzzy", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    for name, fn, helptext in (("validate", _cmd_validate, "check the pseudo BL axioms"),
                               ("properties", _cmd_properties, "check the ten derived laws"),
                               ("filters", _cmd_filters, "list crisp filters with their tags")):
        sp = sub.add_parser(name, parents=[common, axioms], help=helptext)
        sp.add_argument("file", help="algebra file, or - for stdin")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("check", parents=[common], help="evaluate one predicate on a fuzzy set")
    sp.add_argument("algebra")
    sp.add_argument("fuzzyset")
    sp.add_argument("--predicate", required=True, choices=PREDICATE_TAGS)
    sp.add_argument("--alpha")
    sp.add_argument("--beta")
    sp.add_argument("--t")
    sp.add_argument("--op", default="a", choices=[o.value for o in ImplicationOperator])
    sp.add_argument("--strict-both", action="store_true")
    sp.add_argument("--den", type=int, default=DEFAULT_DENOMINATOR, help="grid denominator")
    sp.set_defaults(func=_cmd_check)

    sweep = argparse.ArgumentParser(add_help=False, parents=[common, axioms])
    sweep.add_argument("--algebra", action="append",
                       help="generator spec (godel:3, lukasiewicz:2..4, godel:2*godel:2) or file; repeatable")
    sweep.add_argument("--grid", default=",".join(DEFAULT_GRID))
    sweep.add_argument("--strict-both", action="store_true")
    sweep.add_argument("--degenerate", action="store_true", help="degenerate thresholds only")
    sweep.add_argument("--jobs", type=int, default=1)
    sweep.add_argument("--timings", action="store_true", help="include elapsed_ms in JSON")

    sp = sub.add_parser("verify", parents=[sweep], help="exhaustive theorem sweep")
    sp.add_argument("theorem", choices=THEOREM_IDS + ("all",))
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("search-problem4", parents=[sweep], help="search for an MV+G, non-implicative set")
    sp.set_defaults(func=_cmd_search)

    sp = sub.add_parser("generate", help="print a chain algebra in the table format")
    sp.add_argument("kind", choices=("godel", "lukasiewicz"))
    sp.add_argument("n", type=int)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=_cmd_generate)
    return p


def run_cli(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (_UsageError, AlgebraError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_cli())
