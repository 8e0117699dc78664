"""Exhaustive verification of the filter characterizations on small algebras.

A sweep enumerates every dichotomous interval-valued fuzzy set whose
endpoints lie on a finite grid, on every configured algebra, and evaluates
both sides of an equivalence (or premise and conclusion of an implication)
for each one.  Quantifiers over thresholds are discharged exactly, either
through :func:`ivfuzzy.fuzzy.critical_thresholds` for level sets or through
the half-step grid for the belongs / quasi-coincidence conditions.

A clean sweep only means "no counterexample at this scale".
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from . import algebra as alg_mod
from .algebra import FinitePseudoBL, InvalidAlgebra, direct_product, godel_chain, lukasiewicz_chain, validate
from .filters import (
    arrows_agree,
    check_implicative_consequences,
    is_fuzzy_filter_scalar,
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
from .fuzzy import (
    GridMissingHalf,
    IVFuzzySet,
    dichotomous_intervals,
    fuzzy_set_at,
    half_step_grid,
    level_sets,
)
from .implication import (
    ImplicationOperator,
    implication_threshold_agreement,
    is_t_implication_based_implicative_filter,
    is_tautology_filter,
    lifting_swaps,
    variant_thresholds,
)
from .interval import DEFAULT_DENOMINATOR, IntervalNumber, _render, half, one, to_fraction, zero

THEOREM_IDS = ("T2.4", "T3.2", "T3.5", "P3.6", "T3.7", "T3.8", "T3.10", "T4.3", "T4.4", "T4.6",
               "P4.2", "L4.9", "T4.10", "C5.3", "T5.4i", "T5.4ii", "T5.4iii", "PROBLEM4")

DEFAULT_GRID = ("0", "0.3", "0.5", "0.7", "1")
DEFAULT_ALGEBRAS = ("godel:2..4", "lukasiewicz:2..4")
DEFAULT_THRESHOLD_PAIRS = (("0", "0.5"), ("0", "1"), ("0.5", "1"), ("0.3", "0.7"))

# chunks per worker; more chunks even out uneven per-set cost
_CHUNKS_PER_JOB = 4


class UnknownTheorem(ValueError):
    pass


# -- configuration ------------------------------------------------------------

def parse_algebra_spec(spec: str) -> list[FinitePseudoBL]:
    """``godel:3``, ``lukasiewicz:2..4``, ``godel:2*lukasiewicz:3`` or a path to an algebra file."""
    spec = spec.strip()
    if "*" in spec and not os.path.exists(spec):
        parts = [parse_algebra_spec(p) for p in spec.split("*")]
        if any(len(p) != 1 for p in parts):
            raise ValueError(f"products need single algebras: {spec!r}")
        out = parts[0][0]
        for p in parts[1:]:
            out = direct_product(out, p[0])
        return [out]
    kind, sep, size = spec.partition(":")
    makers = {"godel": godel_chain, "lukasiewicz": lukasiewicz_chain}
    if sep and kind in makers:
        lo, dots, hi = size.partition("..")
        sizes = range(int(lo), int(hi) + 1) if dots else [int(lo)]
        return [makers[kind](n) for n in sizes]
    with open(spec) as fp:
        return [alg_mod.load(fp, descriptor=os.path.basename(spec))]


@dataclass(frozen=True)
class SweepConfig:
    algebras: tuple[str, ...] = DEFAULT_ALGEBRAS
    endpoint_grid: tuple[str, ...] = DEFAULT_GRID
    thresholds_mode: str = "general"
    strict_both: bool = False
    a2_literature: bool = True
    parallelism: int = 1
    threshold_pairs: tuple[tuple[str, str], ...] = DEFAULT_THRESHOLD_PAIRS
    den: int = DEFAULT_DENOMINATOR

    def __post_init__(self):
        object.__setattr__(self, "algebras", tuple(self.algebras))
        object.__setattr__(self, "endpoint_grid", tuple(str(g) for g in self.endpoint_grid))
        object.__setattr__(self, "threshold_pairs", tuple((str(a), str(b)) for a, b in self.threshold_pairs))
        if not self.algebras:
            raise ValueError("sweep needs at least one algebra")
        pts = {to_fraction(g) for g in self.endpoint_grid}
        if not {Fraction(0), Fraction(1, 2), Fraction(1)} <= pts:
            raise GridMissingHalf("endpoint grid must contain 0, 0.5 and 1")
        if self.thresholds_mode not in ("general", "degenerate"):
            raise ValueError("thresholds_mode must be 'general' or 'degenerate'")
        if self.parallelism < 1:
            raise ValueError("parallelism must be at least 1")

    @property
    def degenerate(self) -> bool:
        return self.thresholds_mode == "degenerate"

    def load_algebras(self) -> list[FinitePseudoBL]:
        out = []
        for spec in self.algebras:
            out.extend(parse_algebra_spec(spec))
        for a in out:
            if not validate(a, self.a2_literature):
                raise InvalidAlgebra(f"{a.descriptor} fails the pseudo BL axioms")
        return out

    def grid_descriptor(self) -> str:
        return "{" + ",".join(_render(int(to_fraction(g) * self.den), self.den)
                              for g in sorted(self.endpoint_grid, key=to_fraction)) + "}"

    def pairs(self) -> list[tuple[IntervalNumber, IntervalNumber]]:
        return [(IntervalNumber.of(a, a, self.den), IntervalNumber.of(b, b, self.den))
                for a, b in self.threshold_pairs]


@dataclass
class VerificationResult:
    theorem_id: str
    algebra_descriptor: str
    grid_descriptor: str
    candidates_checked: int
    status: str
    witness: dict | None = None
    counterexamples: int = 0
    elapsed: float = 0.0
    note: str = ""

    def __post_init__(self):
        if (self.status == "counterexample") != (self.witness is not None):
            raise ValueError("a counterexample result must carry a witness, and only then")
        if self.status == "verified" and self.candidates_checked <= 0:
            raise ValueError("a verified result must have checked candidates")

    @property
    def ok(self) -> bool:
        return self.status != "counterexample"

    def to_record(self, include_elapsed: bool = False) -> dict:
        rec = {
            "theorem": self.theorem_id,
            "algebra": self.algebra_descriptor,
            "grid": self.grid_descriptor,
            "candidates": self.candidates_checked,
            "status": self.status,
            "counterexamples": self.counterexamples,
        }
        if self.witness is not None:
            rec["witness"] = self.witness
        if self.note:
            rec["note"] = self.note
        if include_elapsed:
            rec["elapsed_ms"] = round(self.elapsed * 1000)
        return rec

    def to_json(self, include_elapsed: bool = False) -> str:
        return json.dumps(self.to_record(include_elapsed), sort_keys=True)

    def to_text(self) -> str:
        head = f"{self.theorem_id}: {self.status}"
        if self.status == "verified":
            head += f" at scale (grid {self.grid_descriptor}, algebra {self.algebra_descriptor})"
        lines = [head, f"  candidates checked: {self.candidates_checked}"]
        if self.counterexamples:
            lines.append(f"  counterexamples: {self.counterexamples}")
        if self.witness:
            for k in sorted(self.witness):
                lines.append(f"  {k}: {self.witness[k]}")
        if self.note:
            lines.append(f"  note: {self.note}")
        return "\n".join(lines)


# -- per-set checks -----------------------------------------------------------
# Each check returns None when the theorem holds for the set, else a detail dict.

@dataclass(frozen=True)
class _Ctx:
    degenerate: bool
    strict_both: bool
    pairs: tuple[tuple[IntervalNumber, IntervalNumber], ...]
    den: int


def _first_bad_level(alg, F, window, crisp, degenerate):
    for t, s in level_sets(F, window, degenerate):
        if not crisp(alg, s):
            return t, s
    return None


def _equiv(left_name, left, right_name, right, extra=None):
    lv, rv = bool(left), bool(right)
    if lv == rv:
        return None
    detail = {left_name: lv, right_name: rv}
    for side in (left, right):
        if hasattr(side, "violated_condition") and side.violated_condition:
            detail["violated"] = f"{side.violated_condition} at {_fmt(side.witness)}"
    if extra:
        detail.update(extra)
    return detail


def _fmt(obj) -> str:
    if isinstance(obj, tuple):
        return "(" + ", ".join(_fmt(o) for o in obj) + ")"
    if isinstance(obj, frozenset):
        return "{" + ",".join(str(x) for x in sorted(obj)) + "}"
    return str(obj)


def _level_equiv(alg, F, ctx, left_name, left, window, crisp):
    bad = _first_bad_level(alg, F, window, crisp, ctx.degenerate)
    right_holds = bad is None
    if bool(left) == right_holds:
        return None
    detail = {left_name: bool(left), "level sets are filters": right_holds}
    if bad is not None:
        detail["level set"] = f"{_fmt(bad[1])} at t={bad[0]}"
    if getattr(left, "violated_condition", None):
        detail["violated"] = f"{left.violated_condition} at {_fmt(left.witness)}"
    return detail


def _window(ctx, lo, hi):
    named = {"zero": zero(ctx.den), "half": half(ctx.den), "one": one(ctx.den)}
    return named[lo], named[hi]


def _chk_T24(alg, F, ctx):
    return _level_equiv(alg, F, ctx, "fuzzy filter", is_fuzzy_filter_scalar(alg, F),
                        _window(ctx, "zero", "one"), alg_mod.is_filter)


def _chk_T32(alg, F, ctx):
    return _level_equiv(alg, F, ctx, "F1,F2", is_iv_fuzzy_filter(alg, F),
                        _window(ctx, "zero", "one"), alg_mod.is_filter)


def _chk_T35(alg, F, ctx):
    grid = half_step_grid(ctx.den, ctx.degenerate)
    return _equiv("F3,F4", is_iv_evq_fuzzy_filter_pointwise(alg, F, grid, ctx.strict_both),
                  "F5,F6", is_iv_evq_fuzzy_filter(alg, F))


def _chk_P36(alg, F, ctx):
    return _equiv("F5,F6", is_iv_evq_fuzzy_filter(alg, F), "F7,F8|F8'", satisfies_F7_F8(alg, F))


def _chk_T37(alg, F, ctx):
    return _level_equiv(alg, F, ctx, "F5,F6", is_iv_evq_fuzzy_filter(alg, F),
                        _window(ctx, "zero", "half"), alg_mod.is_filter)


def _chk_T38(alg, F, ctx):
    return _level_equiv(alg, F, ctx, "F9,F10", satisfies_F9_F10(alg, F),
                        _window(ctx, "half", "one"), alg_mod.is_filter)


def _chk_T310(alg, F, ctx):
    for a, b in ctx.pairs:
        d = _level_equiv(alg, F, ctx, "F11,F12", is_threshold_fuzzy_filter(alg, F, a, b), (a, b),
                         alg_mod.is_filter)
        if d is not None:
            return {"thresholds": f"({a}, {b})", **d}
    return None


def _chk_T43(alg, F, ctx):
    return _level_equiv(alg, F, ctx, "F5,F6,F13", is_iv_evq_implicative_filter(alg, F),
                        _window(ctx, "zero", "half"), alg_mod.is_implicative_filter)


def _chk_T44(alg, F, ctx):
    left = satisfies_F9_F10(alg, F)
    if left:
        left = satisfies_F14(alg, F)
    return _level_equiv(alg, F, ctx, "F9,F10,F14", left,
                        _window(ctx, "half", "one"), alg_mod.is_implicative_filter)


def _chk_T46(alg, F, ctx):
    for a, b in ctx.pairs:
        d = _level_equiv(alg, F, ctx, "F11,F12,F15", is_threshold_implicative_filter(alg, F, a, b), (a, b),
                         alg_mod.is_implicative_filter)
        if d is not None:
            return {"thresholds": f"({a}, {b})", **d}
    return None


def _chk_P42(alg, F, ctx):
    if not is_iv_evq_implicative_filter(alg, F):
        return None
    v = check_implicative_consequences(alg, F)
    return None if v else {"violated": f"{v.violated_condition} at {_fmt(v.witness)}"}


def _chk_L49(alg, F, ctx):
    if not is_iv_evq_implicative_filter(alg, F):
        return None
    v = is_iv_evq_g_filter(alg, F)
    return None if v else {"violated": f"{v.violated_condition} at {_fmt(v.witness)}"}


def _chk_T410(alg, F, ctx):
    if not is_iv_evq_fuzzy_filter(alg, F) or not arrows_agree(alg, F):
        return None
    left = is_iv_evq_implicative_filter(alg, F)
    right = is_iv_evq_mv_filter(alg, F)
    if right:
        right = is_iv_evq_g_filter(alg, F)
    return _equiv("F13", left, "F16,F17", right)


def _chk_C53(alg, F, ctx):
    for op in ImplicationOperator:
        for t in (half(ctx.den), one(ctx.den)):
            d = _equiv("truth values", is_tautology_filter(alg, F, t, op),
                       "F26-F29", is_t_implication_based_implicative_filter(alg, F, t, op),
                       {"operator": op.value, "t": str(t)})
            if d is not None:
                return d
    return None


def _chk_T54(variant):
    def check(alg, F, ctx):
        v = implication_threshold_agreement(alg, F, variant)
        if v:
            return None
        left, right = v.witness
        op, a, b = variant_thresholds(variant, ctx.den)
        return {f"0.5-implication-based ({op.value})": left, f"thresholds ({a}, {b})": right}
    return check


def _chk_P4(alg, F, ctx):
    if arrows_agree(alg, F) or not is_iv_evq_mv_filter(alg, F) or not is_iv_evq_g_filter(alg, F):
        return None
    v = is_iv_evq_implicative_filter(alg, F)
    return None if v else {"violated": f"{v.violated_condition} at {_fmt(v.witness)}"}


_CHECKS: dict[str, Callable] = {
    "T2.4": _chk_T24, "T3.2": _chk_T32, "T3.5": _chk_T35, "P3.6": _chk_P36, "T3.7": _chk_T37,
    "T3.8": _chk_T38, "T3.10": _chk_T310, "T4.3": _chk_T43, "T4.4": _chk_T44, "T4.6": _chk_T46,
    "P4.2": _chk_P42, "L4.9": _chk_L49, "T4.10": _chk_T410, "C5.3": _chk_C53,
    "T5.4i": _chk_T54("gr"), "T5.4ii": _chk_T54("g"), "T5.4iii": _chk_T54("cg"),
    "PROBLEM4": _chk_P4,
}


# -- sweeping -----------------------------------------------------------------

def candidate_values(cfg: SweepConfig, theorem_id: str) -> list[IntervalNumber]:
    if theorem_id == "T2.4":
        return sorted({IntervalNumber.of(g, g, cfg.den) for g in cfg.endpoint_grid}, key=IntervalNumber.sort_key)
    return dichotomous_intervals(cfg.endpoint_grid, cfg.den)


def _sweep_chunk(args):
    theorem_id, alg, values, start, stop, ctx = args
    check = _CHECKS[theorem_id]
    bad, first = 0, None
    for idx in range(start, stop):
        F = fuzzy_set_at(idx, values, alg.n)
        detail = check(alg, F, ctx)
        if detail is not None:
            bad += 1
            if first is None:
                first = (idx, str(F), detail)
    return stop - start, bad, first


def _chunks(total: int, parts: int) -> list[tuple[int, int]]:
    parts = max(1, min(parts, total))
    step, extra = divmod(total, parts)
    out, start = [], 0
    for i in range(parts):
        stop = start + step + (1 if i < extra else 0)
        out.append((start, stop))
        start = stop
    return out


def _sweep(cfg: SweepConfig, theorem_id: str, algebras: Sequence[FinitePseudoBL]):
    ctx = _Ctx(cfg.degenerate, cfg.strict_both, tuple(cfg.pairs()), cfg.den)
    values = candidate_values(cfg, theorem_id)
    tasks = []
    for alg in algebras:
        total = len(values) ** alg.n
        for start, stop in _chunks(total, cfg.parallelism * _CHUNKS_PER_JOB if cfg.parallelism > 1 else 1):
            tasks.append((theorem_id, alg, values, start, stop, ctx))
    if cfg.parallelism > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=cfg.parallelism) as pool:
            outcomes = list(pool.map(_sweep_chunk, tasks))
    else:
        outcomes = [_sweep_chunk(t) for t in tasks]
    checked = sum(o[0] for o in outcomes)
    bad = sum(o[1] for o in outcomes)
    # tasks are ordered by algebra, then index, so the first hit is the least witness
    witness = None
    for task, (_, _, first) in zip(tasks, outcomes):
        if first is not None:
            idx, fs, detail = first
            witness = {"algebra": task[1].descriptor, "index": idx, "fuzzy_set": fs,
                       **{k: _fmt(v) if not isinstance(v, (bool, str)) else v for k, v in detail.items()}}
            break
    return checked, bad, witness


def verify_theorem(cfg: SweepConfig, theorem_id: str) -> VerificationResult:
    """Sweep one theorem over every algebra and every candidate fuzzy set in ``cfg``."""
    if theorem_id not in _CHECKS:
        raise UnknownTheorem(f"unknown theorem id {theorem_id!r}")
    if theorem_id == "PROBLEM4":
        return search_problem_4(cfg)
    started = time.perf_counter()
    algebras = cfg.load_algebras()
    checked, bad, witness = _sweep(cfg, theorem_id, algebras)
    note = ""
    if theorem_id in ("T3.10", "T4.6"):
        note = "thresholds " + ", ".join(f"({a}, {b})" for a, b in cfg.pairs())
    elif theorem_id == "T3.5":
        note = f"thresholds {cfg.thresholds_mode}" + (", strict_both" if cfg.strict_both else "")
    elif theorem_id.startswith("T5.4"):
        variant = {"T5.4i": "gr", "T5.4ii": "g", "T5.4iii": "cg"}[theorem_id]
        op = variant_thresholds(variant, cfg.den)[0]
        swaps = sum(lifting_swaps(a, F, op) for a in algebras
                    for F in _iter_sets(cfg, theorem_id, a))
        note = f"lifting swaps {swaps}"
    return VerificationResult(
        theorem_id=theorem_id,
        algebra_descriptor=",".join(a.descriptor for a in algebras),
        grid_descriptor=cfg.grid_descriptor(),
        candidates_checked=checked,
        status="counterexample" if witness else "verified",
        witness=witness,
        counterexamples=bad,
        elapsed=time.perf_counter() - started,
        note=note,
    )


def _iter_sets(cfg, theorem_id, alg) -> Iterable[IVFuzzySet]:
    values = candidate_values(cfg, theorem_id)
    for idx in range(len(values) ** alg.n):
        yield fuzzy_set_at(idx, values, alg.n)


def search_problem_4(cfg: SweepConfig) -> VerificationResult:
    """Look for a fuzzy MV- and G-filter that is not implicative where the arrows differ."""
    started = time.perf_counter()
    algebras = cfg.load_algebras()
    candidates = [a for a in algebras if not a.arrows_coincide]
    descriptor = ",".join(a.descriptor for a in algebras)
    if not candidates:
        return VerificationResult("PROBLEM4", descriptor, cfg.grid_descriptor(), 0, "skipped",
                                  elapsed=time.perf_counter() - started, note="arrows coincide")
    checked, bad, witness = _sweep(cfg, "PROBLEM4", candidates)
    note = "" if witness else "none found at this scale"
    return VerificationResult("PROBLEM4", ",".join(a.descriptor for a in candidates), cfg.grid_descriptor(),
                              checked, "counterexample" if witness else "verified", witness, bad,
                              time.perf_counter() - started, note)


def verify_all(cfg: SweepConfig) -> list[VerificationResult]:
    return [verify_theorem(cfg, t) for t in THEOREM_IDS]
