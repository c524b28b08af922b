"""Suite runners and structured reports.

Each suite maps a checker over a corpus and assembles a CheckReport whose
JSON rendering is byte-identical across runs and worker counts: verdicts
are keyed by corpus index, keys are sorted, and timing lives only on the
in-memory report, never in the JSON.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from typing import Callable

from .betti import has_linear_resolution
from .core import Monomial, MonomialIdeal, VariableOrder, all_variable_orders
from .corpus import CorpusItem, CorpusSpec, enumerate_corpus
from .polymatroid import exchange_failure, is_polymatroidal
from .quotients import (
    ConjectureOutcome,
    conjecture_probe,
    has_quotients_with_linear_resolution,
    linear_quotients_failure,
    sort_generators,
    theorem_equivalence,
)
from .version import __version__

SCHEMA_VERSION = 1

REMARK_GENS = ((1, 0, 2), (2, 0, 1), (1, 1, 1), (0, 2, 1))

_BAD_VERDICTS = {"MISMATCH", "COUNTEREXAMPLE", "VIOLATION", "fail"}


def remark_ideal() -> MonomialIdeal:
    """The four-generator ideal reproduced by `suite remark`."""
    gens = sorted((Monomial(e) for e in REMARK_GENS), key=lambda m: m.exponents, reverse=True)
    return MonomialIdeal(3, tuple(gens))


@dataclass
class CheckReport:
    """Structured verdicts for one suite run.

    wall_time is informational only and deliberately excluded from the
    JSON rendering so that reports stay byte-identical across runs.
    """

    suite: str
    parameters: dict
    verdicts: list[dict]
    totals: dict[str, int]
    seed: int | None = None
    version: str = __version__
    wall_time: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not any(self.totals.get(v, 0) for v in _BAD_VERDICTS)

    def exit_code(self) -> int:
        return 0 if self.passed else 1

    def to_json_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "suite": self.suite,
            "tool": "polymat",
            "version": self.version,
            "parameters": self.parameters,
            "seed": self.seed,
            "totals": self.totals,
            "passed": self.passed,
            "notes": self.notes,
            "verdicts": self.verdicts,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, indent=2) + "\n"

    def summary(self) -> str:
        counts = ", ".join(f"{k}={v}" for k, v in sorted(self.totals.items()))
        status = "PASS" if self.passed else "FAIL"
        return (
            f"suite {self.suite}: {status} ({counts}) "
            f"[{len(self.verdicts)} verdicts, {self.wall_time:.2f}s]"
        )


def _gens_payload(I: MonomialIdeal) -> list[list[int]]:
    return [list(g.exponents) for g in I.gens]


def _tally(verdicts: list[dict]) -> dict[str, int]:
    totals: dict[str, int] = {}
    for v in verdicts:
        totals[v["verdict"]] = totals.get(v["verdict"], 0) + 1
    return totals


def _map_corpus(worker: Callable[[CorpusItem], dict], spec: CorpusSpec, jobs: int) -> list[dict]:
    items = list(enumerate_corpus(spec))
    if jobs <= 1:
        return [worker(item) for item in items]
    chunk = max(1, len(items) // (jobs * 8))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(worker, items, chunksize=chunk))


def _theorem_verdict(item: CorpusItem, *, with_linear_resolution: bool) -> dict:
    check = theorem_equivalence(item.ideal)
    out = {
        "index": item.index,
        "mask": item.mask,
        "gens": _gens_payload(item.ideal),
        "polymatroidal": check.polymatroidal,
        "lex_all_orders": check.lex_all_orders,
    }
    consistent = check.consistent
    if with_linear_resolution:
        linear = has_linear_resolution(item.ideal)
        out["linear_resolution"] = linear
        consistent = consistent and linear == check.polymatroidal
    out["verdict"] = "consistent" if consistent else "MISMATCH"
    if not consistent:
        if check.exchange_witness is not None:
            w = check.exchange_witness
            out["exchange_witness"] = {
                "u": list(w.u.exponents),
                "v": list(w.v.exponents),
                "variable": w.variable,
            }
        if check.lq_witness is not None:
            order, failure = check.lq_witness
            out["lq_witness"] = {
                "kind": "lex",
                "order": list(order.perm),
                "position": failure.position,
                "blocker": list(failure.blocker.exponents),
            }
    return out


def run_theorem_suite(spec: CorpusSpec, jobs: int = 1) -> CheckReport:
    """Exchange property versus lex linear quotients for every variable order.

    For two-variable corpora the verdict additionally requires agreement
    with the linear-resolution predicate.
    """
    start = time.perf_counter()
    worker = partial(_theorem_verdict, with_linear_resolution=spec.n == 2)
    verdicts = _map_corpus(worker, spec, jobs)
    report = CheckReport(
        suite="theorem",
        parameters=spec.to_json_dict(),
        verdicts=verdicts,
        totals=_tally(verdicts),
        seed=spec.seed if spec.mode == "random" else None,
    )
    report.wall_time = time.perf_counter() - start
    return report


def _conjecture_verdict(item: CorpusItem) -> dict:
    probe = conjecture_probe(item.ideal)
    out = {
        "index": item.index,
        "mask": item.mask,
        "gens": _gens_payload(item.ideal),
        "verdict": probe.outcome.value,
    }
    if probe.outcome is ConjectureOutcome.REFUTED:
        out["refuting_order"] = {
            "kind": "revlex",
            "order": list(probe.refuting_order.perm),
            "position": probe.lq_failure.position,
            "blocker": list(probe.lq_failure.blocker.exponents),
        }
    if probe.outcome is ConjectureOutcome.COUNTEREXAMPLE:
        # headline event: serialize everything needed to re-verify
        w = probe.exchange_witness
        out["exchange_witness"] = {
            "u": list(w.u.exponents),
            "v": list(w.v.exponents),
            "variable": w.variable,
        }
        out["revlex_orders_checked"] = [
            list(o.perm) for o in all_variable_orders(item.ideal.n)
        ]
    return out


def run_conjecture_search(spec: CorpusSpec, jobs: int = 1) -> CheckReport:
    """Search for non-polymatroidal ideals with revlex linear quotients
    under every variable ordering; finding one is a headline event."""
    start = time.perf_counter()
    verdicts = _map_corpus(_conjecture_verdict, spec, jobs)
    report = CheckReport(
        suite="conjecture",
        parameters=spec.to_json_dict(),
        verdicts=verdicts,
        totals=_tally(verdicts),
        seed=spec.seed if spec.mode == "random" else None,
    )
    report.wall_time = time.perf_counter() - start
    return report


def _localization_verdict(item: CorpusItem) -> dict:
    I = item.ideal
    out = {"index": item.index, "mask": item.mask, "gens": _gens_payload(I)}
    if not is_polymatroidal(I):
        out["verdict"] = "not_polymatroidal"
        return out
    violations = []
    checked = 0
    for mask in range(1 << I.n):
        off = [i + 1 for i in range(I.n) if mask >> i & 1]
        if len(off) == I.n:
            continue  # substituting every variable away leaves the unit ideal
        checked += 1
        if not has_linear_resolution(I.localize(off)):
            violations.append(off)
    out["checked"] = checked
    out["violations"] = violations
    out["verdict"] = "all_linear" if not violations else "VIOLATION"
    return out


def run_localization_probe(spec: CorpusSpec, jobs: int = 1) -> CheckReport:
    """For each polymatroidal corpus ideal, every proper substitution
    x_i -> 1 must leave an ideal with a linear resolution."""
    start = time.perf_counter()
    verdicts = _map_corpus(_localization_verdict, spec, jobs)
    report = CheckReport(
        suite="localization",
        parameters=spec.to_json_dict(),
        verdicts=verdicts,
        totals=_tally(verdicts),
        seed=spec.seed if spec.mode == "random" else None,
    )
    report.wall_time = time.perf_counter() - start
    return report


def reproduce_remark() -> CheckReport:
    """Three facts about the fixed four-generator example in K[x1,x2,x3]:
    it is not polymatroidal; linear quotients fail under both the lex and
    revlex orderings induced by x3 > x2 > x1; yet quotients with linear
    resolution hold for both kinds under all six variable orders."""
    start = time.perf_counter()
    I = remark_ideal()
    verdicts = []

    witness = exchange_failure(I)
    verdicts.append(
        {
            "clause": 1,
            "description": "not polymatroidal",
            "verdict": "pass" if witness is not None else "fail",
            "exchange_witness": None
            if witness is None
            else {
                "u": list(witness.u.exponents),
                "v": list(witness.v.exponents),
                "variable": witness.variable,
            },
        }
    )

    order321 = VariableOrder((3, 2, 1))
    failures = {}
    for kind in ("lex", "revlex"):
        failure = linear_quotients_failure(sort_generators(I, kind, order321))
        failures[kind] = failure
    verdicts.append(
        {
            "clause": 2,
            "description": "linear quotients fail under lex and revlex for x3>x2>x1",
            "verdict": "pass" if all(f is not None for f in failures.values()) else "fail",
            "failures": {
                kind: None
                if f is None
                else {"position": f.position, "blocker": list(f.blocker.exponents)}
                for kind, f in failures.items()
            },
        }
    )

    qwlr = {}
    for kind in ("lex", "revlex"):
        for order in all_variable_orders(3):
            seq = sort_generators(I, kind, order)
            qwlr[f"{kind}:{order}"] = has_quotients_with_linear_resolution(seq)
    verdicts.append(
        {
            "clause": 3,
            "description": "quotients with linear resolution for all 12 kind/order pairs",
            "verdict": "pass" if all(qwlr.values()) else "fail",
            "combinations": {k: v for k, v in sorted(qwlr.items())},
        }
    )

    report = CheckReport(
        suite="remark",
        parameters={"gens": _gens_payload(I), "n": 3},
        verdicts=verdicts,
        totals=_tally(verdicts),
    )
    report.wall_time = time.perf_counter() - start
    return report


def reverify_witness(verdict: dict, n: int, d: int) -> bool:
    """Replay a serialized failure witness through the relevant checker.

    Returns True when the recorded failure reproduces exactly.
    """
    from .corpus import ideal_from_mask

    I = ideal_from_mask(n, d, verdict["mask"])
    if _gens_payload(I) != verdict["gens"]:
        return False
    if "refuting_order" in verdict:
        w = verdict["refuting_order"]
        seq = sort_generators(I, w["kind"], VariableOrder(tuple(w["order"])))
        failure = linear_quotients_failure(seq)
        return (
            failure is not None
            and failure.position == w["position"]
            and list(failure.blocker.exponents) == w["blocker"]
        )
    if "exchange_witness" in verdict:
        w = verdict["exchange_witness"]
        failure = exchange_failure(I)
        return (
            failure is not None
            and list(failure.u.exponents) == w["u"]
            and list(failure.v.exponents) == w["v"]
            and failure.variable == w["variable"]
        )
    return True
