"""Exhaustive (or sampled) machine check of the gadget equivalences.

For every normalized hypergraph in a small family, the 2-colourability
verdict is compared with P5-contractibility of the P5 gadget, P6 of the P6
gadget and C6 of the C6 gadget.  Instances are independent, so the sweep can
fan out over worker processes; the report is sorted by instance key and does
not depend on completion order.
"""

from __future__ import annotations

import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .hypergraph import Hypergraph, enumerate_instances, is_two_colourable
from .reductions import (
    GadgetError,
    build_c6_gadget,
    build_p5_gadget,
    build_p6_gadget,
    colouring_to_c6_witness,
    colouring_to_p5_witness,
    colouring_to_p6_witness,
    p5_witness_to_colouring,
)
from .search import SearchBudgetExceeded, contracts_to, cyclicity, find_suitable_pair
from .witness import PatternSpec, verify_witness

SCHEMA = "sweep/1"
DEFAULT_SEED = 20150101


def instance_key(h: Hypergraph) -> str:
    edges = ";".join(",".join(h.ordered(s)) for s in h.hyperedges)
    return f"{','.join(h.elements)}|{edges}"


def _sort_key(h: Hypergraph) -> tuple:
    return (h.m, h.n, instance_key(h))


def _verdict(fn, *args, budget):
    try:
        return fn(*args, budget=budget)
    except SearchBudgetExceeded:
        return SearchBudgetExceeded


def check_instance(h: Hypergraph, budget: int | None = None) -> dict:
    """Run every decision procedure on one normalized hypergraph."""
    colouring = is_two_colourable(h)
    colourable = colouring is not None
    p5 = build_p5_gadget(h)
    c6 = build_c6_gadget(h)
    p6 = build_p6_gadget(h)

    pair5 = _verdict(find_suitable_pair, p5.graph, 5, budget=budget)
    pair6 = _verdict(find_suitable_pair, p6.graph, 6, budget=budget)
    cyc6 = _verdict(contracts_to, c6.graph, PatternSpec.cycle(6), budget=budget)
    cyc = _verdict(cyclicity, c6.graph, budget=budget)

    def flag(found):
        return None if found is SearchBudgetExceeded else found is not None

    verdicts = {"p5": flag(pair5), "p6": flag(pair6), "c6": flag(cyc6)}
    cyc_value = None if cyc is SearchBudgetExceeded else cyc

    # constructive directions: colouring -> witnesses, P5 witness -> colouring
    constructive = True
    if colourable:
        for gadget, build in ((p5, colouring_to_p5_witness), (c6, colouring_to_c6_witness),
                              (p6, colouring_to_p6_witness)):
            constructive &= bool(verify_witness(gadget.graph, build(gadget, colouring)))
    if verdicts["p5"]:
        try:
            p5_witness_to_colouring(p5, pair5.witness)
        except GadgetError:
            constructive = False

    return {
        "key": instance_key(h),
        "hypergraph": h.to_json(),
        "colourable": colourable,
        "colouring": colouring.to_json(h) if colourable else None,
        "gadget_sizes": {
            g.kind: {"vertices": len(g.graph), "edges": g.graph.num_edges} for g in (p5, p6, c6)
        },
        "verdicts": verdicts,
        "cyclicity": cyc_value,
        "constructive_ok": constructive,
        "agreement": all(v is not None and v == colourable for v in verdicts.values()),
        "cyclicity_agreement": cyc_value is not None
        and (cyc_value >= 6) == colourable
        and cyc_value >= 3,
    }


@dataclass
class SweepReport:
    records: list[dict] = field(default_factory=list)
    parameters: dict = field(default_factory=dict)

    @property
    def summary(self) -> dict:
        recs = self.records
        unknown = sum(1 for r in recs if None in r["verdicts"].values() or r["cyclicity"] is None)
        return {
            "instances": len(recs),
            "colourable": sum(r["colourable"] for r in recs),
            "agreement": sum(r["agreement"] for r in recs),
            "cyclicity_agreement": sum(r["cyclicity_agreement"] for r in recs),
            "constructive_ok": sum(r["constructive_ok"] for r in recs),
            "budget_exceeded": unknown,
            "disagreements": [r["key"] for r in recs if not r["agreement"]],
        }

    @property
    def all_agree(self) -> bool:
        s = self.summary
        n = s["instances"]
        return s["agreement"] == n and s["cyclicity_agreement"] == n and s["constructive_ok"] == n

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "parameters": self.parameters,
            "summary": self.summary,
            "records": self.records,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1) + "\n"


def _check_star(args: tuple[Hypergraph, int | None]) -> dict:
    return check_instance(*args)


def run_sweep(
    max_elements: int,
    max_edges: int,
    *,
    samples: int | None = None,
    seed: int = DEFAULT_SEED,
    jobs: int = 1,
    budget: int | None = None,
) -> SweepReport:
    """Check every instance of the family, or ``samples`` of them drawn with ``seed``."""
    instances = list(enumerate_instances(max_elements, max_edges))
    if samples is not None and samples < len(instances):
        instances = random.Random(seed).sample(instances, samples)
    instances.sort(key=_sort_key)
    work = [(h, budget) for h in instances]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            records = list(pool.map(_check_star, work, chunksize=4))
    else:
        records = [_check_star(w) for w in work]
    params = {
        "max_elements": max_elements,
        "max_edges": max_edges,
        "samples": samples,
        "seed": seed,
        "budget": budget,
    }
    return SweepReport(records, params)
