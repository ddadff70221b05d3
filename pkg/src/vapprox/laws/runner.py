"""Run laws over seeded random cases, shrink the first failure, emit JSON.

Case ``i`` of a law draws its instance from
``SeedSequence(entropy=seed, spawn_key=(crc32(group), i))``, so every case is
reproducible on its own and serial and parallel runs agree.
"""

from __future__ import annotations

import json
import zlib
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from ..report import ResourceLimitError, _jsonable
from ..topo import FinTop
from ..vcat import VCategory
from .registry import DEFAULT_CAP, OBSERVATION, THEOREM, Law, Verdict, select

SHRINK_KEYS = ("X", "poset", "space")


def case_seeds(seed: int, law: Law, i: int) -> tuple[int, int]:
    ss = np.random.SeedSequence(entropy=seed, spawn_key=(zlib.crc32(law.seed_group.encode()), i))
    a, b = ss.generate_state(2, dtype=np.uint32)
    return int(a), int(b)


def make_instance(law: Law, seed: int, i: int, cap: int = DEFAULT_CAP) -> dict:
    gseed, cseed = case_seeds(seed, law, i)
    inst = law.generate(np.random.default_rng(gseed))
    inst["_seed"] = cseed
    inst["_cap"] = cap
    return inst


def serialize_instance(inst: dict) -> dict:
    out = {}
    for k, v in sorted(inst.items()):
        if k == "_cap":
            continue
        if isinstance(v, VCategory):
            q = v.quantale
            out[k] = {"quantale": q.display or list(q.elements), "objects": list(v.objects),
                      "structure": [[q.name(e) for e in row] for row in v.structure]}
        elif isinstance(v, FinTop):
            out[k] = {"points": list(v.points), "opens": sorted(sorted(o) for o in v.opens)}
        elif hasattr(v, "tensor"):
            out[k] = {"quantale": v.display or list(v.elements), "elements": list(v.elements)}
        elif isinstance(v, np.ndarray):
            out[k] = v.astype(int).tolist()
        else:
            out[k] = str(v) if not isinstance(v, (int, float, str, bool)) else v
    return out


def _restrict(inst: dict, key: str, keep: list) -> dict:
    new = dict(inst)
    v = inst[key]
    if key == "X":
        new["X"] = v.full_subcategory(keep)
    elif key == "poset":
        new["poset"] = v[np.ix_(keep, keep)]
    else:
        pos = {p: k for k, p in enumerate(keep)}
        new["space"] = FinTop([v.points[i] for i in keep],
                              [[pos[i] for i in o if i in pos] for o in v.opens])
    return new


def _size(inst, key) -> int:
    return len(inst[key])


def _fails(law: Law, inst: dict) -> Verdict | None:
    try:
        v = law.check(inst)
    except ResourceLimitError:
        return None
    return v if v.applicable and not v.holds else None


def shrink(law: Law, inst: dict) -> tuple[dict, Verdict]:
    """Greedily delete objects (full subcategories / subspaces) while the law still fails."""
    verdict = _fails(law, inst)
    progress = True
    while progress:
        progress = False
        for key in SHRINK_KEYS:
            if key not in inst or _size(inst, key) <= 1:
                continue
            n = _size(inst, key)
            for drop in range(n):
                cand = _restrict(inst, key, [i for i in range(n) if i != drop])
                v = _fails(law, cand)
                if v is not None:
                    inst, verdict, progress = cand, v, True
                    break
            if progress:
                break
    return inst, verdict


@dataclass
class LawResult:
    id: str
    tier: str
    summary: str
    cases: int = 0
    applicable: int = 0
    evaluations: int = 0
    failures: int = 0
    capped: int = 0
    counterexample: dict | None = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> dict:
        return {"id": self.id, "tier": self.tier, "summary": self.summary, "cases": self.cases,
                "applicable": self.applicable, "evaluations": self.evaluations,
                "failures": self.failures, "capped": self.capped, "passed": self.passed,
                "counterexample": self.counterexample}


def run_law(law: Law, seed: int = 0, count: int = 200, cap: int = DEFAULT_CAP) -> LawResult:
    res = LawResult(law.id, law.tier, law.summary)
    for i in range(count):
        inst = make_instance(law, seed, i, cap)
        res.cases += 1
        try:
            v = law.check(inst)
        except ResourceLimitError:
            res.capped += 1
            continue
        if not v.applicable:
            continue
        res.applicable += 1
        res.evaluations += v.evaluations
        if v.holds:
            continue
        res.failures += 1
        if res.counterexample is None:
            small, sv = shrink(law, inst)
            res.counterexample = {
                "case": i,
                "instance": serialize_instance(inst),
                "witness": _jsonable(v.witness),
                "shrunk": serialize_instance(small),
                "shrunk_witness": _jsonable(sv.witness if sv else None),
            }
    return res


def _run_by_id(args) -> LawResult:
    from .registry import BY_ID

    law_id, seed, count, cap = args
    return run_law(BY_ID[law_id], seed, count, cap)


@dataclass
class LawReport:
    seed: int
    count: int
    results: list = field(default_factory=list)

    @property
    def theorem_failures(self) -> list:
        return [r.id for r in self.results if r.tier == THEOREM and not r.passed]

    @property
    def observation_failures(self) -> list:
        return [r.id for r in self.results if r.tier == OBSERVATION and not r.passed]

    @property
    def capped(self) -> bool:
        return any(r.capped for r in self.results)

    @property
    def passed(self) -> bool:
        return not self.theorem_failures

    def __getitem__(self, law_id: str) -> LawResult:
        for r in self.results:
            if r.id == law_id:
                return r
        raise KeyError(law_id)

    def to_dict(self) -> dict:
        return {"seed": self.seed, "count": self.count,
                "laws": [r.to_dict() for r in self.results],
                "summary": {"theorem_failures": self.theorem_failures,
                            "observation_failures": self.observation_failures,
                            "passed": self.passed}}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


def run_laws(selection=None, seed: int = 0, count: int = 200, tier: str | None = None,
             cap: int = DEFAULT_CAP, jobs: int = 1) -> LawReport:
    laws = select(selection, tier)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_by_id, [(l.id, seed, count, cap) for l in laws]))
    else:
        results = [run_law(l, seed, count, cap) for l in laws]
    return LawReport(seed, count, results)
