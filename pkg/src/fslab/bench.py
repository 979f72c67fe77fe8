"""Run claims over their scan domains and collect verdicts.

A suite config is JSON::

    {"claims": ["Thm1.6", {"id": "Lem3.4", "n": [4, 5]}],
     "nRange": [3, 5], "parallelism": 4, "haltOnCounterexample": true}

For each claim the sizes come from, in order: an explicit ``n`` list on the
entry, the claim's fixed sizes (single-size checks such as ``Lem3.8``),
``nRange`` clipped to the sizes the claim supports, the claim's defaults.
``FS_LAB_THREADS`` overrides ``parallelism``.
"""

from __future__ import annotations

import dataclasses
import enum
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice
from pathlib import Path
from typing import Iterable, Iterator, Sequence

from fslab import claims
from fslab.claims import Claim, Instance, Outcome

REPORT_SCHEMA = "fslab.report/1"
CHUNK = 64
WINDOW = 32  # chunks in flight per claim


class ConfigError(ValueError):
    """Malformed suite config or unknown claim id."""


class Verdict(str, enum.Enum):
    ALL_PASS = "AllPass"
    COUNTEREXAMPLE = "Counterexample"
    VACUOUS = "VacuousAtThisN"


@dataclass
class ClaimResult:
    id: str
    n: int
    instances_checked: int
    hypothesis_satisfied: int
    verdict: Verdict
    witness: dict | None = None
    detail: str = ""
    counterexamples: int = 0
    runtime: float = 0.0
    statement: str = ""

    @property
    def passed(self) -> bool:
        return self.verdict is not Verdict.COUNTEREXAMPLE

    def to_json(self, timings: bool = True) -> dict:
        out = {
            "id": self.id,
            "n": self.n,
            "statement": self.statement,
            "instancesChecked": self.instances_checked,
            "hypothesisSatisfied": self.hypothesis_satisfied,
            "verdict": self.verdict.value,
            "counterexamples": self.counterexamples,
            "witness": self.witness,
            "detail": self.detail,
        }
        if timings:
            out["runtimeSeconds"] = round(self.runtime, 3)
        return out

    def summary_line(self) -> str:
        line = (
            f"{self.verdict.value:<15} {self.id:<10} n={self.n}  "
            f"checked={self.instances_checked} hypothesis={self.hypothesis_satisfied}"
        )
        if self.verdict is Verdict.COUNTEREXAMPLE:
            line += f"  witness={json.dumps(self.witness, sort_keys=True)} ({self.detail})"
        return line


@dataclass
class SuiteConfig:
    claims: list[tuple[str, tuple[int, ...] | None]] = field(default_factory=list)
    n_range: tuple[int, int] | None = None
    parallelism: int = 1
    halt_on_counterexample: bool = True
    name: str = "suite"


def parse_config(data: dict, name: str = "suite", registry: dict[str, Claim] | None = None) -> SuiteConfig:
    if not isinstance(data, dict):
        raise ConfigError("config must be a JSON object")
    registry = claims.CLAIMS if registry is None else registry
    entries = []
    for item in data.get("claims", []):
        if isinstance(item, str):
            cid, ns = item, None
        elif isinstance(item, dict) and isinstance(item.get("id"), str):
            cid = item["id"]
            ns = item.get("n")
            if ns is not None:
                if isinstance(ns, int):
                    ns = [ns]
                if not isinstance(ns, list) or not all(isinstance(v, int) for v in ns):
                    raise ConfigError(f"claim {cid}: n must be an integer or a list of integers")
                ns = tuple(ns)
        else:
            raise ConfigError(f"bad claim entry {item!r}")
        if cid not in registry:
            raise ConfigError(f"unknown claim id {cid!r}")
        entries.append((cid, ns))
    n_range = data.get("nRange")
    if n_range is not None:
        if not (isinstance(n_range, list) and len(n_range) == 2 and all(isinstance(v, int) for v in n_range)):
            raise ConfigError("nRange must be [lo, hi]")
        n_range = (n_range[0], n_range[1])
    parallelism = data.get("parallelism", 1)
    if not isinstance(parallelism, int) or parallelism < 1:
        raise ConfigError("parallelism must be a positive integer")
    halt = data.get("haltOnCounterexample", True)
    if not isinstance(halt, bool):
        raise ConfigError("haltOnCounterexample must be a boolean")
    return SuiteConfig(entries, n_range, parallelism, halt, data.get("name", name))


def load_config(path: str | Path, registry: dict[str, Claim] | None = None) -> SuiteConfig:
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    return parse_config(data, name=path.stem, registry=registry)


def effective_parallelism(requested: int) -> int:
    env = os.environ.get("FS_LAB_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise ConfigError(f"FS_LAB_THREADS must be an integer, got {env!r}") from None
    return max(1, requested)


def sizes_for(claim: Claim, explicit: Sequence[int] | None, n_range: tuple[int, int] | None) -> list[int]:
    if explicit is not None:
        bad = [n for n in explicit if not claim.supports(n)]
        if bad:
            raise ConfigError(f"claim {claim.id} does not support n={bad}")
        return list(explicit)
    if claim.fixed_ns:
        return list(claim.fixed_ns)
    if n_range is not None:
        return [n for n in range(n_range[0], n_range[1] + 1) if claim.supports(n)]
    return list(claim.default_ns)


# ---------------------------------------------------------------------------
# execution


def _evaluate_chunk(chunk: list[Instance]) -> list[Outcome]:
    return [claims.evaluate(inst) for inst in chunk]


def _chunks(it: Iterable[Instance], size: int) -> Iterator[list[Instance]]:
    it = iter(it)
    while chunk := list(islice(it, size)):
        yield chunk


def _outcomes(
    instances: Iterable[Instance], pool: ProcessPoolExecutor | None, registry: dict[str, Claim] | None
) -> Iterator[tuple[Instance, Outcome]]:
    """Outcomes in instance order; parallel work is submitted in a bounded window."""
    if pool is None:
        for inst in instances:
            yield inst, claims.evaluate(inst, registry)
        return
    window = []
    chunks = _chunks(instances, CHUNK)
    try:
        for chunk in chunks:
            window.append((chunk, pool.submit(_evaluate_chunk, chunk)))
            if len(window) >= WINDOW:
                chunk0, fut = window.pop(0)
                yield from zip(chunk0, fut.result())
        while window:
            chunk0, fut = window.pop(0)
            yield from zip(chunk0, fut.result())
    finally:
        for _, fut in window:
            fut.cancel()


def run_claim(
    cid: str,
    n: int,
    *,
    halt: bool = True,
    s: int | None = None,
    pool: ProcessPoolExecutor | None = None,
    registry: dict[str, Claim] | None = None,
) -> ClaimResult:
    """Scan one claim at one size.  ``s`` pins the connectivity level for
    claims parameterized by ``s`` (otherwise the largest level the
    hypothesis grants is checked, which implies all smaller ones)."""
    claim = claims.get_claim(cid, registry)
    start = time.perf_counter()
    instances = claim.instances(n)
    if s is not None:
        instances = (dataclasses.replace(i, params=tuple(sorted(i.params + (("s", s),)))) for i in instances)
    checked = satisfied = bad = 0
    witness, detail = None, ""
    for inst, outcome in _outcomes(instances, pool if registry is None else None, registry):
        checked += 1
        if not outcome.hypothesis:
            continue
        satisfied += 1
        if not outcome.ok:
            bad += 1
            if witness is None:
                witness, detail = inst.witness(), outcome.detail
            if halt:
                break
    if bad:
        verdict = Verdict.COUNTEREXAMPLE
    elif satisfied == 0:
        verdict = Verdict.VACUOUS
    else:
        verdict = Verdict.ALL_PASS
    return ClaimResult(
        id=cid,
        n=n,
        instances_checked=checked,
        hypothesis_satisfied=satisfied,
        verdict=verdict,
        witness=witness,
        detail=detail,
        counterexamples=bad,
        runtime=time.perf_counter() - start,
        statement=claim.statement,
    )


def run_suite(config: SuiteConfig, registry: dict[str, Claim] | None = None, progress=None) -> list[ClaimResult]:
    """Run every (claim, n) of ``config`` in config order."""
    lookup = claims.CLAIMS if registry is None else registry
    jobs = []
    for cid, explicit in config.claims:
        claim = claims.get_claim(cid, lookup)
        jobs += [(cid, n) for n in sizes_for(claim, explicit, config.n_range)]
    workers = effective_parallelism(config.parallelism)
    pool = ProcessPoolExecutor(workers) if workers > 1 and registry is None else None
    results = []
    try:
        for cid, n in jobs:
            result = run_claim(cid, n, halt=config.halt_on_counterexample, pool=pool, registry=registry)
            results.append(result)
            if progress is not None:
                progress(result)
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)
    return results


def exit_code(results: Sequence[ClaimResult]) -> int:
    return 1 if any(r.verdict is Verdict.COUNTEREXAMPLE for r in results) else 0


def report(results: Sequence[ClaimResult], name: str = "suite", timings: bool = True) -> dict:
    counts = {v.value: sum(1 for r in results if r.verdict is v) for v in Verdict}
    out = {
        "schema": REPORT_SCHEMA,
        "suite": name,
        "results": [r.to_json(timings) for r in results],
        "summary": counts,
        "exitCode": exit_code(results),
    }
    if timings:
        out["runtimeSeconds"] = round(sum(r.runtime for r in results), 3)
    return out


def replay(witness: dict, registry: dict[str, Claim] | None = None) -> Outcome:
    """Re-evaluate a single instance from its witness record."""
    return claims.evaluate(Instance.from_witness(witness), registry)


# ---------------------------------------------------------------------------
# grouped checks


def _group(ids: Sequence[str], n: int, **kw) -> list[ClaimResult]:
    return [run_claim(cid, n, **kw) for cid in ids if claims.get_claim(cid).supports(n)]


def check_main_sconnectivity(n: int, s: int | None = None, **kw) -> ClaimResult:
    return run_claim("Thm1.6", n, s=s, **kw)


def check_bipartite_two_components(n: int, s: int | None = None, **kw) -> list[ClaimResult]:
    return [run_claim("Thm1.5i", n, s=s, **kw), run_claim("Thm1.5ii", n, **kw)]


def check_degree_theorems(n: int, **kw) -> list[ClaimResult]:
    return _group(["Thm1.2", "Thm1.3", "Conj1.4", "Thm1.7i", "Thm1.7ii", "Thm1.8"], n, **kw)


def check_dl_family(n: int, **kw) -> list[ClaimResult]:
    """Dandelion-lollipop characterization and the kappa-sum results."""
    return _group(["Thm4.1", "Prop4.3", "Thm4.4i", "Thm4.4ii", "Thm4.4iii", "Thm4.4iv"], n, **kw)


check_section4 = check_dl_family  # name used by the published API


def check_structural_lemmas(n: int, **kw) -> list[ClaimResult]:
    ids = ["Lem3.4", "Lem3.7", "Lem3.10", "Lem3.11"]
    out = _group(ids, n, **kw)
    if n == 8:
        out.append(run_claim("Lem3.8", 8, **kw))
    return out
