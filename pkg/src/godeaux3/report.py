"""Report assembly for the proof-tree runs: deterministic text and JSON."""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .prooftree import (FAILED, SCHEMA_VERSION, NodeResult, ProofNode,
                        build_nodes, topological_order)


@dataclass
class Report:
    selector: str
    results: dict[str, NodeResult]
    order: list[str]
    registry: dict[str, ProofNode]
    timings: dict[str, float] = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        return "verified" if not self.failed_nodes() else "failed"

    def failed_nodes(self) -> list[str]:
        return [nid for nid in self.order if self.results[nid].status == FAILED]

    def counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for nid in self.order:
            status = self.results[nid].status
            counts[status] = counts.get(status, 0) + 1
        return counts

    def axiom_ledger(self) -> list[dict]:
        out = []
        for nid in self.order:
            node = self.registry[nid]
            if node.kind == "axiom":
                trace = self.results[nid].trace
                out.append({"id": nid, "statement": node.title,
                            "source": trace[-1].removeprefix("source: ") if trace else ""})
        return out

    def to_json(self, include_timing: bool = False) -> dict:
        data = {
            "schema_version": SCHEMA_VERSION,
            "selector": self.selector,
            "verdict": self.verdict,
            "counts": dict(sorted(self.counts().items())),
            "nodes": [
                {
                    "id": nid,
                    "kind": self.registry[nid].kind,
                    "title": self.registry[nid].title,
                    "status": self.results[nid].status,
                    "depends_on": sorted(self.registry[nid].depends_on),
                    "trace": list(self.results[nid].trace),
                }
                for nid in self.order
            ],
            "axioms": self.axiom_ledger(),
        }
        if include_timing:
            data["timing"] = {nid: round(t, 6) for nid, t in sorted(self.timings.items())}
        return data

    def to_text(self, include_timing: bool = False) -> str:
        lines = [f"proof verification report (schema {SCHEMA_VERSION})",
                 f"selector: {self.selector}", ""]
        width = max(len(nid) for nid in self.order)
        for nid in self.order:
            node = self.registry[nid]
            status = self.results[nid].status
            lines.append(f"{nid:<{width}}  [{node.kind:<13}]  {status}")
        lines.append("")
        counts = self.counts()
        lines.append("summary: " + ", ".join(f"{k}={v}" for k, v in sorted(counts.items())))
        axioms = self.axiom_ledger()
        if axioms:
            lines.append(f"assumed statements ({len(axioms)}):")
            for ax in axioms:
                lines.append(f"  {ax['id']}: {ax['statement']} ({ax['source']})")
        if include_timing and self.timings:
            lines.append("timing (s):")
            for nid, t in sorted(self.timings.items()):
                lines.append(f"  {nid}: {t:.6f}")
        lines.append(f"verdict: {self.verdict}")
        return "\n".join(lines) + "\n"


CASE_SELECTORS = {
    "i": ["t.i"],
    "ii": ["t.ii"],
    "iii": ["t.iii2"],
    "0a": ["p.0", "p.l0"], "0b": ["p.0"], "0c": ["p.0", "p.l0"],
    "0d": ["p.0", "p.no0d"], "0e": ["p.0"], "0f": ["p.0", "p.l0"],
    "0g": ["p.0", "t.no0"], "0h": ["p.0"],
    "1a": ["p.1", "t.no0"], "1b": ["p.1"], "1c": ["p.1"],
    "1d": ["p.1", "t.no0"], "1e": ["p.1", "p.1e"], "1f": ["p.1", "t.3l-1"],
    "N": ["p.3", "t.no0", "t.no1"],
}


class UnknownSelector(KeyError):
    pass


def _closure(registry: dict[str, ProofNode], roots: list[str]) -> list[str]:
    wanted: set[str] = set()

    def visit(nid: str) -> None:
        if nid in wanted:
            return
        wanted.add(nid)
        for dep in registry[nid].depends_on:
            visit(dep)

    for nid in roots:
        visit(nid)
    return [nid for nid in topological_order(registry) if nid in wanted]


def run(selector: str = "all", jobs: int = 1,
        excluded: tuple[str, ...] = ()) -> Report:
    """Execute the selected subtree deterministically.

    ``excluded`` nodes are reported as failed without running; the scheduler
    may evaluate ready nodes concurrently, but assembly order is canonical.
    """
    registry = build_nodes()
    if selector == "all":
        order = topological_order(registry)
    elif selector in registry:
        order = _closure(registry, [selector])
    elif selector in CASE_SELECTORS:
        order = _closure(registry, CASE_SELECTORS[selector])
    else:
        raise UnknownSelector(selector)

    results: dict[str, NodeResult] = {}
    timings: dict[str, float] = {}

    def evaluate(nid: str) -> tuple[str, NodeResult, float]:
        start = time.perf_counter()
        if nid in excluded:
            result = NodeResult(FAILED, ["excluded from this run"])
        else:
            try:
                result = registry[nid].run()
            except Exception as exc:  # a crash is a failed node, not a crash run
                result = NodeResult(FAILED, [f"exception: {exc!r}"])
        return nid, result, time.perf_counter() - start

    remaining = list(order)
    done: set[str] = set()
    while remaining:
        ready = [nid for nid in remaining
                 if all(d in done or d not in order for d in registry[nid].depends_on)]
        if not ready:
            raise RuntimeError("scheduler stalled; dependency cycle?")
        if jobs > 1:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                for nid, result, took in pool.map(evaluate, ready):
                    results[nid] = result
                    timings[nid] = took
        else:
            for nid in ready:
                nid, result, took = evaluate(nid)
                results[nid] = result
                timings[nid] = took
        done.update(ready)
        remaining = [nid for nid in remaining if nid not in done]

    # a node whose dependency failed cannot count as closing the tree
    for nid in order:
        if results[nid].status != FAILED:
            bad_deps = [d for d in registry[nid].depends_on
                        if d in results and results[d].status == FAILED]
            if bad_deps:
                results[nid] = NodeResult(
                    FAILED, [f"dependency failed: {', '.join(sorted(bad_deps))}"])

    return Report(selector, results, order, registry, timings)


def explain(node_id: str) -> str:
    """Derivation trace of a single node (its inputs and decisive numbers)."""
    registry = build_nodes()
    if node_id not in registry:
        raise UnknownSelector(node_id)
    node = registry[node_id]
    result = node.run()
    lines = [f"{node_id} [{node.kind}] {node.title}",
             f"status: {result.status}"]
    if node.depends_on:
        lines.append("depends on: " + ", ".join(sorted(node.depends_on)))
    lines.append("derivation:")
    lines.extend(f"  {line}" for line in result.trace)
    return "\n".join(lines) + "\n"


def fixtures_check() -> tuple[bool, list[str]]:
    """Validate that the shipped fixtures parse and match the live code."""
    from . import delpezzo, pencil
    from .plane import verify_config_table
    from .prooftree import EXPECTED

    messages = []
    ok = True
    for name, table in delpezzo.all_printed_tables():
        passed, violations = verify_config_table(table)
        ok &= passed
        messages.append(f"{name}: {'ok' if passed else violations}")
    for ap in (0, 1, 2, 3):
        got = [[c.label, c.a2, c.ar0, c.g, c.apk, c.d_string()]
               for c in pencil.enumerate_pencil_cases(ap)]
        match = got == EXPECTED["pencil_lists"][str(ap)]
        ok &= match
        messages.append(f"pencil list A'^2={ap}: {'ok' if match else 'MISMATCH'}")
    messages.append(f"axiom ledger: {len(EXPECTED['axioms'])} entries")
    return ok, messages
