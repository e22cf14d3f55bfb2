"""Decider-versus-oracle cross-validation over the family parameter grids.

Each row pits an arithmetic decider against the brute-force oracle on one
parameter tuple; the oracle side is fed a seeded random relabeling of the
second graph so agreement also exercises relabeling invariance.  Rows are
independent and deterministic given the seed.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass
from typing import Iterator, Optional

from . import oracle
from .deciders import accordions_isomorphic, circulant_iso_accordion, circulant_iso_torus
from .errors import InvalidParameterError, NotApplicableError
from .graphs import accordion, cartesian_product, circulant, circulant_graph, cycle_graph
from .witnesses import accordion_witness, circulant_accordion_witness, verify_witness

__all__ = [
    "CensusRow",
    "CensusReport",
    "accordion_pair_rows",
    "circulant_accordion_rows",
    "torus_rows",
    "run_census",
]


@dataclass
class CensusRow:
    """One decider-vs-oracle comparison."""

    kind: str  # acc-acc | ci-acc | ci-torus
    params: dict[str, int]
    decider: bool
    oracle: bool
    agree: bool
    witness_verified: Optional[bool]  # present iff the decider said isomorphic
    elapsed: float

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "params": self.params,
            "decider": self.decider,
            "oracle": self.oracle,
            "agree": self.agree,
            "witness_verified": self.witness_verified,
            "elapsed": round(self.elapsed, 6),
        }


def _shuffled(g, rng):
    perm = list(range(g.order))
    rng.shuffle(perm)
    return g.relabel(perm)


def accordion_pair_rows(max_n: int, seed: int = 0, node_budget: Optional[int] = None) -> Iterator[CensusRow]:
    """All accordion pairs A[n,k1] vs A[n,k2], k1 <= k2, for 3 <= n <= max_n."""
    rng = random.Random(seed)
    for n in range(3, max_n + 1):
        for k1 in range(1, n // 2 + 1):
            for k2 in range(k1, n // 2 + 1):
                start = time.perf_counter()
                decided = accordions_isomorphic(n, k1, k2).isomorphic
                g1 = accordion(n, k1)
                g2 = accordion(n, k2)
                found = oracle.are_isomorphic(g1, _shuffled(g2, rng), node_budget)
                verified = None
                if decided:
                    witness = accordion_witness(n, k1, k2)
                    verified = verify_witness(g2, g1, witness)
                yield CensusRow(
                    "acc-acc",
                    {"n": n, "k1": k1, "k2": k2},
                    decided,
                    found is not None,
                    decided == (found is not None),
                    verified,
                    time.perf_counter() - start,
                )


def circulant_accordion_rows(max_n: int, seed: int = 0, node_budget: Optional[int] = None) -> Iterator[CensusRow]:
    """All Ci[2n,{a,b}] vs A[n,k] comparisons for 3 <= n <= max_n.

    Both-even (a,b) rows are kept: the decider wrapper reports them as plain
    false (the circulant is disconnected) and the oracle must concur.
    """
    rng = random.Random(seed + 1)
    for n in range(3, max_n + 1):
        for a in range(1, n):
            for b in range(a + 1, n):
                ci = circulant(n, a, b)
                for k in range(1, n // 2 + 1):
                    start = time.perf_counter()
                    try:
                        decided = circulant_iso_accordion(n, a, b, k).isomorphic
                    except NotApplicableError:
                        decided = False
                    acc = accordion(n, k)
                    found = oracle.are_isomorphic(ci, _shuffled(acc, rng), node_budget)
                    verified = None
                    if decided:
                        witness = circulant_accordion_witness(n, a, b, k)
                        verified = verify_witness(ci, acc, witness)
                    yield CensusRow(
                        "ci-acc",
                        {"n": n, "a": a, "b": b, "k": k},
                        decided,
                        found is not None,
                        decided == (found is not None),
                        verified,
                        time.perf_counter() - start,
                    )


def torus_rows(max_order: int, seed: int = 0, node_budget: Optional[int] = None) -> Iterator[CensusRow]:
    """Ci[m,{a1,a2}] vs C_{n1} [] C_{n2} for every m <= max_order with a divisor
    pair n1, n2 >= 3 and every normalized length pair a1 < a2."""
    rng = random.Random(seed + 2)
    for m in range(9, max_order + 1):
        divisor_pairs = [
            (d, m // d)
            for d in range(3, math.isqrt(m) + 1)
            if m % d == 0 and m // d >= 3
        ]
        if not divisor_pairs:
            continue
        top = (m - 1) // 2
        for n1, n2 in divisor_pairs:
            torus = cartesian_product(cycle_graph(n1), cycle_graph(n2))
            shuffled = _shuffled(torus, rng)
            for a1 in range(1, top + 1):
                for a2 in range(a1 + 1, top + 1):
                    start = time.perf_counter()
                    decided = circulant_iso_torus(m, a1, a2, n1, n2)
                    ci = circulant_graph(m, (a1, a2))
                    found = oracle.are_isomorphic(ci, shuffled, node_budget)
                    verified = None
                    if decided:
                        verified = found is not None and verify_witness(ci, shuffled, found)
                    yield CensusRow(
                        "ci-torus",
                        {"nprime": m, "a1": a1, "a2": a2, "n1": n1, "n2": n2},
                        decided,
                        found is not None,
                        decided == (found is not None),
                        verified,
                        time.perf_counter() - start,
                    )


@dataclass
class CensusReport:
    rows: list[CensusRow]
    summary: dict

    @property
    def ok(self) -> bool:
        return bool(self.summary["all_agree"] and not self.summary["witness_failures"])


def run_census(
    max_n: int = 14,
    max_circulant_n: Optional[int] = None,
    max_torus: int = 36,
    seed: int = 0,
    node_budget: Optional[int] = None,
) -> CensusReport:
    """Run the full cross-validation sweep and aggregate a summary.

    Accordion pairs go up to max_n, circulant-accordion comparisons up to
    min(max_n, 10) unless overridden, torus comparisons up to order max_torus.
    """
    if max_n < 3:
        raise InvalidParameterError(f"census needs max_n >= 3, got {max_n}")
    if max_torus < 0:
        raise InvalidParameterError(f"max_torus must be >= 0, got {max_torus}")
    circ_n = min(max_n, 10) if max_circulant_n is None else max_circulant_n

    start = time.perf_counter()
    rows: list[CensusRow] = []
    rows.extend(accordion_pair_rows(max_n, seed, node_budget))
    if circ_n >= 3:
        rows.extend(circulant_accordion_rows(circ_n, seed, node_budget))
    rows.extend(torus_rows(max_torus, seed, node_budget))

    disagreements = [r.params | {"kind": r.kind} for r in rows if not r.agree]
    witness_failures = [
        r.params | {"kind": r.kind} for r in rows if r.witness_verified is False
    ]
    summary = {
        "rows": len(rows),
        "by_kind": {
            kind: sum(1 for r in rows if r.kind == kind)
            for kind in ("acc-acc", "ci-acc", "ci-torus")
        },
        "isomorphic_rows": sum(1 for r in rows if r.decider),
        "disagreements": disagreements,
        "witness_failures": witness_failures,
        "all_agree": not disagreements,
        "elapsed": round(time.perf_counter() - start, 3),
    }
    return CensusReport(rows, summary)
