"""Circulant scans, rewiring search, the order-15 enumeration and the existence survey."""
from __future__ import annotations

import itertools
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

from .catalog import APPENDIX_ORDERS, load_fixture
from .constructions import fowler_extend, paper_circulant_catalog
from .cyclotomic import circulant_is_nut
from .errors import PreconditionError
from .graphcore import (CirculantSpec, Graph, RewireMove, circulant, cycles_complement,
                        degree_profile, is_connected, perfect_matching_complement, rewire)
from .nutcheck import is_nut

log = logging.getLogger(__name__)


def circulant_candidates(n: int, d: int) -> Iterator[CirculantSpec]:
    """Every jump set giving a d-regular circulant on n vertices, in lexicographic order."""
    if n < 3 or not 1 <= d < n:
        raise PreconditionError(f"need 3 <= n and 1 <= d < n, got n={n}, d={d}")
    half = (n - 1) // 2
    if d % 2 == 0:
        for jumps in itertools.combinations(range(1, half + 1), d // 2):
            yield CirculantSpec(n, jumps)
    elif n % 2 == 0:
        for jumps in itertools.combinations(range(1, half + 1), (d - 1) // 2):
            yield CirculantSpec(n, jumps + (n // 2,))


@dataclass
class ScanResult:
    n: int
    d: int
    hits: list[CirculantSpec] = field(default_factory=list)
    examined: int = 0
    elapsed: float = 0.0


SCAN_METHODS = ("cyclotomic", "kernel")


def _confirmed(spec: CirculantSpec, method: str = "cyclotomic", confirm: bool = True) -> bool:
    if method == "kernel":
        return is_nut(circulant(spec)).is_nut
    if not circulant_is_nut(spec):
        return False
    if confirm and not is_nut(circulant(spec)).is_nut:
        raise AssertionError(f"cyclotomic test and kernel disagree on {spec}")
    return True


def _scan_chunk(specs: list[CirculantSpec], method: str, confirm: bool) -> list[CirculantSpec]:
    return [s for s in specs if _confirmed(s, method, confirm)]


def scan_circulants(n: int, d: int, jobs: int = 1, first_only: bool = False,
                    method: str = "cyclotomic", confirm: bool = True) -> ScanResult:
    """All d-regular circulant nuts on n vertices, sorted by jump set.

    The default method screens candidates with the exact cyclotomic test and
    re-checks every hit with the integer kernel; ``method="kernel"`` runs the
    kernel computation on every candidate. ``confirm=False`` skips the
    kernel re-check of cyclotomic hits, which dominates the cost of large
    scans. With ``first_only`` the scan stops at the lexicographically first
    hit.
    """
    if method not in SCAN_METHODS:
        raise ValueError(f"unknown scan method {method!r}")
    start = time.perf_counter()
    res = ScanResult(n, d)
    if first_only or jobs <= 1:
        for spec in circulant_candidates(n, d):
            res.examined += 1
            if _confirmed(spec, method, confirm):
                res.hits.append(spec)
                if first_only:
                    break
    else:
        specs = list(circulant_candidates(n, d))
        res.examined = len(specs)
        size = max(1, -(-len(specs) // (4 * jobs)))
        chunks = [specs[i:i + size] for i in range(0, len(specs), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_scan_chunk, chunks, [method] * len(chunks),
                                 [confirm] * len(chunks)):
                res.hits.extend(part)
        res.hits.sort(key=lambda s: s.jumps)
    res.elapsed = time.perf_counter() - start
    return res


def conjecture_scan(d: int, orders) -> dict[int, ScanResult]:
    """First circulant nut of degree d for each order; misses are logged, not raised."""
    report = {}
    for n in orders:
        res = scan_circulants(n, d, first_only=True)
        if not res.hits:
            log.warning("no %d-regular circulant nut on %d vertices", d, n)
        report[n] = res
    return report


@dataclass(frozen=True)
class SearchConfig:
    budget: int = 1000
    restarts: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.budget < 1:
            raise PreconditionError("budget must be >= 1")
        if self.restarts < 1:
            raise PreconditionError("restarts must be >= 1")


@dataclass
class SearchResult:
    graph: Graph | None
    moves_tried: int
    restarts_used: int
    accepted: list[RewireMove]

    @property
    def found(self) -> bool:
        return self.graph is not None


def _score(g: Graph) -> tuple[int, int]:
    if not is_connected(g):
        return (g.order, g.order)
    v = is_nut(g)
    return abs(v.nullity - 1), len(v.zero_positions)


def _valid_move(g: Graph, u1, v1, u2, v2) -> bool:
    return (len({u1, v1, u2, v2}) == 4 and not g.has_edge(u1, v2)
            and not g.has_edge(u2, v1))


def _random_move(g: Graph, rng: random.Random, attempts: int = 200) -> RewireMove | None:
    edges = list(g.edges())
    if len(edges) < 2:
        return None
    for _ in range(attempts):
        (a, b), (c, d) = rng.sample(edges, 2)
        if rng.random() < 0.5:
            a, b = b, a
        if _valid_move(g, a, b, c, d):
            return RewireMove((a, b), (c, d))
    moves = [RewireMove((a, b), (c, d))
             for (x, y), (c, d) in itertools.combinations(edges, 2)
             for a, b in ((x, y), (y, x)) if _valid_move(g, a, b, c, d)]
    return rng.choice(moves) if moves else None


def rewiring_search(seed_graph: Graph, cfg: SearchConfig) -> SearchResult:
    """Hill-climb over 2-switches towards a nut graph with the seed's degree sequence.

    Score is (|nullity - 1|, number of zero kernel entries); a move is kept
    when it does not worsen the score. Each restart starts over from the seed
    graph with its own RNG derived from ``cfg.seed``.
    """
    if not degree_profile(seed_graph).is_regular:
        raise PreconditionError("rewiring search needs a regular seed graph")
    tried = 0
    for restart in range(cfg.restarts):
        rng = random.Random(f"{cfg.seed}/{restart}")
        g = seed_graph
        score = _score(g)
        accepted: list[RewireMove] = []
        if score == (0, 0):
            return SearchResult(g, tried, restart + 1, accepted)
        for _ in range(cfg.budget):
            move = _random_move(g, rng)
            if move is None:
                return SearchResult(None, tried, restart + 1, accepted)
            tried += 1
            cand = rewire(g, move)
            s = _score(cand)
            if s <= score:
                g, score = cand, s
                accepted.append(move)
                if score == (0, 0):
                    return SearchResult(g, tried, restart + 1, accepted)
    return SearchResult(None, tried, cfg.restarts, accepted)


def partitions_min_part(n: int, least: int = 3) -> Iterator[tuple[int, ...]]:
    """Partitions of n into parts >= least, parts non-increasing."""
    def rec(rest, cap):
        if rest == 0:
            yield ()
            return
        for p in range(min(rest, cap), least - 1, -1):
            for tail in rec(rest - p, p):
                yield (p,) + tail
    yield from rec(n, n)


def enumerate_order15() -> list[Graph]:
    """One 12-regular graph of order 15 per cycle type of the removed 2-factor."""
    return [cycles_complement(p, 15) for p in partitions_min_part(15)]


@dataclass
class SurveyRow:
    n: int
    exists: bool
    witness: str
    graph: Graph | None = None

    def line(self) -> str:
        verdict = "EXISTS" if self.exists else "NONE"
        return f"n={self.n} verdict={verdict} witness={self.witness}"


SURVEY_MIN, SURVEY_MAX = 13, 64


@lru_cache(maxsize=None)
def _base_witness(n: int) -> tuple[str, Graph]:
    if n % 2:
        return f"appendix:n{n}", load_fixture(n).graph
    spec = next(s for s in paper_circulant_catalog() if s.n == n)
    return f"circulant:{n}:{','.join(map(str, spec.jumps))}", circulant(spec)


@lru_cache(maxsize=None)
def _witness(n: int) -> tuple[str, Graph]:
    if n < 40:
        return _base_witness(n)
    _, smaller = _witness(n - 24)
    return f"fowler:{n - 24}@0", fowler_extend(smaller, 0).graph


def _negative(n: int) -> SurveyRow:
    if n == 13:
        graphs, why = [Graph.complete(13)], "exhaustive:K13"
    elif n == 14:
        graphs, why = [perfect_matching_complement(14)], "exhaustive:K14-matching"
    else:
        graphs = enumerate_order15()
        why = f"exhaustive:{len(graphs)}-two-factor-complements"
    if any(is_nut(g).is_nut for g in graphs):
        raise AssertionError(f"found a 12-regular nut of order {n}")
    return SurveyRow(n, False, why)


def survey(d: int = 12, lo: int = 13, hi: int = 63) -> list[SurveyRow]:
    """Existence of a 12-regular nut for each order in [lo, hi], each claim checked."""
    if d != 12:
        raise PreconditionError("the survey covers degree 12 only")
    if lo < SURVEY_MIN:
        raise PreconditionError(f"no 12-regular graph has fewer than 13 vertices (lo={lo})")
    if hi > SURVEY_MAX or lo > hi:
        raise PreconditionError(f"range must lie within [{SURVEY_MIN}, {SURVEY_MAX}]")
    rows = []
    for n in range(lo, hi + 1):
        if n <= 15:
            rows.append(_negative(n))
            continue
        name, g = _witness(n)
        prof = degree_profile(g)
        ok = prof.is_regular and prof.degree == 12 and g.order == n and is_nut(g).is_nut
        rows.append(SurveyRow(n, ok, name if ok else f"{name}:FAILED", g))
    return rows
