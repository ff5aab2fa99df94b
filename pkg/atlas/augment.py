"""Isomorph-free enumeration of pure hypergraphs by canonical augmentation.

Level k + 1 is built from the classes of level k. A child P + e is kept
only when deleting the child's canonical last edge gives back P's class, so
each class has exactly one parent class; children of one parent are then
deduplicated by canonical form. Vertices not in any edge are never created.
"""

import time
from collections.abc import Callable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, repeat

import config
from errors import BadParams, BudgetExceeded
from hypercomb.hypergraph import Hypergraph, make_hypergraph
from atlas.canonical import canonical_form, canonical_labeling, canonical_relabel
from observability import log_info, span

Predicate = Callable[[Hypergraph], bool]
Progress = Callable[[int, int], None]


@dataclass(frozen=True)
class SearchClass:
    """One isomorphism class: its canonical form and canonical representative."""

    form: bytes
    graph: Hypergraph


def candidate_edges(G: Hypergraph, d: int, max_vertices: int) -> Iterator[frozenset[int]]:
    """New d-sets over vertices 1..n plus the next fresh vertices n+1, n+2, ..."""
    existing = set(G.edges)
    for fresh in range(d + 1):
        if G.n + fresh > max_vertices:
            break
        new = frozenset(range(G.n + 1, G.n + fresh + 1))
        for old in combinations(range(1, G.n + 1), d - fresh):
            edge = new | frozenset(old)
            if edge not in existing:
                yield edge


def _without(G: Hypergraph, k: int) -> Hypergraph:
    """G minus its k-th edge, with the vertices left uncovered removed."""
    edges = G.edges[:k] + G.edges[k + 1 :]
    support = sorted(frozenset().union(*edges)) if edges else []
    index = {v: i for i, v in enumerate(support, start=1)}
    return make_hypergraph(len(support), [{index[v] for v in e} for e in edges])


def expand(
    parent: Hypergraph,
    d: int,
    max_vertices: int,
    predicate: Predicate | None = None,
) -> tuple[int, list[SearchClass]]:
    """Canonical children of one parent class. Returns (children examined, accepted)."""
    parent_form = canonical_form(parent)
    seen: dict[bytes, SearchClass] = {}
    visited = 0
    for edge in candidate_edges(parent, d, max_vertices):
        visited += 1
        n = max(parent.n, max(edge))
        child = make_hypergraph(n, [*parent.edges, edge])
        if predicate is not None and not predicate(child):
            continue
        labeling = canonical_labeling(child)
        if labeling.form in seen:
            continue
        if canonical_form(_without(child, labeling.last_edge)) != parent_form:
            continue
        seen[labeling.form] = SearchClass(labeling.form, canonical_relabel(child))
    return visited, list(seen.values())


def _seed(d: int, predicate: Predicate | None) -> list[SearchClass]:
    G = make_hypergraph(d, [range(1, d + 1)])
    if predicate is not None and not predicate(G):
        return []
    return [SearchClass(canonical_form(G), G)]


def enumerate_levels(
    d: int,
    t: int,
    max_vertices: int | None = None,
    budget: int | None = None,
    predicate: Predicate | None = None,
    progress: Progress | None = None,
    workers: int = 1,
) -> dict[int, list[SearchClass]]:
    """Classes with 1..t edges, each level sorted by canonical form.

    `budget` bounds the number of children examined; BudgetExceeded carries the
    partial counts. Parents are farmed out to worker processes when workers > 1.
    """
    if d < 1 or t < 1:
        raise BadParams(f"need d >= 1 and t >= 1, got d={d}, t={t}")
    cap = d * t if max_vertices is None else min(max_vertices, d * t)
    if cap < d:
        raise BadParams(f"max_vertices {max_vertices} is smaller than the edge size {d}")
    limit = config.SEARCH_BUDGET if budget is None else budget

    levels = {1: _seed(d, predicate)}
    visited = 0
    last_report = time.monotonic()
    with span("enumerate_pure_hypergraphs", d=d, t=t, max_vertices=cap, workers=workers):
        for k in range(2, t + 1):
            found: dict[bytes, SearchClass] = {}
            parents = [c.graph for c in levels[k - 1]]
            if workers > 1 and len(parents) > 1:
                with ProcessPoolExecutor(max_workers=workers) as pool:
                    results = list(pool.map(expand, parents, repeat(d), repeat(cap), repeat(predicate)))
            else:
                results = (expand(p, d, cap, predicate) for p in parents)
            for count, children in results:
                visited += count
                for child in children:
                    found.setdefault(child.form, child)
                if visited > limit:
                    raise BudgetExceeded(
                        f"node budget {limit} exhausted at level {k}",
                        visited=visited,
                        found=len(found),
                    )
                if progress is not None and time.monotonic() - last_report >= config.PROGRESS_INTERVAL:
                    progress(visited, len(found))
                    last_report = time.monotonic()
            levels[k] = [found[form] for form in sorted(found)]
            log_info("enumeration level", level=k, classes=len(levels[k]), visited=visited)
    return levels


def enumerate_pure_hypergraphs(
    d: int,
    t: int,
    max_vertices: int | None = None,
    budget: int | None = None,
    predicate: Predicate | None = None,
    progress: Progress | None = None,
    workers: int = 1,
) -> Iterator[Hypergraph]:
    """One representative per isomorphism class of t distinct d-sets, in canonical order."""
    levels = enumerate_levels(d, t, max_vertices, budget, predicate, progress, workers)
    for cls in levels[t]:
        yield cls.graph
