"""Minimal graded Betti numbers via Hochster's formula.

beta_{i,a}(I) = sum over |W| = a of dim H~_{a-i-2}(Gamma[W]). A subset W is
a cone (so contributes nothing) unless every vertex of W lies in an edge
inside W, i.e. unless W is a union of edges. The pruned sum therefore runs
over the lcm lattice of the generators. Supports with few edges inside are
computed on a small nerve instead of on Gamma[W] itself.
"""

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from itertools import combinations, repeat

import config
from errors import TooManyVertices
from hypercomb.bits import low_bits, mask_of
from hypercomb.hypergraph import Hypergraph
from homology.field import QQ, FieldSpec
from homology.reduced import homology_of_masks
from betti.table import BettiKind, BettiTable
from observability import span

# below this many supports the pool costs more than it saves
PARALLEL_THRESHOLD = 2048


@lru_cache(maxsize=32)
def lcm_lattice(masks: tuple[int, ...]) -> tuple[int, ...]:
    """Distinct unions of nonempty sets of edges, ordered by size then value."""
    unions: set[int] = set()
    for m in masks:
        unions |= {m | u for u in unions}
        unions.add(m)
    return tuple(sorted(unions, key=lambda u: (u.bit_count(), u)))


def candidate_supports(G: Hypergraph, a: int | None = None, prune: bool = True) -> list[int]:
    """Vertex subsets (as masks) Hochster's sum visits, of size `a` or of every size."""
    if prune:
        lattice = lcm_lattice(G.masks)
        return [w for w in lattice if a is None or w.bit_count() == a]
    sizes = range(G.n + 1) if a is None else [a]
    return [mask_of(W) for size in sizes for W in combinations(range(1, G.n + 1), size)]


def _minimal_covers(w: int, inside: list[int]) -> list[int]:
    """Inclusion-minimal sets S of edges (bit k for inside[k]) whose union is w."""
    k = len(inside)
    unions = [0] * (1 << k)
    covers = []
    for S in range(1, 1 << k):
        low = S & -S
        unions[S] = unions[S ^ low] | inside[low.bit_length() - 1]
        if unions[S] != w:
            continue
        if all(unions[S ^ bit] != w for bit in low_bits(S)):
            covers.append(S)
    return covers


def support_homology(w: int, masks: tuple[int, ...], field: FieldSpec = QQ, reduce: bool = True) -> dict[int, int]:
    """Nonzero dims of H~_p(Gamma[W]), keyed by p.

    With `reduce`, a support holding fewer edges than vertices is handled on
    the nerve N of the facets of the Alexander dual: one vertex per edge inside
    W, a face for every edge set whose union is not W. Alexander duality and
    the nerve lemma give dim H~_p(Gamma[W]) = dim H~_{|W|-p-3}(N).
    """
    inside = [m for m in masks if not m & ~w]
    a = w.bit_count()
    if not reduce or not inside or len(inside) >= a:
        return homology_of_masks(w, masks, field, reduce=reduce)
    nerve = homology_of_masks((1 << len(inside)) - 1, _minimal_covers(w, inside), field)
    return {a - q - 3: dim for q, dim in nerve.items()}


def _count_supports(
    masks: tuple[int, ...],
    supports: list[int],
    field: FieldSpec,
    reduce: bool,
) -> dict[tuple[int, int], int]:
    counts: Counter[tuple[int, int]] = Counter()
    for w in supports:
        a = w.bit_count()
        for p, dim in support_homology(w, masks, field, reduce).items():
            i = a - p - 2
            if i >= 0:
                counts[(i, a)] += dim
    return dict(counts)


def hochster_graded_betti(
    G: Hypergraph,
    i: int,
    a: int,
    field: FieldSpec = QQ,
    prune: bool = True,
    reduce: bool = True,
) -> int:
    """beta_{i,a}(I(G)) over `field`; 0 for out-of-range indices."""
    if i < 0 or not 0 <= a <= G.n or a - i - 2 < -1:
        return 0
    counts = _count_supports(G.masks, candidate_supports(G, a, prune), field, reduce)
    return counts.get((i, a), 0)


def betti_table(
    G: Hypergraph,
    field: FieldSpec = QQ,
    prune: bool = True,
    reduce: bool = True,
    workers: int | None = None,
    max_vertices: int | None = None,
) -> BettiTable:
    """The full minimal Betti table of I(G).

    Supports are split into fixed chunks and fanned out to worker processes;
    partial counts are summed, so the table does not depend on `workers`.
    """
    cap = config.MAX_VERTICES if max_vertices is None else max_vertices
    size = len(G.support) if prune else G.n
    if size > cap:
        raise TooManyVertices(f"{size} vertices exceeds the Hochster cap {cap}")
    workers = config.THREADS if workers is None else workers
    supports = candidate_supports(G, prune=prune)

    with span("betti_table", n=G.n, t=G.t, field=field.label, supports=len(supports)):
        if workers > 1 and len(supports) >= PARALLEL_THRESHOLD:
            step = max(64, len(supports) // (4 * workers))
            chunks = [supports[k : k + step] for k in range(0, len(supports), step)]
            counts: Counter[tuple[int, int]] = Counter()
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for part in pool.map(_count_supports, repeat(G.masks), chunks, repeat(field), repeat(reduce)):
                    counts.update(part)
        else:
            counts = Counter(_count_supports(G.masks, supports, field, reduce))
    return BettiTable.from_counts(BettiKind.MINIMAL, G.n, counts, field)
