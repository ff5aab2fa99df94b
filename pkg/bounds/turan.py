"""Exact Turan numbers at brute-force scale."""

from functools import lru_cache
from itertools import combinations
from math import ceil, comb

from errors import BadParams, TooLarge
from hypercomb.bits import mask_of

MAX_TURAN_N = 12


class _OutOfBudget(Exception):
    pass


def turan_upper_bound(n: int, k: int, l: int) -> int:
    """Size of the block construction: split [n] into floor((k-1)/(l-1)) near-equal
    parts and take every l-subset inside a part.

    A k-set meets some part in at least l vertices, so it contains one of them.
    """
    if k > n:
        return 0
    if l == 1:
        return n - k + 1
    parts = (k - 1) // (l - 1)
    q, r = divmod(n, parts)
    return r * comb(q + 1, l) + (parts - r) * comb(q, l)


@lru_cache(maxsize=None)
def _turan(n: int, k: int, l: int, budget: int | None) -> int:
    if k > n:
        return 0
    upper = turan_upper_bound(n, k, l)
    # averaging over the n vertex-deleted subfamilies: T(n) >= n T(n-1) / (n - l)
    lower = ceil(n * _turan(n - 1, k, l, budget) / (n - l)) if n > l else 1
    if lower >= upper:
        return upper

    ksets = [mask_of(c) for c in combinations(range(1, n + 1), k)]
    lsets = [mask_of(c) for c in combinations(range(1, n + 1), l)]
    # covers[x]: bit y set when l-set x lies inside k-set y
    covers = [sum(1 << y for y, K in enumerate(ksets) if L & K == L) for L in lsets]
    inside = [[x for x, L in enumerate(lsets) if L & K == L] for K in ksets]
    full = (1 << len(ksets)) - 1
    best = upper
    nodes = 0

    def search(covered: int, used: int) -> bool:
        """True once a cover of size `lower` is found, which cannot be beaten."""
        nonlocal best, nodes
        nodes += 1
        if budget is not None and nodes > budget:
            raise _OutOfBudget
        if covered == full:
            best = used
            return best <= lower
        uncovered = full & ~covered
        gain = max((c & uncovered).bit_count() for c in covers)
        if used + ceil(uncovered.bit_count() / gain) >= best:
            return False
        first = (uncovered & -uncovered).bit_length() - 1
        for x in inside[first]:
            if search(covered | covers[x], used + 1):
                return True
        return False

    # every l-set is equivalent under relabeling, so the first pick is fixed
    try:
        search(covers[0], 1)
    except _OutOfBudget:
        raise TooLarge(f"T({n},{k},{l}) needs more than {budget} search nodes") from None
    return best


def turan_number(n: int, k: int, l: int, max_n: int = MAX_TURAN_N, budget: int | None = None) -> int:
    """T(n, k, l): fewest l-subsets of [n] such that every k-subset contains one.

    Values come from the block construction whenever the averaging lower bound
    meets it; otherwise branch and bound always covers the first uncovered
    k-set, cut by a counting bound on what remains. `budget` caps the nodes of
    each such search.
    """
    if l < 1 or k < l:
        raise BadParams(f"need 1 <= l <= k, got k={k}, l={l}")
    if n > max_n:
        raise TooLarge(f"T({n},{k},{l}) is beyond brute force (n <= {max_n})")
    return _turan(n, k, l, budget)
