"""Bitmask helpers. Vertex v (1-based) lives in bit v - 1."""

from collections.abc import Iterable, Iterator


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << (v - 1)
    return mask


def vertices_of(mask: int) -> Iterator[int]:
    """Yield the 1-based vertices of `mask` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length()
        mask ^= low


def low_bits(mask: int) -> Iterator[int]:
    """Yield the single-bit masks of `mask`, lowest first."""
    while mask:
        low = mask & -mask
        yield low
        mask ^= low


def minimal_masks(masks: Iterable[int]) -> list[int]:
    """Inclusion-minimal, deduplicated masks, ordered by (size, value)."""
    ordered = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    kept: list[int] = []
    for m in ordered:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept
