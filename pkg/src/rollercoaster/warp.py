"""Warping degrees of based knot diagrams.

A traversal from a basepoint meets each crossing twice.  The crossings
whose first passage runs under form the below-set; the warping degree of
the based diagram is the size of that set.  Changing every below-set
crossing makes the diagram descending from that basepoint, which unknots
it, so the warping degree bounds the unknotting moves spent by the
traversal and the minimum over basepoints bounds the ascending number of
the underlying knot from above.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import Basepoint, GaussCode, OVER, UNDER


@dataclass(frozen=True)
class WarpResult:
    base: Basepoint
    below: frozenset[int]
    above: frozenset[int]

    @property
    def degree(self) -> int:
        return len(self.below)


def traversal(code: GaussCode, base: Basepoint) -> list[int]:
    """Passage indices in the order the based traversal meets them."""
    n = len(code.passages)
    if not 0 <= base.edge < n:
        raise ValueError(f"basepoint edge {base.edge} out of range for {n} passages")
    if base.forward:
        return [(base.edge + k) % n for k in range(n)]
    return [(base.edge - 1 - k) % n for k in range(n)]


def warp_from(code: GaussCode, base: Basepoint) -> WarpResult:
    below, above, seen = set(), set(), set()
    for pos in traversal(code, base):
        ident, role = code.passages[pos]
        if ident in seen:
            continue
        seen.add(ident)
        (below if role == UNDER else above).add(ident)
    return WarpResult(base, frozenset(below), frozenset(above))


def warp_profile(code: GaussCode, forward: bool = True) -> list[int]:
    """Warping degree at every edge basepoint, one traversal direction."""
    return [warp_from(code, Basepoint(e, forward)).degree for e in range(len(code.passages))]


def min_warp(code: GaussCode) -> WarpResult:
    """Minimal warping degree over all basepoints and both directions.

    Ties go to the smallest edge index, forward before backward.
    """
    best = None
    for edge in range(len(code.passages)):
        for forward in (True, False):
            result = warp_from(code, Basepoint(edge, forward))
            if best is None or result.degree < best.degree:
                best = result
    if best is None:
        raise ValueError("empty Gauss sequence has no basepoint")
    return best


def apply_roller_coaster(code: GaussCode, base: Basepoint) -> GaussCode:
    """Change every below-set crossing, making the diagram descending
    from ``base``: its warping degree there drops to zero."""
    below = warp_from(code, base).below
    flipped = tuple(
        (i, (UNDER if r == OVER else OVER) if i in below else r) for i, r in code.passages
    )
    return GaussCode(flipped)
