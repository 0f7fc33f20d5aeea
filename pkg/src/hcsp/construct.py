"""Size-minimal HCSP systems for every ground size.

Three sources, stitched together by construct_min:

* a hardcoded catalog of all size-minimal systems (up to isomorphism) for
  s = 1..6, with the complement partner bookkeeping;
* the inductive extension step that turns the extremal system on alpha(k)
  points into the one on alpha(k+1) points;
* restriction to an initial segment for the sizes strictly between two
  triangular numbers.

pair_system builds the same extremal systems by an unrelated closed form
(stars of a complete graph) and exists purely as a cross-check oracle for
the inductive path.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .numerics import alpha, is_triangular, tau
from .set_system import SetSystem, make, restrict
from .verify import check_extremal_triangular


@dataclass(frozen=True)
class CatalogEntry:
    """All size-minimal systems on s points up to isomorphism (s <= 6).

    complement_partners maps a representative index to the index whose
    system is isomorphic to its complement system; indices absent from the
    map have complements that are not HCSP at all.
    """

    s: int
    representatives: tuple[SetSystem, ...]
    complement_partners: dict[int, int]


def _sys(s: int, *blocks) -> SetSystem:
    return make(s, blocks)


@lru_cache(maxsize=None)
def base_catalog(s: int) -> CatalogEntry:
    """The complete small-case classification, one entry per ground size."""
    if s == 1:
        # complement {{}} is not HCSP, hence no partner
        return CatalogEntry(1, (_sys(1, [1]),), {})
    if s == 2:
        return CatalogEntry(2, (_sys(2, [1], [2]),), {0: 0})
    if s == 3:
        return CatalogEntry(
            3,
            (_sys(3, [1], [2], [3]), _sys(3, [1, 2], [1, 3], [2, 3])),
            {0: 1, 1: 0},
        )
    if s == 4:
        reps = (
            _sys(4, [1], [2], [3], [4]),
            _sys(4, [1], [2, 3], [2, 4], [3, 4]),
            _sys(4, [1, 2], [1, 3], [2, 4], [3, 4]),
            _sys(4, [1], [2, 3], [3, 4], [1, 2, 4]),
            _sys(4, [1, 2], [1, 3], [1, 4], [2, 3, 4]),
        )
        # all-singletons complement is the 3-uniform system, not HCSP
        return CatalogEntry(4, reps, {1: 4, 2: 2, 3: 3, 4: 1})
    if s == 5:
        return CatalogEntry(5, (_sys(5, [1, 2, 3], [1, 4, 5], [2, 4], [3, 5]),), {0: 0})
    if s == 6:
        return CatalogEntry(
            6, (_sys(6, [1, 2, 3], [1, 4, 5], [2, 4, 6], [3, 5, 6]),), {0: 0}
        )
    raise ValueError(f"catalog covers ground sizes 1..6, got {s}")


def _extend_step(sys: SetSystem, k: int) -> SetSystem:
    # block i (stored order) gains new element s+i+1; one fresh block holds
    # all k+1 new elements. Adding distinct high bits preserves the stored
    # order, so the output is bit-reproducible.
    s = sys.s
    blocks = [b | (1 << (s + i)) for i, b in enumerate(sys.blocks)]
    blocks.append(((1 << (k + 1)) - 1) << s)
    return SetSystem(s + k + 1, tuple(blocks))


def extend_triangular(sys: SetSystem) -> SetSystem:
    """Extend an extremal system on alpha(k) points to one on alpha(k+1).

    Each existing block gains one fresh element and a single new block
    collects all k+1 fresh elements, giving k+2 blocks of size k+1.
    """
    k = is_triangular(sys.s)
    if k is None or k < 3:
        raise ValueError(f"ground size {sys.s} is not a triangular number alpha(k) with k >= 3")
    if len(sys.blocks) != k + 1:
        raise ValueError(f"expected k+1 = {k + 1} blocks on {sys.s} points, got {len(sys.blocks)}")
    report = check_extremal_triangular(sys)
    if not report.ok:
        raise ValueError(f"not an extremal system, failing checks: {', '.join(report.failing())}")
    return _extend_step(sys, k)


def pair_system(m: int) -> SetSystem:
    """Stars of the complete graph on m vertices, as a system on the
    C(m, 2) vertex pairs under their lexicographic numbering.

    Block i consists of all pairs containing vertex i; two blocks meet in
    exactly the one pair naming both vertices. Independent closed form for
    the extremal system on alpha(m-1) points.
    """
    if m < 4:
        raise ValueError(f"m must be at least 4, got {m}")
    number = {pair: n for n, pair in enumerate(combinations(range(1, m + 1), 2), start=1)}
    blocks = []
    for v in range(1, m + 1):
        blocks.append([number[(min(v, w), max(v, w))] for w in range(1, m + 1) if w != v])
    return make(alpha(m - 1), blocks)


@lru_cache(maxsize=None)
def _extremal_triangular(k: int) -> SetSystem:
    """The extremal (k+1)-block system on alpha(k) points, k >= 3, built by
    iterating the extension step from the 6-point catalog system."""
    sys = base_catalog(6).representatives[0]
    for j in range(3, k):
        sys = _extend_step(sys, j)
    return sys


def construct_min(s: int) -> SetSystem:
    """A size-minimal HCSP system on s points.

    Catalog representative for s <= 6 (first entry where several classes
    exist). For larger s, build the extremal system on the least triangular
    number alpha(k) >= s and restrict it to the lowest s elements; any
    restriction of the right size works, the fixed choice keeps the output
    deterministic.
    """
    if s < 1:
        raise ValueError(f"ground size must be positive, got {s}")
    if s <= 6:
        return base_catalog(s).representatives[0]
    k = tau(s) - 1  # alpha(k-1) < s <= alpha(k)
    big = _extremal_triangular(k)
    if big.s == s:
        return big
    return restrict(big, range(1, s + 1))
