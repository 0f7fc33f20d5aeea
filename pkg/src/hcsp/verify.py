"""Separation predicates with witness certificates, plus minimality tests.

Three nested properties of a system on {1, ..., s}:

* separating: every 2-subset {a, b} is split by some block (|A & {a,b}| = 1);
* completely separating: for every ordered pair (a, b) some block contains
  a and misses b;
* hypercompletely separating (HCSP): every element a has a witness pair of
  blocks A, B with A & B = {a}; A = B is allowed only when A = {a}, so a
  singleton block witnesses its own element by itself.

Failure certificates are always the lexicographically least counterexample,
which keeps assertions on them deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .numerics import is_triangular, min_size
from .set_system import SetSystem


def _element_profiles(sys: SetSystem) -> list[int]:
    """profiles[a-1] = bitmask over block indices of the blocks containing a."""
    profs = [0] * sys.s
    for i, b in enumerate(sys.blocks):
        bit = 1 << i
        while b:
            low = b & -b
            profs[low.bit_length() - 1] |= bit
            b ^= low
    return profs


def separating_failure(sys: SetSystem) -> tuple[int, int] | None:
    """Least unsplit 2-subset, or None if the system is separating.

    {a, b} is split by some block iff a and b lie in different block sets.
    """
    profs = _element_profiles(sys)
    for a in range(1, sys.s + 1):
        pa = profs[a - 1]
        for b in range(a + 1, sys.s + 1):
            if pa == profs[b - 1]:
                return (a, b)
    return None


def is_separating(sys: SetSystem) -> bool:
    return separating_failure(sys) is None


def complete_separation_failure(sys: SetSystem) -> tuple[int, int] | None:
    """Least 2-subset {a, b} missing a block that contains exactly one of
    them in one of the two directions, or None."""
    profs = _element_profiles(sys)
    for a in range(1, sys.s + 1):
        pa = profs[a - 1]
        for b in range(a + 1, sys.s + 1):
            pb = profs[b - 1]
            if pa & ~pb == 0 or pb & ~pa == 0:
                return (a, b)
    return None


def is_completely_separating(sys: SetSystem) -> bool:
    return complete_separation_failure(sys) is None


def witness_map(sys: SetSystem) -> dict[int, list[tuple[int, int]]]:
    """For each witnessed element a, the sorted pairs (i, j), i <= j, of
    block indices with blocks[i] & blocks[j] == {a}.

    The degenerate pair (i, i) appears exactly when blocks[i] is the
    singleton {a}. Elements without any witness are absent.
    """
    wit: dict[int, list[tuple[int, int]]] = {}
    bl = sys.blocks
    n = len(bl)
    for i in range(n):
        bi = bl[i]
        if bi and bi & (bi - 1) == 0:
            wit.setdefault(bi.bit_length(), []).append((i, i))
        for j in range(i + 1, n):
            x = bi & bl[j]
            if x and x & (x - 1) == 0:
                wit.setdefault(x.bit_length(), []).append((i, j))
    return {a: sorted(ps) for a, ps in sorted(wit.items())}


def hcsp_failure(sys: SetSystem) -> int | None:
    """Least element without a witness pair, or None if the system is HCSP."""
    full = sys.full_mask
    covered = 0
    bl = sys.blocks
    n = len(bl)
    for i in range(n):
        bi = bl[i]
        if bi and bi & (bi - 1) == 0:
            covered |= bi
        for j in range(i + 1, n):
            x = bi & bl[j]
            if x and x & (x - 1) == 0:
                covered |= x
        if covered == full:
            return None
    missing = ~covered & full
    return (missing & -missing).bit_length()


def is_hcsp(sys: SetSystem) -> bool:
    return hcsp_failure(sys) is None


def removable_block(sys: SetSystem) -> int | None:
    """Least block index whose removal keeps the system HCSP.

    None when the system is not HCSP, or is HCSP with nothing removable.
    HCSP is upward closed, so single-block removal is a complete
    inclusion-minimality test.
    """
    if not is_hcsp(sys):
        return None
    for i in range(len(sys.blocks)):
        reduced = SetSystem(sys.s, sys.blocks[:i] + sys.blocks[i + 1:])
        if is_hcsp(reduced):
            return i
    return None


def is_inclusion_minimal_hcsp(sys: SetSystem) -> bool:
    """True iff the system is HCSP and no single block can be dropped."""
    return is_hcsp(sys) and removable_block(sys) is None


def is_size_minimal(sys: SetSystem) -> bool:
    """True iff the system is HCSP with the least possible block count for
    its ground size. The s = 1, 2 exceptions live in min_size, never here."""
    return len(sys.blocks) == min_size(sys.s) and is_hcsp(sys)


@dataclass(frozen=True)
class Classification:
    """Verdicts for one system, with the least failing certificate of the
    strongest property that fails (a 2-subset or an element)."""

    separating: bool
    completely_separating: bool
    hcsp: bool
    inclusion_minimal_hcsp: bool
    size_minimal: bool
    witnesses: dict[int, list[tuple[int, int]]] | None
    failing_pair: tuple[int, int] | None
    failing_element: int | None


def classify(sys: SetSystem, with_witnesses: bool = False) -> Classification:
    sep_fail = separating_failure(sys)
    csep_fail = complete_separation_failure(sys)
    h_fail = hcsp_failure(sys)
    hcsp = h_fail is None
    pair = sep_fail if sep_fail is not None else csep_fail
    return Classification(
        separating=sep_fail is None,
        completely_separating=csep_fail is None,
        hcsp=hcsp,
        inclusion_minimal_hcsp=hcsp and removable_block(sys) is None,
        size_minimal=hcsp and len(sys.blocks) == min_size(sys.s),
        witnesses=witness_map(sys) if with_witnesses else None,
        failing_pair=pair,
        failing_element=None if (hcsp or pair is not None) else h_fail,
    )


@dataclass(frozen=True)
class ExtremalReport:
    """Structure checks for a (k+1)-block system on alpha(k) points."""

    k: int
    one_witness_per_element: bool
    intersections_all_size_one: bool
    blocks_all_size_k: bool
    union_is_ground: bool
    intersection_empty: bool

    @property
    def ok(self) -> bool:
        return (self.one_witness_per_element and self.intersections_all_size_one
                and self.blocks_all_size_k and self.union_is_ground
                and self.intersection_empty)

    def failing(self) -> tuple[str, ...]:
        names = ("one_witness_per_element", "intersections_all_size_one",
                 "blocks_all_size_k", "union_is_ground", "intersection_empty")
        return tuple(n for n in names if not getattr(self, n))


def check_extremal_triangular(sys: SetSystem) -> ExtremalReport:
    """Verify the rigid structure forced on minimum systems at triangular
    ground sizes: unique witness pair per element, all pairwise block
    intersections of size one, all blocks of size k, blocks covering the
    ground set with empty total intersection.
    """
    k = is_triangular(sys.s)
    if k is None or k < 3:
        raise ValueError(f"ground size {sys.s} is not a triangular number alpha(k) with k >= 3")
    if len(sys.blocks) != k + 1:
        raise ValueError(f"expected k+1 = {k + 1} blocks on {sys.s} points, got {len(sys.blocks)}")

    wm = witness_map(sys)
    unique = len(wm) == sys.s and all(len(v) == 1 for v in wm.values())

    inter_ok = True
    bl = sys.blocks
    for i in range(len(bl)):
        for j in range(i + 1, len(bl)):
            x = bl[i] & bl[j]
            if x == 0 or x & (x - 1):
                inter_ok = False
                break
        if not inter_ok:
            break

    sizes_ok = all(b.bit_count() == k for b in bl)
    union = 0
    inter = sys.full_mask
    for b in bl:
        union |= b
        inter &= b
    return ExtremalReport(
        k=k,
        one_witness_per_element=unique,
        intersections_all_size_one=inter_ok,
        blocks_all_size_k=sizes_ok,
        union_is_ground=union == sys.full_mask,
        intersection_empty=inter == 0,
    )
