"""Systems of subsets of a finite ground set {1, ..., s}.

Blocks are stored as bit vectors (element i <-> bit i-1) inside plain Python
integers, which extend past 64 elements transparently. A SetSystem keeps its
blocks duplicate-free and sorted by numeric bit-vector value, so structural
equality, hashing and diffing need no ground-set permutation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product as iproduct
from typing import Iterable


def mask_of(elements: Iterable[int]) -> int:
    """Bit vector of a set of 1-based elements."""
    m = 0
    for e in elements:
        m |= 1 << (e - 1)
    return m


def elements_of(mask: int) -> tuple[int, ...]:
    """1-based elements of a bit vector, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


@dataclass(frozen=True)
class SetSystem:
    """A duplicate-free family of subsets of {1, ..., s}."""

    s: int
    blocks: tuple[int, ...]
    # Set by make() when the caller passed equal blocks; ignored by equality.
    duplicates_collapsed: bool = field(default=False, compare=False, repr=False)

    @property
    def full_mask(self) -> int:
        return (1 << self.s) - 1

    def block_elements(self) -> tuple[tuple[int, ...], ...]:
        return tuple(elements_of(b) for b in self.blocks)

    def __repr__(self) -> str:
        shown = ",".join("{" + ",".join(map(str, elements_of(b))) + "}" for b in self.blocks)
        return f"SetSystem(s={self.s}, blocks=[{shown}])"


def from_masks(s: int, masks: Iterable[int], collapsed: bool = False) -> SetSystem:
    """Build a system from raw bit vectors, collapsing duplicates."""
    if s < 1:
        raise ValueError(f"ground size must be positive, got {s}")
    full = (1 << s) - 1
    seen = set()
    had_dup = False
    for m in masks:
        if m < 0 or m & ~full:
            raise ValueError(f"block mask {m} outside ground set 1..{s}")
        if m in seen:
            had_dup = True
        seen.add(m)
    return SetSystem(s, tuple(sorted(seen)), duplicates_collapsed=collapsed or had_dup)


def make(s: int, blocks: Iterable[Iterable[int]]) -> SetSystem:
    """Validate and canonicalize a system given as element collections.

    Equal blocks are collapsed and flagged via duplicates_collapsed.
    """
    if s < 1:
        raise ValueError(f"ground size must be positive, got {s}")
    masks = []
    for blk in blocks:
        m = 0
        for e in blk:
            if not 1 <= e <= s:
                raise ValueError(f"element {e} out of range 1..{s}")
            m |= 1 << (e - 1)
        masks.append(m)
    uniq = sorted(set(masks))
    return SetSystem(s, tuple(uniq), duplicates_collapsed=len(uniq) < len(masks))


def restrict(sys: SetSystem, points: Iterable[int]) -> SetSystem:
    """Trace the system onto a non-empty point set and relabel.

    The new ground set is {1, ..., |points|} via the order-preserving
    bijection; equal traces collapse (set semantics).
    """
    pts = sorted(set(points))
    if not pts:
        raise ValueError("restriction set must be non-empty")
    if pts[0] < 1 or pts[-1] > sys.s:
        raise ValueError(f"restriction set not within 1..{sys.s}")
    pos = {p: i for i, p in enumerate(pts)}
    pts_mask = mask_of(pts)
    traces = set()
    for b in sys.blocks:
        t = b & pts_mask
        m = 0
        while t:
            low = t & -t
            m |= 1 << pos[low.bit_length()]
            t ^= low
        traces.add(m)
    return SetSystem(len(pts), tuple(sorted(traces)))


def complement_system(sys: SetSystem) -> SetSystem:
    """Replace every block by its complement in the ground set.

    Complementation is a bijection on blocks, so the block count is
    preserved exactly.
    """
    full = sys.full_mask
    return SetSystem(sys.s, tuple(sorted(full ^ b for b in sys.blocks)))


def disjoint_union(parts: list[SetSystem]) -> SetSystem:
    """Place the parts on consecutive element ranges and pool their blocks.

    Part i's elements are shifted by the total ground size of parts before
    it, so blocks from different parts stay distinct and the block count is
    the sum of the part counts. Parts containing the empty block are
    rejected: shifted copies of the empty block would collapse and break
    the count.
    """
    if not parts:
        raise ValueError("need at least one part")
    blocks = []
    offset = 0
    for i, part in enumerate(parts):
        if 0 in part.blocks:
            raise ValueError(f"part {i} contains the empty block")
        blocks.extend(b << offset for b in part.blocks)
        offset += part.s
    return SetSystem(offset, tuple(sorted(blocks)))


def product(parts: list[SetSystem]) -> SetSystem:
    """Blockwise Cartesian product over a mixed-radix flattening.

    The tuple (a_1, ..., a_k) of part elements maps to
    1 + sum (a_i - 1) * prod_{j > i} s_j, the last coordinate varying
    fastest. Every part needs at least one block and no empty block, which
    makes distinct block tuples give distinct product blocks, so the block
    count is the product of the part counts.
    """
    if not parts:
        raise ValueError("need at least one part")
    for i, part in enumerate(parts):
        if not part.blocks:
            raise ValueError(f"part {i} has no blocks")
        if 0 in part.blocks:
            raise ValueError(f"part {i} contains the empty block")
    sizes = [p.s for p in parts]
    radix = [1] * len(parts)
    for i in range(len(parts) - 2, -1, -1):
        radix[i] = radix[i + 1] * sizes[i + 1]
    ground = radix[0] * sizes[0]

    part_blocks = [p.block_elements() for p in parts]
    blocks = []
    for combo in iproduct(*part_blocks):
        m = 0
        for tup in iproduct(*combo):
            enc = 1 + sum((a - 1) * r for a, r in zip(tup, radix))
            m |= 1 << (enc - 1)
        blocks.append(m)
    return SetSystem(ground, tuple(sorted(blocks)))


def p_k(s: int, k: int) -> SetSystem:
    """The uniform system of all C(s, k) subsets of size k."""
    if s < 1:
        raise ValueError(f"ground size must be positive, got {s}")
    if not 0 <= k <= s:
        raise ValueError(f"k must lie in 0..{s}, got {k}")
    masks = [mask_of(c) for c in combinations(range(1, s + 1), k)]
    return SetSystem(s, tuple(sorted(masks)))
