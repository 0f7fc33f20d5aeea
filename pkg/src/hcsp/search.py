"""Brute-force ground truth: minimum-size oracle, exhaustive enumeration of
minimum systems up to isomorphism, canonical labeling, and isomorphism
search.

Candidate blocks are the non-empty subsets of {1..s} in increasing
bit-vector order; combinations of them are scanned in lexicographic order,
so every result is deterministic. The empty block is excluded up front: it
intersects nothing in a singleton, so a minimum HCSP system never contains
it and dropping it preserves completeness.

The scan prunes a prefix of j blocks with r picks left using facts about
where the missing witnesses could still come from (each pair of blocks
witnesses at most one element):

* capacity: at most j*r pairs (old, new), C(r, 2) pairs (new, new) and r
  singleton self-pairs can still appear, so more uncovered elements than
  that kills the prefix;
* outside: an element in no chosen block can only be witnessed by two new
  blocks or a new singleton, giving the tighter cap C(r, 2) + r for the
  uncovered elements outside the union;
* last pick (r = 1): an uncovered element a outside the union forces the
  final block to be exactly {a}, which covers nothing else; and when all
  uncovered elements U lie inside the union, a final block B covering them
  needs A_i & B = {a} for some chosen A_i per a in U, which forces
  U subset B and hence A_i & U = {a}; if some a in U has no chosen block
  with A_i & U = {a}, no final block exists.

All rules only ever discard prefixes with no completion, never completions.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations

from .numerics import min_size
from .set_system import SetSystem


class BudgetExceededError(RuntimeError):
    """A search hit its explicit budget; results are never silently truncated."""


@dataclass(frozen=True)
class SearchBudget:
    max_ground_size: int
    max_candidates: int = 50_000_000
    parallel_chunks: int = 1

    def __post_init__(self):
        if self.max_ground_size < 1 or self.max_candidates < 1 or self.parallel_chunks < 1:
            raise ValueError("budget fields must be positive")


ORACLE_BUDGET = SearchBudget(max_ground_size=7)
ISO_BUDGET = SearchBudget(max_ground_size=8, max_candidates=5_000_000)


def _check_ground(s: int, budget: SearchBudget) -> None:
    if s < 1:
        raise ValueError(f"ground size must be positive, got {s}")
    if s > budget.max_ground_size:
        raise BudgetExceededError(
            f"ground size {s} exceeds the search budget of {budget.max_ground_size}"
        )


def _scan_combinations(s, m, max_candidates, on_hit, stop_first, lo=0, hi=None):
    """DFS over m-combinations of non-empty blocks, lex order, pruned.

    First-block indices are limited to [lo, hi) so the space can be split
    into contiguous chunks. Returns the number of extension attempts; raises
    BudgetExceededError past max_candidates.
    """
    full = (1 << s) - 1
    masks = list(range(1, 1 << s))
    n = len(masks)
    if hi is None:
        hi = n
    nodes = 0

    def rec(start, end, chosen, covered, union):
        nonlocal nodes
        j = len(chosen)
        r = m - j  # picks remaining at this level, >= 1
        for idx in range(start, min(end, n - r + 1)):
            nodes += 1
            if nodes > max_candidates:
                raise BudgetExceededError(
                    f"combination scan exceeded {max_candidates} candidates"
                )
            b = masks[idx]
            cov = covered
            for a in chosen:
                x = a & b
                if x and x & (x - 1) == 0:
                    cov |= x
            if b & (b - 1) == 0:
                cov |= b
            if r == 1:
                if cov == full:
                    on_hit(chosen + (b,))
                    if stop_first:
                        return True
                continue
            uni = union | b
            unc_mask = full & ~cov
            if unc_mask:
                rr = r - 1
                jj = j + 1
                unc = unc_mask.bit_count()
                if unc > jj * rr + rr * (rr - 1) // 2 + rr:
                    continue
                out = (unc_mask & ~uni).bit_count()
                if out > rr * (rr - 1) // 2 + rr:
                    continue
                if rr == 1:
                    if out == 1:
                        if unc >= 2:
                            continue
                    elif out == 0:
                        witnessable = 0
                        for a in chosen:
                            x = a & unc_mask
                            if x and x & (x - 1) == 0:
                                witnessable |= x
                        x = b & unc_mask
                        if x and x & (x - 1) == 0:
                            witnessable |= x
                        if witnessable != unc_mask:
                            continue
            if rec(idx + 1, n, chosen + (b,), cov, uni):
                return True
        return False

    rec(lo, hi, (), 0, 0)
    return nodes


def min_hcsp_size_oracle(s: int, budget: SearchBudget | None = None) -> int:
    """Smallest m such that some m-subset of the non-empty blocks is HCSP,
    by scanning block counts upward. Independent of every closed form."""
    budget = budget or ORACLE_BUDGET
    _check_ground(s, budget)
    for m in range(1, s + 1):  # the singleton system gives m <= s
        found = []
        _scan_combinations(s, m, budget.max_candidates, found.append, stop_first=True)
        if found:
            return m
    raise AssertionError("unreachable: the all-singletons system is HCSP")


def canonical_form(sys: SetSystem, budget: SearchBudget | None = None) -> SetSystem:
    """Relabel the ground set to minimize the sorted block list, compared as
    integer sequences. Exact minimum over all s! permutations, so equal
    canonical forms are exactly the isomorphic systems."""
    budget = budget or ISO_BUDGET
    _check_ground(sys.s, budget)
    if not sys.blocks:
        return sys
    bits = [tuple(i for i in range(sys.s) if b >> i & 1) for b in sys.blocks]
    best = None
    for perm in permutations(range(sys.s)):
        key = sorted(sum(1 << perm[i] for i in bs) for bs in bits)
        if best is None or key < best:
            best = key
    return SetSystem(sys.s, tuple(best))


def _enumerate_chunk(s, m, lo, hi, max_candidates, max_ground_size):
    forms = set()
    budget = SearchBudget(max_ground_size=max_ground_size, max_candidates=max_candidates)

    def hit(combo):
        forms.add(canonical_form(SetSystem(s, combo), budget).blocks)

    _scan_combinations(s, m, max_candidates, hit, stop_first=False, lo=lo, hi=hi)
    return forms


def enumerate_min_classes(s: int, budget: SearchBudget | None = None) -> list[SetSystem]:
    """All HCSP systems with exactly min_size(s) blocks, one canonical
    representative per isomorphism class, sorted by block list."""
    budget = budget or ORACLE_BUDGET
    _check_ground(s, budget)
    m = min_size(s)
    n = (1 << s) - 1
    chunks = min(budget.parallel_chunks, n)
    if chunks == 1:
        forms = _enumerate_chunk(s, m, 0, n, budget.max_candidates, budget.max_ground_size)
    else:
        bounds = [n * i // chunks for i in range(chunks + 1)]
        args = [
            (s, m, bounds[i], bounds[i + 1], budget.max_candidates, budget.max_ground_size)
            for i in range(chunks)
        ]
        forms = set()
        with ProcessPoolExecutor(max_workers=min(chunks, os.cpu_count() or 1)) as pool:
            for part in pool.map(_enumerate_chunk, *zip(*args)):
                forms |= part
    return [SetSystem(s, f) for f in sorted(forms)]


def are_isomorphic(a: SetSystem, b: SetSystem, budget: SearchBudget | None = None) -> dict[int, int] | None:
    """Search for a ground-set bijection carrying a's blocks onto b's.

    Backtracks over block correspondences (block sizes and pairwise
    intersection sizes must match), then checks that the element incidence
    signatures pair up class by class; any signature-preserving element map
    is a valid bijection. Returns the bijection as a dict, or None.
    """
    budget = budget or ISO_BUDGET
    _check_ground(a.s, budget)
    _check_ground(b.s, budget)
    if a.s != b.s or len(a.blocks) != len(b.blocks):
        return None
    nb = len(a.blocks)
    sizes_a = [x.bit_count() for x in a.blocks]
    sizes_b = [x.bit_count() for x in b.blocks]
    if sorted(sizes_a) != sorted(sizes_b):
        return None

    inter_a = [[(a.blocks[i] & a.blocks[j]).bit_count() for j in range(nb)] for i in range(nb)]
    inter_b = [[(b.blocks[i] & b.blocks[j]).bit_count() for j in range(nb)] for i in range(nb)]

    def signatures(sys):
        sig = [0] * sys.s
        for i, blk in enumerate(sys.blocks):
            bit = 1 << i
            while blk:
                low = blk & -blk
                sig[low.bit_length() - 1] |= bit
                blk ^= low
        return sig

    sig_a = signatures(a)
    sig_b = signatures(b)
    count_b = Counter(sig_b)
    nodes = 0
    pi = [-1] * nb
    used = [False] * nb

    def element_map():
        mapped = []
        for sg in sig_a:
            msg = 0
            g = sg
            while g:
                low = g & -g
                msg |= 1 << pi[low.bit_length() - 1]
                g ^= low
            mapped.append(msg)
        if Counter(mapped) != count_b:
            return None
        groups_b: dict[int, list[int]] = {}
        for e in range(a.s, 0, -1):
            groups_b.setdefault(sig_b[e - 1], []).append(e)
        out = {}
        for e in range(1, a.s + 1):
            out[e] = groups_b[mapped[e - 1]].pop()
        return out

    def backtrack(i):
        nonlocal nodes
        if i == nb:
            return element_map()
        for t in range(nb):
            if used[t] or sizes_b[t] != sizes_a[i]:
                continue
            nodes += 1
            if nodes > budget.max_candidates:
                raise BudgetExceededError(
                    f"isomorphism search exceeded {budget.max_candidates} candidates"
                )
            ok = True
            for j in range(i):
                if inter_b[pi[j]][t] != inter_a[j][i]:
                    ok = False
                    break
            if not ok:
                continue
            pi[i] = t
            used[t] = True
            res = backtrack(i + 1)
            if res is not None:
                return res
            used[t] = False
            pi[i] = -1
        return None

    result = backtrack(0)
    if result is None:
        return None
    # paranoia: the returned map must carry the block family exactly
    remapped = set()
    for blk in a.blocks:
        m = 0
        while blk:
            low = blk & -blk
            m |= 1 << (result[low.bit_length()] - 1)
            blk ^= low
        remapped.add(m)
    assert remapped == set(b.blocks)
    return result
