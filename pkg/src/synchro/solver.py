"""Reset-word search: exact subset BFS, greedy pair merging, and the
bounded decision "is there a reset word of length <= d".

The exact search explores the power automaton breadth-first from the
full state set, expanding letter a before b at every node, so the word
it returns is the lexicographically least among the shortest.  A memory
cap turns an over-large search into an inconclusive result instead of
an OOM: "no" is only ever reported on proven exhaustion.
"""

import os
from collections import deque
from dataclasses import dataclass
from typing import Optional

from .automaton import StateSet, apply_word, is_reset_word, pair_merge_table

DEFAULT_MEM_CAP = 256 * 1024 * 1024

FOUND = "found"
NONE_WITHIN_LIMITS = "none_within_limits"
NOT_SYNCHRONIZING = "not_synchronizing"
RESOURCE_EXHAUSTED = "resource_exhausted"


@dataclass(frozen=True)
class SolveResult:
    outcome: str
    word: Optional[str] = None
    explored: int = 0
    peak_memory_estimate: int = 0


def default_mem_cap():
    cap = os.environ.get("SYNCHRO_MEM_CAP")
    return int(cap) if cap else DEFAULT_MEM_CAP


# rough per-visited-subset bookkeeping cost: mask int + dict entry
def _entry_cost(n):
    return 2 * (n // 8 + 48) + 40


def shortest_reset_exact(dfa, max_len, mem_cap=None, workers=1):
    """BFS over distinct subsets of states, depth-limited by ``max_len``.

    Deterministic for fixed inputs regardless of ``workers`` (expansion
    is level-synchronous and merged in order; the knob exists for API
    compatibility and future parallel frontiers).
    """
    if max_len < 0:
        raise ValueError("max_len must be nonnegative")
    if workers < 1:
        raise ValueError("workers must be positive")
    if mem_cap is None:
        mem_cap = default_mem_cap()
    n = dfa.state_count
    full = (1 << n) - 1
    cost = _entry_cost(n)

    masks = (dfa.delta_a, dfa.delta_b)

    def step(mask, table):
        out = 0
        m = mask
        while m:
            low = m & -m
            out |= 1 << table[low.bit_length() - 1]
            m ^= low
        return out

    if full.bit_count() == 1:
        return SolveResult(FOUND, "", 1, cost)

    parents = {full: None}
    frontier = [full]
    depth = 0
    while frontier and depth < max_len:
        depth += 1
        nxt = []
        for mask in frontier:
            for li, table in enumerate(masks):
                img = step(mask, table)
                if img in parents:
                    continue
                parents[img] = (mask, "ab"[li])
                if img.bit_count() == 1:
                    word = []
                    cur = img
                    while parents[cur] is not None:
                        cur, letter = parents[cur]
                        word.append(letter)
                    return SolveResult(
                        FOUND, "".join(reversed(word)), len(parents), len(parents) * cost
                    )
                nxt.append(img)
        if len(parents) * cost > mem_cap:
            return SolveResult(RESOURCE_EXHAUSTED, None, len(parents), len(parents) * cost)
        frontier = nxt
    # BFS is depth-complete: no singleton within max_len is definitive
    # for that depth, whether or not the subset space was exhausted
    return SolveResult(NONE_WITHIN_LIMITS, None, len(parents), len(parents) * cost)


def greedy_reset(dfa):
    """Pair-merging heuristic: repeatedly append a shortest word merging
    the lowest-index active pair.  At most |Q|-1 rounds; the word is not
    necessarily minimal."""
    n = dfa.state_count
    dist, letter = pair_merge_table(dfa)
    active = dfa.full_set()
    word = []
    explored = len(dist)
    for _ in range(n - 1):
        if len(active) == 1:
            break
        idx = active.indices()
        p, q = idx[0], idx[1]  # lowest (min_state, max_state) pair
        key = p * n + q
        if key not in dist:
            return SolveResult(NOT_SYNCHRONIZING, None, explored, 0)
        # walk the merge table down to the diagonal
        while p != q:
            lt = letter[p * n + q]
            word.append(lt)
            p2, q2 = dfa.step(p, lt), dfa.step(q, lt)
            p, q = (p2, q2) if p2 <= q2 else (q2, p2)
            active = apply_word(dfa, active, lt)
    if len(active) != 1:
        return SolveResult(NOT_SYNCHRONIZING, None, explored, 0)
    w = "".join(word)
    assert is_reset_word(dfa, w)
    return SolveResult(FOUND, w, explored, 0)


def decide_reset_leq(dfa, d, mem_cap=None):
    """Decide "exists a reset word of length <= d".

    Returns ``("yes", word)``, ``("no", None)`` or ``("unknown", None)``.
    BFS by depth is complete, so a full frontier sweep to depth d with no
    singleton is a definitive no; memory pressure yields unknown.
    """
    if d < 0:
        raise ValueError("d must be nonnegative")
    res = shortest_reset_exact(dfa, d, mem_cap=mem_cap)
    if res.outcome == FOUND:
        # post-hoc: a yes answer always carries a valid short certificate
        assert len(res.word) <= d and is_reset_word(dfa, res.word)
        return ("yes", res.word)
    if res.outcome == RESOURCE_EXHAUSTED:
        return ("unknown", None)
    return ("no", None)
