"""The Maxine heuristic: repeatedly delete a maximum-degree vertex.

When the surviving graph is edgeless the survivors form an independent
set; its size M depends on how ties among maximum-degree vertices are
broken, so alongside single runs there is an exhaustive sweep over every
tie-break (maxine_all) and a guided variant that only deletes vertices
whose closed neighborhood dominates the remaining degrees (maxine_hh).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .graphs import Graph, _mask_to_set

MAXINE_ALL_CAP = 32


class NoHHVertexError(ValueError):
    """Raised when no degree-dominating vertex exists; `step` is the round."""

    def __init__(self, message: str, step: int):
        super().__init__(f"{message} (at step {step})")
        self.step = step


@dataclass(frozen=True)
class MaxineOutcome:
    """One full run: the deletion order and the surviving independent set."""

    deletions: tuple[int, ...]
    survivors: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.survivors)


@dataclass(frozen=True)
class MaxineSummary:
    """Every survivor count achievable over all tie-breaking choices."""

    achievable_sizes: frozenset[int]

    @property
    def min_size(self) -> int:
        return min(self.achievable_sizes)

    @property
    def max_size(self) -> int:
        return max(self.achievable_sizes)


def _max_degree_mask(adj, mask: int) -> tuple[int, int]:
    """(max degree, bitmask of max-degree vertices) within `mask`."""
    best = -1
    cands = 0
    m = mask
    while m:
        b = m & -m
        m ^= b
        d = (adj[b.bit_length() - 1] & mask).bit_count()
        if d > best:
            best = d
            cands = b
        elif d == best:
            cands |= b
    return best, cands


def max_degree_vertices(g: Graph) -> frozenset[int]:
    if g.n == 0:
        raise ValueError("graph has no vertices")
    _, cands = _max_degree_mask(g.adj, (1 << g.n) - 1)
    return _mask_to_set(cands)


def _hh_vertices_mask(adj, mask: int) -> int:
    """Bitmask of max-degree vertices whose neighbor degrees dominate.

    A vertex qualifies when, inside `mask`, it has maximum degree and the
    smallest degree over its neighbors is >= the largest degree over the
    non-neighbors (ties allowed).  Deleting such a vertex tracks one
    Havel-Hakimi elimination step on the degree sequence.
    """
    best, cands = _max_degree_mask(adj, mask)
    out = 0
    c = cands
    while c:
        b = c & -c
        c ^= b
        v = b.bit_length() - 1
        nbrs = adj[v] & mask
        others = mask & ~nbrs & ~b
        lo = best
        m = nbrs
        while m:
            nb = m & -m
            m ^= nb
            d = (adj[nb.bit_length() - 1] & mask).bit_count()
            if d < lo:
                lo = d
        hi = 0
        m = others
        while m:
            ob = m & -m
            m ^= ob
            d = (adj[ob.bit_length() - 1] & mask).bit_count()
            if d > hi:
                hi = d
        if not nbrs or lo >= hi:
            out |= b
    return out


def hh_property_vertices(g: Graph) -> frozenset[int]:
    """Vertices whose deletion mirrors a Havel-Hakimi step; may be empty."""
    if g.n == 0:
        raise ValueError("graph has no vertices")
    return _mask_to_set(_hh_vertices_mask(g.adj, (1 << g.n) - 1))


def maxine_run(g: Graph, policy: str = "low", seed: int = 0) -> MaxineOutcome:
    """One Maxine application under a fixed tie-breaking policy.

    policy 'low' deletes the lowest-id maximum-degree vertex, 'high' the
    highest, 'random' draws uniformly using `seed` (default 0, so repeat
    invocations reproduce the run).
    """
    if policy not in ("low", "high", "random"):
        raise ValueError(f"unknown policy {policy!r}")
    rng = random.Random(seed) if policy == "random" else None
    adj = g.adj
    mask = (1 << g.n) - 1
    deletions = []
    while mask:
        best, cands = _max_degree_mask(adj, mask)
        if best == 0:
            break
        if policy == "low":
            v = (cands & -cands).bit_length() - 1
        elif policy == "high":
            v = cands.bit_length() - 1
        else:
            choices = []
            c = cands
            while c:
                b = c & -c
                c ^= b
                choices.append(b.bit_length() - 1)
            v = rng.choice(choices)
        deletions.append(v)
        mask ^= 1 << v
    return MaxineOutcome(tuple(deletions), _mask_to_set(mask))


def _maxine_sizes_mask(adj, mask: int, memo: dict) -> int:
    """Achievable survivor counts from `mask`, encoded as a size bitmask."""
    out = memo.get(mask)
    if out is not None:
        return out
    best, cands = _max_degree_mask(adj, mask)
    if best <= 0:
        out = 1 << mask.bit_count()
    else:
        out = 0
        c = cands
        while c:
            b = c & -c
            c ^= b
            out |= _maxine_sizes_mask(adj, mask ^ b, memo)
    memo[mask] = out
    return out


def maxine_all(g: Graph, cap: int = MAXINE_ALL_CAP) -> MaxineSummary:
    """Exhaust every tie-breaking choice (memoized on surviving sets)."""
    if g.n > cap:
        raise ValueError(f"maxine_all limited to n <= {cap}, got {g.n}")
    sizes = _maxine_sizes_mask(g.adj, (1 << g.n) - 1, {})
    return MaxineSummary(_mask_to_set(sizes))


def maxine_hh(g: Graph) -> MaxineOutcome:
    """Maxine restricted to degree-dominating vertices (lowest id on ties).

    Raises NoHHVertexError if some round has no qualifying vertex before
    the surviving graph is edgeless.
    """
    adj = g.adj
    mask = (1 << g.n) - 1
    deletions = []
    step = 0
    while mask:
        best, _ = _max_degree_mask(adj, mask)
        if best == 0:
            break
        hh = _hh_vertices_mask(adj, mask)
        if not hh:
            raise NoHHVertexError("no degree-dominating vertex available", step)
        v = (hh & -hh).bit_length() - 1
        deletions.append(v)
        mask ^= 1 << v
        step += 1
    return MaxineOutcome(tuple(deletions), _mask_to_set(mask))


def maxine_hh_sizes(g: Graph, cap: int = MAXINE_ALL_CAP) -> frozenset[int]:
    """Survivor counts over every choice of degree-dominating deletions.

    Choice sequences that strand (no qualifying vertex mid-run) contribute
    nothing; the result is empty when no sequence completes.
    """
    if g.n > cap:
        raise ValueError(f"maxine_hh_sizes limited to n <= {cap}, got {g.n}")
    adj = g.adj
    memo: dict[int, int] = {}

    def rec(mask: int) -> int:
        out = memo.get(mask)
        if out is not None:
            return out
        best, _ = _max_degree_mask(adj, mask)
        if best <= 0:
            out = 1 << mask.bit_count()
        else:
            out = 0
            c = _hh_vertices_mask(adj, mask)
            while c:
                b = c & -c
                c ^= b
                out |= rec(mask ^ b)
        memo[mask] = out
        return out

    return _mask_to_set(rec((1 << g.n) - 1))
