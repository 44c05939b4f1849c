"""Exact reference solvers for small instances.

These are deliberately simple exhaustive searches meant to certify the
answers of the polynomial and parameterized solvers on small inputs.
They refuse oversized instances via :class:`BudgetExceeded` rather than
degrade into approximations, so a budget error is an explicit outcome
and never a silently wrong answer.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .core import Cycle, LinearTournament, Triangle, enumerate_triangles


@dataclass(frozen=True)
class OracleBudget:
    max_vertices: int = 12
    max_cycles: int = 250_000
    time_limit: float = 60.0


DEFAULT_BUDGET = OracleBudget()


class BudgetExceeded(Exception):
    """Instance too large for the requested exhaustive computation."""


def _arc_ids(T: LinearTournament) -> dict[tuple[int, int], int]:
    return {arc: i for i, arc in enumerate(T.arcs())}


def exact_max_triangle_packing(
    T: LinearTournament, budget: OracleBudget | None = None
) -> tuple[int, list[Triangle]]:
    """Optimum arc-disjoint triangle packing by branch and bound.

    Candidates are branched in order of ascending conflict count with
    lexicographic tie-break, and the search prunes with the smaller of
    the free-arc bound floor(free/3) and the count of unused backward
    arcs (every triangle consumes at least one backward arc).  The
    returned packing is the first optimum in this fixed order, so
    results are stable across runs.
    """
    budget = budget or DEFAULT_BUDGET
    if T.n > budget.max_vertices:
        raise BudgetExceeded(
            f"n={T.n} exceeds budget.max_vertices={budget.max_vertices}"
        )
    deadline = time.monotonic() + budget.time_limit

    tris = enumerate_triangles(T)
    if not tris:
        return 0, []
    arc_id = _arc_ids(T)
    masks = []
    for tri in tris:
        m = 0
        for arc in tri.arcs():
            m |= 1 << arc_id[arc]
        masks.append(m)
    backward_mask = 0
    for arc in T.backward:
        backward_mask |= 1 << arc_id[arc]
    total_arcs = len(arc_id)

    conflicts = [
        sum(1 for other in masks if other is not m and other & m) for m in masks
    ]
    order = sorted(range(len(tris)), key=lambda i: (conflicts[i], tris[i]))
    tris = [tris[i] for i in order]
    masks = [masks[i] for i in order]
    count = len(tris)

    best: list[Triangle] = []

    def rec(idx: int, used: int, chosen: list[Triangle]) -> None:
        nonlocal best
        if time.monotonic() > deadline:
            raise BudgetExceeded("time limit exhausted in triangle search")
        if len(chosen) > len(best):
            best = list(chosen)
        free_backward = bin(backward_mask & ~used).count("1")
        free_arcs = total_arcs - bin(used).count("1")
        bound = len(chosen) + min(free_backward, free_arcs // 3, count - idx)
        if bound <= len(best):
            return
        while idx < count and masks[idx] & used:
            idx += 1
            if len(chosen) + min(free_backward, count - idx) <= len(best):
                return
        if idx == count:
            return
        chosen.append(tris[idx])
        rec(idx + 1, used | masks[idx], chosen)
        chosen.pop()
        rec(idx + 1, used, chosen)

    rec(0, 0, [])
    return len(best), sorted(best)


def enumerate_simple_cycles(
    T: LinearTournament, limit: int | None = None, deadline: float | None = None
) -> list[Cycle]:
    """Every simple directed cycle, each rooted at its minimum vertex."""
    n = T.n
    out: list[Cycle] = []
    for s in range(n):
        path = [s]
        on_path = {s}

        def dfs(v: int) -> None:
            if deadline is not None and time.monotonic() > deadline:
                raise BudgetExceeded("time limit exhausted enumerating cycles")
            for w in range(s, n):
                if w == v or w in on_path and w != s:
                    continue
                if not T.has_arc(v, w):
                    continue
                if w == s:
                    if len(path) >= 3:
                        out.append(Cycle.of(path))
                        if limit is not None and len(out) > limit:
                            raise BudgetExceeded(
                                f"more than {limit} simple cycles"
                            )
                else:
                    path.append(w)
                    on_path.add(w)
                    dfs(w)
                    path.pop()
                    on_path.remove(w)

        dfs(s)
    return out


def exact_max_cycle_packing(
    T: LinearTournament, budget: OracleBudget | None = None
) -> tuple[int, list[Cycle]]:
    """Optimum arc-disjoint cycle packing over all simple cycles.

    Branches on the first backward arc not yet consumed or skipped:
    every directed cycle contains a backward arc of the representation,
    so assigning each backward arc either one covering cycle or the
    skip marker enumerates all packings once.
    """
    budget = budget or DEFAULT_BUDGET
    if T.n > budget.max_vertices:
        raise BudgetExceeded(
            f"n={T.n} exceeds budget.max_vertices={budget.max_vertices}"
        )
    deadline = time.monotonic() + budget.time_limit
    cycles = enumerate_simple_cycles(T, budget.max_cycles, deadline)
    if not cycles:
        return 0, []
    cycles.sort(key=lambda c: (len(c), c.vertices))

    arc_id = _arc_ids(T)
    bw_list = sorted(T.backward)
    bw_index = {arc: i for i, arc in enumerate(bw_list)}
    b = len(bw_list)
    total_arcs = len(arc_id)

    masks = []
    bw_sets = []
    by_first_bw: list[list[int]] = [[] for _ in range(b)]
    for ci, cyc in enumerate(cycles):
        m = 0
        bws = 0
        for arc in cyc.arcs():
            m |= 1 << arc_id[arc]
            j = bw_index.get(arc)
            if j is not None:
                bws |= 1 << j
        masks.append(m)
        bw_sets.append(bws)
        for j in range(b):
            if bws >> j & 1:
                by_first_bw[j].append(ci)

    # greedy seed so the bound starts pruning immediately
    best: list[Cycle] = []
    seed_used = 0
    for ci, cyc in enumerate(cycles):
        if masks[ci] & seed_used == 0:
            best.append(cyc)
            seed_used |= masks[ci]

    bw_arc_bits = [1 << arc_id[arc] for arc in bw_list]

    def rec(i: int, used: int, skipped: int, chosen: list[Cycle]) -> None:
        nonlocal best
        if time.monotonic() > deadline:
            raise BudgetExceeded("time limit exhausted in cycle search")
        if len(chosen) > len(best):
            best = list(chosen)
        while i < b and used & bw_arc_bits[i]:
            i += 1
        if i == b:
            return
        free_bw = sum(
            1
            for j in range(i, b)
            if not used & bw_arc_bits[j] and not skipped >> j & 1
        )
        free_arcs = total_arcs - bin(used).count("1")
        if len(chosen) + min(free_bw, free_arcs // 3) <= len(best):
            return
        for ci in by_first_bw[i]:
            if masks[ci] & used or bw_sets[ci] & skipped:
                continue
            chosen.append(cycles[ci])
            rec(i + 1, used | masks[ci], skipped, chosen)
            chosen.pop()
        rec(i + 1, used, skipped | 1 << i, chosen)

    rec(0, 0, 0, [])
    return len(best), sorted(best, key=lambda c: (len(c), c.vertices))


def exact_min_fas(
    T: LinearTournament, budget: OracleBudget | None = None
) -> tuple[int, frozenset[tuple[int, int]]]:
    """Minimum feedback arc set via the ordering formulation.

    For tournaments the minimum feedback arc set equals the minimum
    number of backward arcs over all orderings, found here by dynamic
    programming over vertex subsets (the cost of appending v to a
    placed set S is the number of arcs from v into S).
    """
    budget = budget or DEFAULT_BUDGET
    n = T.n
    if n > budget.max_vertices:
        raise BudgetExceeded(
            f"n={T.n} exceeds budget.max_vertices={budget.max_vertices}"
        )
    if n == 0:
        return 0, frozenset()

    out_mask = [0] * n
    for u in range(n):
        for v in range(n):
            if u != v and T.has_arc(u, v):
                out_mask[u] |= 1 << v

    size = 1 << n
    inf = n * n + 1
    dp = [inf] * size
    choice = [-1] * size
    dp[0] = 0
    for S in range(1, size):
        s_bits = S
        while s_bits:
            v_bit = s_bits & -s_bits
            s_bits ^= v_bit
            v = v_bit.bit_length() - 1
            prev = S ^ v_bit
            cost = dp[prev] + bin(out_mask[v] & prev).count("1")
            if cost < dp[S]:
                dp[S] = cost
                choice[S] = v

    order = []
    S = size - 1
    while S:
        v = choice[S]
        order.append(v)
        S ^= 1 << v
    order.reverse()

    placed_at = {v: i for i, v in enumerate(order)}
    fas = frozenset(
        (u, v)
        for u in range(n)
        for v in range(n)
        if u != v and T.has_arc(u, v) and placed_at[u] > placed_at[v]
    )
    assert len(fas) == dp[size - 1]
    return dp[size - 1], fas
