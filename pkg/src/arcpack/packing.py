"""Exact maximum arc-disjoint cycle packings.

The packing number of a digraph never exceeds its minimum feedback arc
set size: every cycle must use at least one arc of any feedback arc set
``F``, and the cycles are arc-disjoint.  The solver exploits how tight
that pigeonhole is:

* A packing of size ``tau`` forces every cycle to use exactly one arc of
  ``F``, with all of ``F`` used.  Each cycle is then one arc ``x -> y``
  of ``F`` plus an ``F``-avoiding path ``y -> x``, and ``D - F`` is
  acyclic, so deciding feasibility is an arc-disjoint path-system search
  in a DAG.
* A packing of size ``tau - 1`` has exactly two shapes: either one arc
  of ``F`` is unused entirely, or a single cycle passes through two arcs
  of ``F`` and the rest use one each.  Both reduce to the same path
  system with one requirement dropped or merged.

Both reductions are exhaustive, so a failed search is a proof.  Below
``tau - 1`` the solver falls back to branching on a feedback arc:
either some cycle through it is in the packing, or the arc is unused and
can be deleted (dropping the feedback bound by exactly one).

All searches honor a node/time budget; when it runs out the best packing
found so far is returned with ``optimal=False``.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .digraph import Arc, Digraph, bits, topological_order
from .fas import DEFAULT_MAX_VERTICES, min_feedback_arc_set

Cycle = tuple[int, ...]

BRUTEFORCE_MAX_VERTICES = 7


class BudgetExceeded(Exception):
    """Internal signal that the node or time budget ran out."""


@dataclass(frozen=True)
class Budget:
    """Search limits for the exact packing solver."""

    max_nodes: int = 100_000_000
    max_secs: float = 1800.0

    @classmethod
    def from_env(cls) -> "Budget":
        """Default budget, overridable via ARCPACK_BUDGET_NODES / _SECS."""
        nodes = int(os.environ.get("ARCPACK_BUDGET_NODES", cls.max_nodes))
        secs = float(os.environ.get("ARCPACK_BUDGET_SECS", cls.max_secs))
        return cls(max_nodes=nodes, max_secs=secs)


@dataclass(frozen=True)
class PackingReport:
    """Solver outcome: packing size, certificate, and search statistics.

    ``optimal`` is True only when the search proved no larger packing
    exists; otherwise ``value`` is a lower bound reached within budget.
    """

    value: int
    cycles: tuple[Cycle, ...]
    optimal: bool
    nodes_explored: int
    elapsed: float


class _Tracker:
    """Counts search nodes and enforces the budget."""

    __slots__ = ("nodes", "max_nodes", "deadline")

    def __init__(self, budget: Budget):
        self.nodes = 0
        self.max_nodes = budget.max_nodes
        self.deadline = time.perf_counter() + budget.max_secs

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise BudgetExceeded
        if self.nodes % 4096 == 0 and time.perf_counter() > self.deadline:
            raise BudgetExceeded


# -- cycle utilities --------------------------------------------------


def cycle_arcs(cycle: Cycle) -> list[Arc]:
    """The consecutive arcs of a cycle, wrap-around included."""
    k = len(cycle)
    return [(cycle[i], cycle[(i + 1) % k]) for i in range(k)]


def normalize_cycle(cycle: Iterable[int]) -> Cycle:
    """Rotate so the smallest vertex comes first."""
    seq = tuple(cycle)
    i = seq.index(min(seq))
    return seq[i:] + seq[:i]


def packing_violation(d: Digraph, cycles: Iterable[Cycle]) -> str | None:
    """Why ``cycles`` is not a valid arc-disjoint packing, or ``None``.

    Valid means: every sequence is a directed cycle of distinct vertices
    (length at least 2; a 2-cycle needs both opposing arcs, so it can
    only validate in a non-oriented digraph), and no arc repeats.
    """
    used: set[Arc] = set()
    for idx, cyc in enumerate(cycles):
        if len(cyc) < 2:
            return f"cycle {idx} has fewer than 2 vertices: {cyc}"
        if len(set(cyc)) != len(cyc):
            return f"cycle {idx} repeats a vertex: {cyc}"
        for u, v in cycle_arcs(cyc):
            if not (0 <= u < d.n and 0 <= v < d.n):
                return f"cycle {idx} leaves the vertex range: ({u}, {v})"
            if not d.has_arc(u, v):
                return f"cycle {idx} uses the missing arc ({u}, {v})"
            if (u, v) in used:
                return f"cycle {idx} reuses arc ({u}, {v})"
            used.add((u, v))
    return None


def is_valid_packing(d: Digraph, cycles: Iterable[Cycle]) -> bool:
    return packing_violation(d, list(cycles)) is None


# -- path-system search in the acyclic remainder ----------------------


class _PathSystem:
    """Mutable availability of the arcs of a DAG plus path queries."""

    __slots__ = ("n", "avail", "topo", "tracker")

    def __init__(self, n: int, avail_rows: list[int], topo: tuple[int, ...], tracker: _Tracker):
        self.n = n
        self.avail = avail_rows
        self.topo = topo
        self.tracker = tracker

    def place(self, arcs: Iterable[Arc]) -> None:
        for u, v in arcs:
            self.avail[u] &= ~(1 << v)

    def unplace(self, arcs: Iterable[Arc]) -> None:
        for u, v in arcs:
            self.avail[u] |= 1 << v

    def count_paths(self, src: int, dst: int, forbid: int = 0) -> int:
        """Number of directed src->dst paths on available arcs that avoid
        the vertices of ``forbid`` (endpoints always allowed)."""
        if src == dst:
            return 1
        forbid &= ~(1 << src) & ~(1 << dst)
        counts = [0] * self.n
        counts[src] = 1
        started = False
        for v in self.topo:
            if v == src:
                started = True
            if not started or counts[v] == 0 or v == dst:
                continue
            for w in bits(self.avail[v] & ~forbid):
                counts[w] += counts[v]
        return counts[dst]

    def iter_paths(self, src: int, dst: int, forbid: int = 0) -> Iterator[tuple[int, ...]]:
        """All src->dst paths on available arcs, lexicographic order.

        The graph is acyclic, so paths are automatically vertex-simple.
        """
        forbid &= ~(1 << src) & ~(1 << dst)
        avail = self.avail
        path = [src]

        def rec(v: int) -> Iterator[tuple[int, ...]]:
            if v == dst:
                yield tuple(path)
                return
            for w in bits(avail[v] & ~forbid):
                path.append(w)
                yield from rec(w)
                path.pop()

        yield from rec(src)


def _path_arcs(path: tuple[int, ...]) -> list[Arc]:
    return [(path[i], path[i + 1]) for i in range(len(path) - 1)]


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


# A requirement is one cycle to be built:
#   ("s", (x, y))         cycle through the single feedback arc x -> y
#   ("c", (x, y), (u, w)) cycle through both x -> y and u -> w
def _requirement_count(ps: _PathSystem, req: tuple) -> int:
    if req[0] == "s":
        x, y = req[1]
        return ps.count_paths(y, x)
    x, y = req[1]
    u, w = req[2]
    c1 = ps.count_paths(y, u, forbid=(1 << x) | (1 << w))
    if c1 == 0:
        return 0
    c2 = ps.count_paths(w, x, forbid=(1 << y) | (1 << u))
    return c1 * c2


def _requirement_placements(
    ps: _PathSystem, req: tuple
) -> Iterator[tuple[list[Arc], Cycle]]:
    """Yield (arcs to reserve, finished cycle) for every way to realize
    the requirement on currently available arcs."""
    if req[0] == "s":
        x, y = req[1]
        for path in ps.iter_paths(y, x):
            yield _path_arcs(path), (x,) + path[:-1]
        return
    x, y = req[1]
    u, w = req[2]
    for p1 in ps.iter_paths(y, u, forbid=(1 << x) | (1 << w)):
        a1 = _path_arcs(p1)
        ps.place(a1)
        # materialize so the caller sees a1 unplaced again
        second = list(ps.iter_paths(w, x, forbid=_mask(p1)))
        ps.unplace(a1)
        for p2 in second:
            yield a1 + _path_arcs(p2), (x,) + p1 + p2[:-1]


def _solve_requirements(ps: _PathSystem, reqs: list[tuple]) -> list[Cycle] | None:
    """Realize all requirements with pairwise arc-disjoint paths.

    Picks the most constrained requirement first; a requirement with no
    realization left refutes the whole branch.
    """
    if not reqs:
        return []
    best_i = -1
    best_count = None
    for i, req in enumerate(reqs):
        c = _requirement_count(ps, req)
        if c == 0:
            return None
        if best_count is None or c < best_count:
            best_i, best_count = i, c
    req = reqs[best_i]
    rest = reqs[:best_i] + reqs[best_i + 1 :]
    for arcs, cyc in _requirement_placements(ps, req):
        ps.tracker.tick()
        ps.place(arcs)
        sub = _solve_requirements(ps, rest)
        ps.unplace(arcs)
        if sub is not None:
            return [cyc] + sub
    return None


def _fresh_system(d: Digraph, fas: frozenset[Arc], tracker: _Tracker) -> _PathSystem:
    rows = list(d.out)
    for u, v in fas:
        rows[u] &= ~(1 << v)
    topo = topological_order(Digraph(d.n, rows))
    assert topo is not None  # fas is a feedback arc set
    return _PathSystem(d.n, rows, topo, tracker)


def _decide_full(d: Digraph, fas: frozenset[Arc], tracker: _Tracker) -> list[Cycle] | None:
    """Packing of size ``len(fas)`` where ``fas`` is a minimum FAS.

    Exhaustive: such a packing must use every FAS arc exactly once.
    """
    ps = _fresh_system(d, fas, tracker)
    reqs: list[tuple] = [("s", f) for f in sorted(fas)]
    return _solve_requirements(ps, reqs)


def _decide_one_below(d: Digraph, fas: frozenset[Arc], tracker: _Tracker) -> list[Cycle] | None:
    """Packing of size ``len(fas) - 1`` where ``fas`` is a minimum FAS.

    Exhaustive over the only two shapes such a packing can have: one FAS
    arc unused entirely, or one cycle through exactly two FAS arcs.
    """
    ordered = sorted(fas)
    for skip in ordered:
        ps = _fresh_system(d, fas, tracker)
        reqs: list[tuple] = [("s", f) for f in ordered if f != skip]
        sol = _solve_requirements(ps, reqs)
        if sol is not None:
            return sol
    for f, g in combinations(ordered, 2):
        x, y = f
        u, w = g
        # A simple cycle cannot leave or enter the same vertex twice.
        if x == u or y == w:
            continue
        ps = _fresh_system(d, fas, tracker)
        reqs = [("c", f, g)] + [("s", h) for h in ordered if h != f and h != g]
        sol = _solve_requirements(ps, reqs)
        if sol is not None:
            return sol
    return None


# -- general branch-and-bound below tau - 1 ---------------------------


def _scc_masks(d: Digraph) -> list[int]:
    """Strongly connected components as vertex bitmasks (Kosaraju)."""
    n = d.n
    order: list[int] = []
    seen = 0
    for root in range(n):
        if (seen >> root) & 1:
            continue
        stack = [(root, iter(bits(d.out[root])))]
        seen |= 1 << root
        while stack:
            v, it = stack[-1]
            advanced = False
            for w in it:
                if not (seen >> w) & 1:
                    seen |= 1 << w
                    stack.append((w, iter(bits(d.out[w]))))
                    advanced = True
                    break
            if not advanced:
                order.append(v)
                stack.pop()
    comps = []
    assigned = 0
    for v in reversed(order):
        if (assigned >> v) & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            new = 0
            for u in bits(frontier):
                new |= d.inn[u]
            frontier = new & ~comp & ~assigned
            comp |= frontier
        comps.append(comp)
        assigned |= comp
    return comps


def _cyclic_restriction(d: Digraph) -> Digraph:
    """Subgraph of the arcs that lie on at least one cycle: both endpoints
    in the same strongly connected component."""
    comp_of = [0] * d.n
    for mask in _scc_masks(d):
        for v in bits(mask):
            comp_of[v] = mask
    return Digraph(d.n, [d.out[v] & comp_of[v] for v in range(d.n)])


def _counting_bound(d: Digraph) -> int:
    """Cheap upper bound on the packing size of a cyclic-only graph."""
    m = d.arc_count()
    if m == 0:
        return 0
    has_two = any(d.out[v] & d.inn[v] for v in range(d.n))
    denom = 2 if has_two else 3
    degree_sum = sum(min(d.out_degree(v), d.in_degree(v)) for v in range(d.n))
    return min(m // denom, degree_sum // denom)


def _all_simple_paths(d: Digraph, src: int, dst: int, tracker: _Tracker) -> list[tuple[int, ...]]:
    """Every simple src->dst path, sorted shortest first then lexicographic."""
    out = d.out
    found: list[tuple[int, ...]] = []
    path = [src]

    def rec(v: int, visited: int) -> None:
        if v == dst:
            tracker.tick()
            found.append(tuple(path))
            return
        for w in bits(out[v] & ~visited):
            path.append(w)
            rec(w, visited | (1 << w))
            path.pop()

    # dst stays allowed; src may not be revisited
    rec(src, (1 << src) | 0)
    found.sort(key=lambda p: (len(p), p))
    return found


def _find_general(d: Digraph, k: int, tracker: _Tracker) -> list[Cycle] | None:
    """Find ``k`` arc-disjoint cycles, or prove there are none.

    Branches on one arc ``f`` of a minimum FAS: either some cycle of the
    packing passes through ``f`` (all simple cycles through it are
    tried), or no cycle uses ``f`` and it can be deleted, which lowers
    the feedback bound by exactly one.  When ``k`` reaches the bound the
    exhaustive path-system deciders take over.
    """
    if k == 0:
        return []
    dc = _cyclic_restriction(d)
    if _counting_bound(dc) < k:
        return None
    if dc.n <= DEFAULT_MAX_VERTICES:
        fr = min_feedback_arc_set(dc)
        if fr.tau < k:
            return None
        if k == fr.tau:
            return _decide_full(dc, fr.arcs, tracker)
        if k == fr.tau - 1:
            return _decide_one_below(dc, fr.arcs, tracker)
        branch = min(fr.arcs)
    else:
        branch = next((u, v) for u in range(dc.n) for v in bits(dc.out[u]))
    x, y = branch
    for path in _all_simple_paths(dc, y, x, tracker):
        tracker.tick()
        cyc = (x,) + path[:-1]
        sol = _find_general(dc.without_arcs(cycle_arcs(cyc)), k - 1, tracker)
        if sol is not None:
            return [cyc] + sol
    return _find_general(dc.without_arcs([branch]), k, tracker)


# -- greedy seed ------------------------------------------------------


def greedy_short_cycles(d: Digraph) -> list[Cycle]:
    """Arc-disjoint 2- and 3-cycles picked greedily in lexicographic order.

    Fast lower-bound seed for the exact solver; makes no optimality claim.
    """
    used: set[Arc] = set()
    cycles: list[Cycle] = []

    def free(*arcs: Arc) -> bool:
        return all(a not in used for a in arcs)

    for u in range(d.n):
        for v in bits(d.out[u] & d.inn[u]):
            if v > u and free((u, v), (v, u)):
                used.update(((u, v), (v, u)))
                cycles.append((u, v))
    for u in range(d.n):
        for v in bits(d.out[u]):
            if v < u:
                continue
            for w in bits(d.out[v] & d.inn[u]):
                if w < u:
                    continue
                if free((u, v), (v, w), (w, u)):
                    used.update(((u, v), (v, w), (w, u)))
                    cycles.append((u, v, w))
                    break
    return cycles


# -- public solvers ---------------------------------------------------


def max_cycle_packing(d: Digraph, budget: Budget | None = None) -> PackingReport:
    """Maximum number of pairwise arc-disjoint directed cycles.

    Exact for every graph small enough for the feedback-arc DP
    (n <= 24); above that only counting bounds steer the search and
    optimality is rarely proven.  See the module docstring for the
    search strategy.
    """
    if budget is None:
        budget = Budget.from_env()
    tracker = _Tracker(budget)
    t0 = time.perf_counter()
    best: list[Cycle] = greedy_short_cycles(d)
    optimal = False
    try:
        if d.n <= DEFAULT_MAX_VERTICES:
            fr = min_feedback_arc_set(d)
            if fr.tau == 0:
                best, optimal = [], True
            elif len(best) == fr.tau:
                optimal = True
            else:
                sol = _decide_full(d, fr.arcs, tracker)
                if sol is not None:
                    best, optimal = sol, True
                else:
                    sol = _decide_one_below(d, fr.arcs, tracker)
                    if sol is not None:
                        best, optimal = sol, True
                    else:
                        # packing number is at most tau - 2; climb to it
                        k = len(best) + 1
                        while k <= fr.tau - 2:
                            sol = _find_general(d, k, tracker)
                            if sol is None:
                                break
                            best = sol
                            k += 1
                        optimal = True
        else:
            k = len(best) + 1
            while True:
                sol = _find_general(d, k, tracker)
                if sol is None:
                    optimal = True
                    break
                best = sol
                k += 1
    except BudgetExceeded:
        optimal = False
    cycles = tuple(sorted(normalize_cycle(c) for c in best))
    violation = packing_violation(d, cycles)
    assert violation is None, violation
    return PackingReport(
        value=len(cycles),
        cycles=cycles,
        optimal=optimal,
        nodes_explored=tracker.nodes,
        elapsed=time.perf_counter() - t0,
    )


def packing_bruteforce(d: Digraph) -> int:
    """Maximum arc-disjoint cycle count by exhaustive search over all
    simple cycles.  Independent of the main solver; capped at n <= 7."""
    if d.n > BRUTEFORCE_MAX_VERTICES:
        raise ValueError(
            f"brute force capped at {BRUTEFORCE_MAX_VERTICES} vertices, got {d.n}"
        )
    n = d.n
    out = d.out
    cycles: list[int] = []  # arc masks, arc (u, v) -> bit u * n + v

    path: list[int] = []

    def collect(start: int, v: int, visited: int) -> None:
        for w in bits(out[v]):
            if w == start and len(path) >= 2:
                mask = 0
                for i in range(len(path)):
                    a, b = path[i], path[(i + 1) % len(path)]
                    mask |= 1 << (a * n + b)
                cycles.append(mask)
            elif w > start and not (visited >> w) & 1:
                path.append(w)
                collect(start, w, visited | (1 << w))
                path.pop()

    for s in range(n):
        path[:] = [s]
        collect(s, s, 1 << s)

    best = 0
    total = len(cycles)

    def rec(i: int, used: int, count: int) -> None:
        nonlocal best
        if count > best:
            best = count
        if count + (total - i) <= best:
            return
        for j in range(i, total):
            if cycles[j] & used == 0:
                rec(j + 1, used | cycles[j], count + 1)

    rec(0, 0, 0)
    return best


# -- triangles through a fixed vertex ---------------------------------


def count_triangles_through(d: Digraph, v: int) -> int:
    """Number of directed 3-cycles through ``v``: arcs from N+(v) to N-(v)."""
    if not 0 <= v < d.n:
        raise ValueError(f"vertex {v} out of range")
    return sum((d.out[x] & d.inn[v]).bit_count() for x in bits(d.out[v]))


def max_triangles_through(d: Digraph, v: int) -> tuple[int, tuple[Cycle, ...]]:
    """Largest set of arc-disjoint 3-cycles through ``v``.

    Two triangles v -> x -> y -> v share an arc at ``v`` exactly when
    they share ``x`` or ``y``, so the problem is a maximum bipartite
    matching between N+(v) and N-(v) along the arcs x -> y.  Solved with
    augmenting paths in vertex order; returns the witness triangles.
    """
    if not 0 <= v < d.n:
        raise ValueError(f"vertex {v} out of range")
    right_mask = d.inn[v]
    match_of: dict[int, int] = {}  # right vertex -> left vertex

    def augment(x: int, visited: set[int]) -> bool:
        for y in bits(d.out[x] & right_mask):
            if y in visited:
                continue
            visited.add(y)
            if y not in match_of or augment(match_of[y], visited):
                match_of[y] = x
                return True
        return False

    size = 0
    for x in bits(d.out[v]):
        if augment(x, set()):
            size += 1
    triangles = tuple(
        sorted(normalize_cycle((v, x, y)) for y, x in match_of.items())
    )
    return size, triangles


def mindeg_triangle_packing_holds(t: Digraph) -> bool:
    """Whether some minimum-out-degree vertex lies on at least
    min-out-degree many arc-disjoint 3-cycles."""
    k = t.min_out_degree()
    return any(
        t.out_degree(v) == k and max_triangles_through(t, v)[0] >= k
        for v in range(t.n)
    )
