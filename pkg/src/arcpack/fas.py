"""Exact minimum feedback arc sets via dynamic programming over subsets.

A feedback arc set (FAS) of a digraph is a set of arcs whose removal
leaves an acyclic graph.  Equivalently, the minimum FAS size equals the
minimum number of backward arcs over all vertex orderings, and a set is a
minimum FAS exactly when it is the backward arc set of some optimal
ordering.  The solver therefore optimizes over orderings:

    f(empty) = 0
    f(S)     = min over v in S of  f(S - v) + |N+(v) intersect (S - v)|

Appending ``v`` to an ordered prefix ``S - v`` turns the arcs from ``v``
back into the prefix into backward arcs.  ``f(V)`` is the minimum FAS
size; a traceback recovers an optimal ordering and its backward arcs.

The table has ``2**n`` entries, so the solver is capped by vertex count.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from typing import Iterable

from .digraph import Arc, Digraph, bits, hamiltonian_path, is_acyclic

DEFAULT_MAX_VERTICES = 24

ENUMERATE_MAX_VERTICES = 16


@dataclass(frozen=True)
class FasResult:
    """Optimal value with one optimal ordering and its backward arc set."""

    tau: int
    ordering: tuple[int, ...]
    arcs: frozenset[Arc]


def _subset_costs(d: Digraph) -> array:
    """The DP table f over all vertex subsets, indexed by bitmask."""
    n = d.n
    out = d.out
    size = 1 << n
    f = array("i", bytes(4 * size))
    big = 1 << 30
    for s in range(1, size):
        best = big
        t = s
        while t:
            low = t & -t
            t ^= low
            v = low.bit_length() - 1
            c = f[s ^ low] + (out[v] & (s ^ low)).bit_count()
            if c < best:
                best = c
        f[s] = best
    return f


def min_feedback_arc_set(
    d: Digraph, *, max_vertices: int = DEFAULT_MAX_VERTICES
) -> FasResult:
    """Minimum feedback arc set with an optimal ordering as certificate.

    Deterministic: the traceback reconstructs the ordering from the back,
    choosing the smallest vertex label whenever several choices are
    optimal.  Raises ``ValueError`` above the vertex cap.
    """
    if d.n > max_vertices:
        raise ValueError(
            f"subset DP capped at {max_vertices} vertices, got {d.n}; "
            "raise max_vertices explicitly to override"
        )
    f = _subset_costs(d)
    out = d.out
    s = (1 << d.n) - 1
    rev = []
    while s:
        t = s
        while t:
            low = t & -t
            t ^= low
            v = low.bit_length() - 1
            if f[s ^ low] + (out[v] & (s ^ low)).bit_count() == f[s]:
                rev.append(v)
                s ^= low
                break
    ordering = tuple(reversed(rev))
    pos = [0] * d.n
    for i, v in enumerate(ordering):
        pos[v] = i
    arcs = frozenset(
        (u, v) for u in range(d.n) for v in bits(out[u]) if pos[u] > pos[v]
    )
    tau = f[(1 << d.n) - 1]
    assert len(arcs) == tau
    return FasResult(tau=tau, ordering=ordering, arcs=arcs)


def feedback_arc_set_size(d: Digraph, *, max_vertices: int = DEFAULT_MAX_VERTICES) -> int:
    """The minimum FAS size alone (no certificate traceback)."""
    if d.n > max_vertices:
        raise ValueError(
            f"subset DP capped at {max_vertices} vertices, got {d.n}"
        )
    return _subset_costs(d)[(1 << d.n) - 1]


def _arc_key(arcs: frozenset[Arc]) -> tuple[Arc, ...]:
    return tuple(sorted(arcs))


def enumerate_min_fas(d: Digraph, limit: int) -> list[frozenset[Arc]]:
    """Distinct minimum feedback arc sets, at most ``limit`` of them.

    Walks every optimal traceback of the subset DP, merging duplicate
    partial backward arc sets per subset so that graphs with many optimal
    orderings but few distinct arc sets stay cheap.  Results are sorted by
    their sorted arc tuple; when more than ``limit`` distinct sets exist,
    the returned list is a deterministic subset.
    """
    if d.n > ENUMERATE_MAX_VERTICES:
        raise ValueError(
            f"enumeration capped at {ENUMERATE_MAX_VERTICES} vertices, got {d.n}"
        )
    if limit < 1:
        raise ValueError(f"limit must be positive, got {limit}")
    f = _subset_costs(d)
    out = d.out
    # Keep at most this many partial sets per subset; binds only on graphs
    # with more distinct optimal sets than anyone asked for.
    per_subset = max(4 * limit, 64)
    memo: dict[int, tuple[frozenset[Arc], ...]] = {0: (frozenset(),)}

    def partial_sets(s: int) -> tuple[frozenset[Arc], ...]:
        cached = memo.get(s)
        if cached is not None:
            return cached
        found: set[frozenset[Arc]] = set()
        t = s
        while t:
            low = t & -t
            t ^= low
            v = low.bit_length() - 1
            rest = s ^ low
            if f[rest] + (out[v] & rest).bit_count() != f[s]:
                continue
            added = frozenset((v, u) for u in bits(out[v] & rest))
            for prior in partial_sets(rest):
                found.add(prior | added)
        result = tuple(sorted(found, key=_arc_key)[:per_subset])
        memo[s] = result
        return result

    full = (1 << d.n) - 1
    return [frozenset(a) for a in partial_sets(full)[:limit]]


def mindeg_lower_bound(d: Digraph) -> int:
    """Every digraph with minimum out-degree k needs at least k(k+1)/2
    arc deletions to become acyclic."""
    k = d.min_out_degree()
    return k * (k + 1) // 2


def min_fas_induces_path(d: Digraph, arcs: Iterable[Arc]) -> bool:
    """Check that ``arcs`` is a minimum FAS whose own subgraph is acyclic
    and carries a hamiltonian directed path.

    The subgraph in question contains exactly the given arcs and their
    endpoints (vertices touching no given arc are dropped).  Raises
    ``ValueError`` when ``arcs`` contains a non-arc of ``d``.
    """
    fas = frozenset(arcs)
    for u, v in fas:
        if not (0 <= u < d.n and d.has_arc(u, v)):
            raise ValueError(f"({u}, {v}) is not an arc of the graph")
    if not fas:
        return is_acyclic(d)
    if len(fas) != feedback_arc_set_size(d):
        return False
    if not is_acyclic(d.without_arcs(fas)):
        return False
    verts = sorted({u for a in fas for u in a})
    index = {old: new for new, old in enumerate(verts)}
    sub = Digraph.from_arcs(len(verts), [(index[u], index[v]) for u, v in fas])
    if not is_acyclic(sub):
        return False
    return hamiltonian_path(sub) is not None


def min_fas_path(d: Digraph, arcs: Iterable[Arc]) -> tuple[int, ...] | None:
    """The hamiltonian path certificate behind ``min_fas_induces_path``,
    in original vertex labels, or ``None`` when the check fails."""
    fas = frozenset(arcs)
    if not min_fas_induces_path(d, fas):
        return None
    if not fas:
        return ()
    verts = sorted({u for a in fas for u in a})
    index = {old: new for new, old in enumerate(verts)}
    sub = Digraph.from_arcs(len(verts), [(index[u], index[v]) for u, v in fas])
    path = hamiltonian_path(sub)
    assert path is not None
    return tuple(verts[v] for v in path)
