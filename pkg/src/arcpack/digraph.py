"""Small directed graphs with bitset adjacency.

Vertices are the integers ``0..n-1`` with ``n <= 64``, so every adjacency
row fits in a single machine word and neighborhood arithmetic reduces to
integer bit operations.  Graphs are loop-free and immutable; every
function here is pure and returns fresh objects.

An arc is an ordered pair ``(u, v)`` meaning ``u -> v``.  Arc sets are
plain ``frozenset`` objects of such pairs, vertex orderings are tuples
containing each vertex exactly once.
"""

from __future__ import annotations

import heapq
from array import array
from typing import Iterable, Iterator

Arc = tuple[int, int]

MAX_VERTICES = 64

# Subset-DP feasibility cap for hamiltonian_path: the table has 2**n rows.
HAMILTONIAN_PATH_MAX = 24


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Digraph:
    """Immutable loop-free digraph stored as one out-neighbor bitmask per vertex."""

    __slots__ = ("n", "out", "inn")

    def __init__(self, n: int, out_rows: Iterable[int]):
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
        rows = tuple(out_rows)
        if len(rows) != n:
            raise ValueError(f"expected {n} adjacency rows, got {len(rows)}")
        full = (1 << n) - 1
        for v, row in enumerate(rows):
            if row & ~full:
                raise ValueError(f"row of vertex {v} mentions vertices >= {n}")
            if (row >> v) & 1:
                raise ValueError(f"self-loop at vertex {v}")
        self.n = n
        self.out = rows
        inn = [0] * n
        for u, row in enumerate(rows):
            for v in bits(row):
                inn[v] |= 1 << u
        self.inn = tuple(inn)

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[Arc]) -> "Digraph":
        """Build a digraph from explicit arcs, rejecting loops and duplicates."""
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 1..{MAX_VERTICES}, got {n}")
        rows = [0] * n
        seen = set()
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop ({u}, {v}) not allowed")
            if (u, v) in seen:
                raise ValueError(f"duplicate arc ({u}, {v})")
            seen.add((u, v))
            rows[u] |= 1 << v
        return cls(n, rows)

    # -- basic queries ------------------------------------------------

    def has_arc(self, u: int, v: int) -> bool:
        return bool((self.out[u] >> v) & 1)

    def arcs(self) -> list[Arc]:
        """All arcs in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in bits(self.out[u])]

    def arc_count(self) -> int:
        return sum(row.bit_count() for row in self.out)

    def out_degree(self, v: int) -> int:
        return self.out[v].bit_count()

    def in_degree(self, v: int) -> int:
        return self.inn[v].bit_count()

    def out_neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.out[v]))

    def in_neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(bits(self.inn[v]))

    def min_out_degree(self) -> int:
        return min(self.out_degree(v) for v in range(self.n))

    def is_oriented(self) -> bool:
        """True when no pair of vertices carries arcs in both directions."""
        return all(self.out[u] & self.inn[u] == 0 for u in range(self.n))

    def is_tournament(self) -> bool:
        """True when every vertex pair carries exactly one arc."""
        full = (1 << self.n) - 1
        return all(
            (self.out[u] | self.inn[u]) == full & ~(1 << u)
            and self.out[u] & self.inn[u] == 0
            for u in range(self.n)
        )

    # -- derived graphs -----------------------------------------------

    def without_arcs(self, arcs: Iterable[Arc]) -> "Digraph":
        """Copy with the given arcs removed; removing a missing arc is an error."""
        rows = list(self.out)
        for u, v in arcs:
            if not (0 <= u < self.n and (rows[u] >> v) & 1):
                raise ValueError(f"arc ({u}, {v}) not present")
            rows[u] &= ~(1 << v)
        return Digraph(self.n, rows)

    def with_arcs(self, arcs: Iterable[Arc]) -> "Digraph":
        """Copy with the given arcs added; adding an existing arc is an error."""
        rows = list(self.out)
        for u, v in arcs:
            if not (0 <= u < self.n and 0 <= v < self.n) or u == v:
                raise ValueError(f"cannot add arc ({u}, {v})")
            if (rows[u] >> v) & 1:
                raise ValueError(f"arc ({u}, {v}) already present")
            rows[u] |= 1 << v
        return Digraph(self.n, rows)

    def induced(self, vertices: Iterable[int]) -> tuple["Digraph", tuple[int, ...]]:
        """Subgraph induced by ``vertices``.

        Returns the subgraph on relabeled vertices ``0..k-1`` together with
        the tuple mapping new labels back to the original ones (ascending).
        """
        keep = sorted(set(vertices))
        if not keep:
            raise ValueError("induced subgraph needs at least one vertex")
        if keep[0] < 0 or keep[-1] >= self.n:
            raise ValueError(f"vertices out of range: {keep}")
        index = {old: new for new, old in enumerate(keep)}
        rows = [0] * len(keep)
        for old_u in keep:
            for old_v in bits(self.out[old_u]):
                if old_v in index:
                    rows[index[old_u]] |= 1 << index[old_v]
        return Digraph(len(keep), rows), tuple(keep)

    def relabeled(self, perm: Iterable[int]) -> "Digraph":
        """Image under the vertex permutation ``perm`` (old label -> new label)."""
        p = tuple(perm)
        if sorted(p) != list(range(self.n)):
            raise ValueError(f"not a permutation of 0..{self.n - 1}: {p}")
        rows = [0] * self.n
        for u in range(self.n):
            for v in bits(self.out[u]):
                rows[p[u]] |= 1 << p[v]
        return Digraph(self.n, rows)

    def transpose(self) -> "Digraph":
        return Digraph(self.n, self.inn)

    # -- dunder -------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.out == other.out

    def __hash__(self) -> int:
        return hash((self.n, self.out))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, m={self.arc_count()})"


# -- orderings --------------------------------------------------------


def backward_arcs(d: Digraph, ordering: Iterable[int]) -> frozenset[Arc]:
    """Arcs that point from a later position of ``ordering`` to an earlier one.

    Reversing (or deleting) exactly these arcs makes the graph acyclic with
    ``ordering`` as a topological order.
    """
    order = tuple(ordering)
    if sorted(order) != list(range(d.n)):
        raise ValueError(f"not a vertex ordering of 0..{d.n - 1}: {order}")
    pos = [0] * d.n
    for i, v in enumerate(order):
        pos[v] = i
    return frozenset(
        (u, v) for u in range(d.n) for v in bits(d.out[u]) if pos[u] > pos[v]
    )


def topological_order(d: Digraph) -> tuple[int, ...] | None:
    """A topological order of ``d``, or ``None`` when ``d`` has a cycle.

    Deterministic: among ready vertices the smallest label is placed first.
    """
    indeg = [d.in_degree(v) for v in range(d.n)]
    placed = 0
    order = []
    heap = [v for v in range(d.n) if indeg[v] == 0]
    heapq.heapify(heap)
    while heap:
        v = heapq.heappop(heap)
        order.append(v)
        placed += 1
        for w in bits(d.out[v]):
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    if placed != d.n:
        return None
    return tuple(order)


def is_acyclic(d: Digraph) -> bool:
    return topological_order(d) is not None


# -- neighborhoods ----------------------------------------------------


def second_out_neighborhood(d: Digraph, v: int) -> frozenset[int]:
    """Vertices reachable in exactly two steps but not in one: N++(v).

    Excludes ``v`` itself and all direct out-neighbors.
    """
    if not 0 <= v < d.n:
        raise ValueError(f"vertex {v} out of range")
    first = d.out[v]
    second = 0
    for u in bits(first):
        second |= d.out[u]
    second &= ~first & ~(1 << v)
    return frozenset(bits(second))


# -- connectivity and degree balance ----------------------------------


def _reachable(rows: tuple[int, ...], start: int) -> int:
    seen = 1 << start
    frontier = 1 << start
    while frontier:
        new = 0
        for v in bits(frontier):
            new |= rows[v]
        frontier = new & ~seen
        seen |= new
    return seen


def is_strongly_connected(d: Digraph) -> bool:
    full = (1 << d.n) - 1
    return _reachable(d.out, 0) == full and _reachable(d.inn, 0) == full


def is_eulerian(d: Digraph) -> bool:
    """True when every vertex balances in- and out-degree and the graph is
    strongly connected (so one closed trail covers every arc)."""
    if any(d.out_degree(v) != d.in_degree(v) for v in range(d.n)):
        return False
    return is_strongly_connected(d)


# -- hamiltonian paths ------------------------------------------------


def hamiltonian_path(d: Digraph) -> tuple[int, ...] | None:
    """A directed path visiting every vertex exactly once, or ``None``.

    Subset dynamic program: ``ends[S]`` holds the bitmask of vertices that
    can terminate a path covering exactly the set ``S``.  Capped at
    n <= 24 because the table has 2**n rows.  Deterministic traceback
    prefers smaller vertex labels.
    """
    n = d.n
    if n > HAMILTONIAN_PATH_MAX:
        raise ValueError(
            f"hamiltonian_path supports at most {HAMILTONIAN_PATH_MAX} vertices, got {n}"
        )
    if n == 1:
        return (0,)
    size = 1 << n
    ends = array("q", bytes(8 * size))
    for v in range(n):
        ends[1 << v] = 1 << v
    full = size - 1
    for s in range(3, size):
        if s & (s - 1) == 0:
            continue
        e = 0
        t = s
        while t:
            low = t & -t
            t ^= low
            v = low.bit_length() - 1
            if ends[s ^ low] & d.inn[v]:
                e |= low
        ends[s] = e
    if ends[full] == 0:
        return None
    # Rebuild one path back to front, smallest candidate first.
    s = full
    v = (ends[full] & -ends[full]).bit_length() - 1
    path = [v]
    while s != 1 << v:
        s ^= 1 << v
        cand = ends[s] & d.inn[v]
        v = (cand & -cand).bit_length() - 1
        path.append(v)
    path.reverse()
    return tuple(path)


# -- text format ------------------------------------------------------


def parse_graph(text: str) -> Digraph:
    """Parse the plain text format: header ``n m`` then ``m`` lines ``u v``.

    Lines starting with ``#`` and blank lines are ignored.
    """
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line))
    if not rows:
        raise ValueError("empty graph text")
    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 2:
        raise ValueError(f"line {lineno}: header must be 'n m', got {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"line {lineno}: header must be two integers") from None
    body = rows[1:]
    if len(body) != m:
        raise ValueError(f"header announces {m} arcs but {len(body)} arc lines found")
    arcs = []
    for lineno, line in body:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: arc line must be 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: arc endpoints must be integers") from None
        arcs.append((u, v))
    try:
        return Digraph.from_arcs(n, arcs)
    except ValueError as exc:
        raise ValueError(f"invalid graph: {exc}") from None


def format_graph(d: Digraph) -> str:
    """Serialize to the text format, arcs in lexicographic order."""
    lines = [f"{d.n} {d.arc_count()}"]
    lines.extend(f"{u} {v}" for u, v in d.arcs())
    return "\n".join(lines) + "\n"
