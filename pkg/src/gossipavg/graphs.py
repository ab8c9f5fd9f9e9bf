"""Undirected simple graphs: the arenas the averaging dynamics run on."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass


class EdgeListError(ValueError):
    """Raised when an edge-list document cannot be parsed."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


def edge_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph on nodes 0 .. node_count-1.

    ``opposite``, when present, pairs each node with a designated antipode
    (the cube face graph pairs each face with the one it never touches).
    It must be a fixed-point-free involution and no node may be adjacent
    to its antipode; it is what enables the cube-specific three-way state
    decomposition in the spectral module.
    """

    node_count: int
    edges: frozenset[tuple[int, int]]
    opposite: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.node_count < 1:
            raise ValueError("graph needs at least one node")
        for u, v in self.edges:
            if not 0 <= u < v < self.node_count:
                raise ValueError(f"bad edge ({u}, {v}): need 0 <= u < v < {self.node_count}")
        if self.opposite is not None:
            opp = self.opposite
            if len(opp) != self.node_count:
                raise ValueError("opposite pairing length differs from node count")
            for v, w in enumerate(opp):
                if w == v or not 0 <= w < self.node_count or opp[w] != v:
                    raise ValueError("opposite pairing is not a fixed-point-free involution")
                if edge_key(v, w) in self.edges:
                    raise ValueError(f"nodes {v} and {w} are paired as opposites but adjacent")

    def neighbors(self, v: int) -> tuple[int, ...]:
        if not 0 <= v < self.node_count:
            raise ValueError(f"node {v} out of range")
        return tuple(sorted(w for e in self.edges for w in e if v in e and w != v))

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))


def adjacency_lists(g: Graph) -> list[list[int]]:
    """Sorted neighbor list per node; build once when iterating a lot."""
    adj: list[list[int]] = [[] for _ in range(g.node_count)]
    for u, v in sorted(g.edges):
        adj[u].append(v)
        adj[v].append(u)
    return adj


def build_cube() -> Graph:
    """Face-adjacency graph of the cube.

    Six nodes, one per face; every face touches the four faces around it
    and never the opposite one, so the graph is 4-regular and the
    antipodal pairs are 0-5, 1-3 and 2-4 in this numbering.
    """
    opposite = (5, 3, 4, 1, 2, 0)
    edges = frozenset(
        (u, v) for u in range(6) for v in range(u + 1, 6) if opposite[u] != v
    )
    return Graph(6, edges, opposite)


def build_cycle(n: int) -> Graph:
    """Cycle on n >= 3 nodes, node i adjacent to (i +- 1) mod n."""
    if n < 3:
        raise ValueError(f"cycle needs at least 3 nodes, got {n}")
    edges = frozenset(edge_key(i, (i + 1) % n) for i in range(n))
    return Graph(n, edges)


def from_edge_list(text: str) -> Graph:
    """Parse an edge-list document.

    One edge per line as two whitespace-separated decimal node indices;
    lines starting with '#' are comments, blank lines are ignored.  The
    node count is one past the largest index seen.
    """
    edges: dict[tuple[int, int], int] = {}
    max_index = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListError(lineno, f"expected two node indices, got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(lineno, f"expected two node indices, got {line!r}") from None
        if u < 0 or v < 0:
            raise EdgeListError(lineno, f"negative node index in {line!r}")
        if u == v:
            raise EdgeListError(lineno, f"self-loop at node {u}")
        key = edge_key(u, v)
        if key in edges:
            raise EdgeListError(lineno, f"duplicate edge {u} {v} (first on line {edges[key]})")
        edges[key] = lineno
        max_index = max(max_index, u, v)
    if max_index < 0:
        raise EdgeListError(0, "document contains no edges")
    return Graph(max_index + 1, frozenset(edges))


def to_edge_list(g: Graph) -> str:
    """Render back to the edge-list format, edges sorted."""
    return "".join(f"{u} {v}\n" for u, v in sorted(g.edges))


def is_connected(g: Graph) -> bool:
    """True iff every node is reachable from node 0."""
    adj = adjacency_lists(g)
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.node_count


def two_coloring(g: Graph) -> tuple[int, ...] | None:
    """A proper 2-coloring (0/1 per node), or None if some cycle is odd.

    For a connected graph this decides the period of the move-to-a-random-
    neighbor walk: a coloring exists exactly when the walk has period 2.
    """
    adj = adjacency_lists(g)
    color = [-1] * g.node_count
    for start in range(g.node_count):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    return tuple(color)


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None
