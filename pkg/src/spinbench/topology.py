"""Chimera graph construction and queries.

A Chimera graph C(m, n, k) is an m x n grid of K(k, k) unit cells.  Within
a cell the two shores are fully connected; shore-0 qubits couple to the
shore-0 qubits of the vertically adjacent cells (same in-shore index), and
shore-1 qubits couple horizontally.  Broken qubits are modeled as deleted
vertices (their couplers disappear); broken couplers as deleted edges.

Vertex indexing is canonical and documented so serialized instances are
portable: row-major over cells, shore 0 before shore 1, then in-shore
index::

    id(r, c, u, i) = (r * cols + c) * 2 * shore + u * shore + i

The bipartition used by the samplers assigns vertex (r, c, u, i) to side A
when (r + c + u) is even.  Every Chimera edge changes exactly one of r, c,
u, so the two endpoints always land on opposite sides.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np


class Graph:
    """Immutable vertex/edge structure with cached adjacency.

    Accepts arbitrary (not necessarily Chimera) topologies so the exact
    oracles can be exercised on toy graphs.  If the graph is bipartite a
    deterministic 2-coloring is stored in ``side_of`` (vertex -> 'A'/'B');
    otherwise ``side_of`` is None and the checkerboard samplers refuse it.
    """

    def __init__(self, vertices: Iterable[int], edges: Iterable[tuple[int, int]]):
        self.vertices: tuple[int, ...] = tuple(sorted(set(int(v) for v in vertices)))
        pos = {v: i for i, v in enumerate(self.vertices)}
        canon = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u not in pos or v not in pos:
                raise ValueError(f"edge ({u},{v}) touches unknown vertex")
            canon.add((u, v) if u < v else (v, u))
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(canon))
        self._pos = pos
        n = len(self.vertices)
        if self.edges:
            ep = np.array([(pos[u], pos[v]) for u, v in self.edges], dtype=np.int32)
        else:
            ep = np.zeros((0, 2), dtype=np.int32)
        self.edge_pos: np.ndarray = ep
        nbrs: list[list[int]] = [[] for _ in range(n)]
        nbr_edges: list[list[int]] = [[] for _ in range(n)]
        for e, (pu, pv) in enumerate(ep):
            nbrs[pu].append(pv)
            nbrs[pv].append(pu)
            nbr_edges[pu].append(e)
            nbr_edges[pv].append(e)
        self.neighbors = tuple(np.array(a, dtype=np.int32) for a in nbrs)
        self.neighbor_edges = tuple(np.array(a, dtype=np.int32) for a in nbr_edges)
        self.side_of: dict[int, str] | None = self._two_color()

    def _two_color(self) -> dict[int, str] | None:
        n = len(self.vertices)
        color = np.full(n, -1, dtype=np.int8)
        for start in range(n):
            if color[start] >= 0:
                continue
            color[start] = 0
            stack = [start]
            while stack:
                p = stack.pop()
                for q in self.neighbors[p]:
                    if color[q] < 0:
                        color[q] = 1 - color[p]
                        stack.append(int(q))
                    elif color[q] == color[p]:
                        return None
        self._side_a_mask = color == 0
        return {v: ("A" if color[i] == 0 else "B") for i, v in enumerate(self.vertices)}

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def position(self, vertex: int) -> int:
        return self._pos[vertex]

    def side_a_mask(self) -> np.ndarray:
        """Boolean mask over vertex positions, True for side A."""
        if self.side_of is None:
            raise ValueError("graph is not bipartite")
        return self._side_a_mask


class ChimeraGraph(Graph):
    def __init__(self, rows: int, cols: int, shore: int = 4,
                 broken: Iterable[int] = (), broken_edges: Iterable[tuple[int, int]] = ()):
        if rows < 1 or cols < 1 or shore < 1:
            raise ValueError("rows, cols, shore must be >= 1")
        self.rows, self.cols, self.shore = rows, cols, shore
        total = rows * cols * 2 * shore
        self.broken = frozenset(int(v) for v in broken)
        for v in self.broken:
            if not 0 <= v < total:
                raise ValueError(f"broken vertex {v} outside [0, {total})")
        vertices = [v for v in range(total) if v not in self.broken]

        def vid(r, c, u, i):
            return (r * cols + c) * 2 * shore + u * shore + i

        edges = []
        for r in range(rows):
            for c in range(cols):
                for i in range(shore):
                    for j in range(shore):
                        edges.append((vid(r, c, 0, i), vid(r, c, 1, j)))
                if r + 1 < rows:
                    for i in range(shore):
                        edges.append((vid(r, c, 0, i), vid(r + 1, c, 0, i)))
                if c + 1 < cols:
                    for i in range(shore):
                        edges.append((vid(r, c, 1, i), vid(r, c + 1, 1, i)))
        alive = [(u, v) for u, v in edges if u not in self.broken and v not in self.broken]
        be = frozenset((min(int(u), int(v)), max(int(u), int(v))) for u, v in broken_edges)
        alive_set = set(alive)
        for u, v in be:
            if (u, v) not in alive_set:
                raise ValueError(f"broken_edge ({u},{v}) is not a Chimera edge of this graph")
        self.broken_edges = be
        alive = [e for e in alive if e not in be]
        super().__init__(vertices, alive)
        # Parity coloring; agrees edge-by-edge with the generic 2-coloring.
        side = {}
        for v in self.vertices:
            cell, rem = divmod(v, 2 * shore)
            r, c = divmod(cell, cols)
            u = rem // shore
            side[v] = "A" if (r + c + u) % 2 == 0 else "B"
        self.side_of = side
        self._side_a_mask = np.array([side[v] == "A" for v in self.vertices])

    def coordinates(self, vertex: int) -> tuple[int, int, int, int]:
        """(row, col, shore-side u, in-shore index) of a vertex id."""
        cell, rem = divmod(vertex, 2 * self.shore)
        r, c = divmod(cell, self.cols)
        u, i = divmod(rem, self.shore)
        return r, c, u, i

    def vertex_id(self, r: int, c: int, u: int, i: int) -> int:
        return (r * self.cols + c) * 2 * self.shore + u * self.shore + i


def build_chimera(rows: int, cols: int, shore: int = 4,
                  broken: Iterable[int] = (),
                  broken_edges: Iterable[tuple[int, int]] = ()) -> ChimeraGraph:
    """Construct C(rows, cols, shore) with the given deletions."""
    return ChimeraGraph(rows, cols, shore, broken, broken_edges)


def bipartite_sides(graph: Graph) -> tuple[set[int], set[int]]:
    """The two independent vertex sets; no edge has both ends in one set."""
    if graph.side_of is None:
        raise ValueError("graph is not bipartite")
    a = {v for v, s in graph.side_of.items() if s == "A"}
    b = {v for v, s in graph.side_of.items() if s == "B"}
    return a, b


def write_graph_spec(graph: ChimeraGraph) -> str:
    lines = [f"chimera {graph.rows} {graph.cols} {graph.shore}"]
    if graph.broken:
        lines.append("broken " + " ".join(str(v) for v in sorted(graph.broken)))
    for u, v in sorted(graph.broken_edges):
        lines.append(f"broken_edge {u} {v}")
    return "\n".join(lines) + "\n"


def parse_graph_spec(text: str) -> ChimeraGraph:
    """Parse the graph spec format (see write_graph_spec)."""
    rows = cols = shore = None
    broken: list[int] = []
    broken_edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if tok[0] == "chimera":
            if len(tok) != 4:
                raise ValueError(f"line {lineno}: expected 'chimera m n k'")
            rows, cols, shore = (int(t) for t in tok[1:])
        elif tok[0] == "broken":
            broken.extend(int(t) for t in tok[1:])
        elif tok[0] == "broken_edge":
            if len(tok) != 3:
                raise ValueError(f"line {lineno}: expected 'broken_edge u v'")
            broken_edges.append((int(tok[1]), int(tok[2])))
        else:
            raise ValueError(f"line {lineno}: unknown directive {tok[0]!r}")
    if rows is None:
        raise ValueError("missing 'chimera m n k' header")
    return ChimeraGraph(rows, cols, shore, broken, broken_edges)
