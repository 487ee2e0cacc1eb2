"""Graphs, vertex bipartitions, cut vectors, and cut-polytope configurations.

Vertices are labeled 1..m and vertex subsets are held as bitmasks (bit v-1
stands for vertex v).  The edge order of a graph is part of its identity: it
fixes the coordinate order of every cut vector.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .errors import EdgeListParseError, VerificationError

MAX_VERTICES = 24  # 2^(m-1) cut vectors are enumerated; keep this desk-scale


def _as_mask(vertices, vertex_count: int) -> int:
    if isinstance(vertices, int):
        if vertices < 0 or vertices >= (1 << vertex_count):
            raise ValueError(f"vertex mask {vertices} out of range for {vertex_count} vertices")
        return vertices
    mask = 0
    for v in vertices:
        if not 1 <= v <= vertex_count:
            raise ValueError(f"vertex {v} out of range 1..{vertex_count}")
        mask |= 1 << (v - 1)
    return mask


def _mask_to_set(mask: int) -> frozenset[int]:
    return frozenset(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


class Graph:
    """Finite connected simple graph with an ordered edge list.

    Edges are unordered pairs {u, v} stored as (u, v) with u < v, in input
    order.  Construction rejects loops, duplicate edges, disconnected graphs,
    and more than MAX_VERTICES vertices.
    """

    __slots__ = ("vertex_count", "edges", "_edge_masks")

    def __init__(self, vertex_count: int, edges):
        if vertex_count < 1:
            raise ValueError("vertex count must be positive")
        if vertex_count > MAX_VERTICES:
            raise ValueError(f"vertex count {vertex_count} exceeds cap {MAX_VERTICES}")
        normalized = []
        seen = set()
        for e in edges:
            u, v = e
            if not (1 <= u <= vertex_count and 1 <= v <= vertex_count):
                raise ValueError(f"edge {e} has endpoints outside 1..{vertex_count}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise ValueError(f"duplicate edge {{{u},{v}}}")
            seen.add((u, v))
            normalized.append((u, v))
        self.vertex_count = vertex_count
        self.edges = tuple(normalized)
        self._edge_masks = tuple((1 << (u - 1)) | (1 << (v - 1)) for u, v in self.edges)
        if not self._is_connected():
            raise ValueError("graph is not connected")

    def _is_connected(self) -> bool:
        if self.vertex_count == 1:
            return True
        adjacency = {v: [] for v in range(1, self.vertex_count + 1)}
        for u, v in self.edges:
            adjacency[u].append(v)
            adjacency[v].append(u)
        seen = {1}
        stack = [1]
        while stack:
            for w in adjacency[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.vertex_count

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.vertex_count == other.vertex_count
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.vertex_count, self.edges))

    def __repr__(self):
        return f"Graph({self.vertex_count}, {list(self.edges)})"


class Partition:
    """Unordered bipartition A|B of {1..n}, stored canonically.

    The canonical A side is the side not containing vertex 1, so A|B and B|A
    compare and hash identically.
    """

    __slots__ = ("vertex_count", "a_mask")

    def __init__(self, vertex_count: int, side):
        mask = _as_mask(side, vertex_count)
        full = (1 << vertex_count) - 1
        if mask & 1:
            mask = full & ~mask
        self.vertex_count = vertex_count
        self.a_mask = mask

    @property
    def a_side(self) -> frozenset[int]:
        return _mask_to_set(self.a_mask)

    @property
    def b_side(self) -> frozenset[int]:
        full = (1 << self.vertex_count) - 1
        return _mask_to_set(full & ~self.a_mask)

    @property
    def canonical(self) -> bool:
        """Instances are always stored in canonical form (vertex 1 on the B side)."""
        return True

    @property
    def min_size(self) -> int:
        a = self.a_mask.bit_count()
        return min(a, self.vertex_count - a)

    @property
    def splits_12(self) -> bool:
        """True when vertices 1 and 2 lie on opposite sides."""
        return bool(self.a_mask >> 1 & 1)

    def encode(self) -> tuple[int, ...]:
        """Sorted vertex tuple of the side not containing vertex 1."""
        return tuple(sorted(self.a_side))

    def __eq__(self, other):
        return (
            isinstance(other, Partition)
            and self.vertex_count == other.vertex_count
            and self.a_mask == other.a_mask
        )

    def __hash__(self):
        return hash((self.vertex_count, self.a_mask))

    def __repr__(self):
        a = ",".join(map(str, sorted(self.a_side)))
        b = ",".join(map(str, sorted(self.b_side)))
        return f"Partition({{{a}}}|{{{b}}})"


@dataclass(frozen=True)
class CutVector:
    """0/1 vector indexed by the graph's edges: 1 exactly on edges crossing the cut."""

    coords: tuple[int, ...]

    def __iter__(self):
        return iter(self.coords)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.coords[i]


@dataclass(frozen=True)
class CutConfiguration:
    """Matrix whose columns are the cut vectors with an appended coordinate 1."""

    columns: tuple[tuple[int, ...], ...]
    graph: Graph

    @property
    def row_count(self) -> int:
        return len(self.columns[0])

    @property
    def column_count(self) -> int:
        return len(self.columns)


def cut_vector(g: Graph, a) -> CutVector:
    """Cut vector of the bipartition separating subset `a` from its complement.

    Coordinate i is 1 iff edge e_i has exactly one endpoint in `a`; the result
    is invariant under replacing `a` by its complement.
    """
    mask = _as_mask(a, g.vertex_count)
    coords = tuple(1 if (mask & em).bit_count() == 1 else 0 for em in g._edge_masks)
    return CutVector(coords)


def all_partitions(vertex_count: int) -> list[Partition]:
    """All 2^(n-1) canonical bipartitions, ordered by canonical encoding."""
    return [Partition(vertex_count, m << 1) for m in range(1 << (vertex_count - 1))]


def cut_polytope_vertices(g: Graph) -> list[CutVector]:
    """The 2^(m-1) distinct cut vectors of g, one per canonical bipartition.

    Order is deterministic: ascending canonical-mask order of the side not
    containing vertex 1.
    """
    if g.vertex_count < 2:
        raise ValueError("cut polytope needs at least 2 vertices")
    vertices = [cut_vector(g, p.a_mask) for p in all_partitions(g.vertex_count)]
    distinct = len(set(v.coords for v in vertices))
    if distinct != len(vertices):
        # cannot happen for connected graphs; guards the connectivity invariant
        raise VerificationError("cut vectors of a connected graph collided")
    return vertices


def configuration(g: Graph) -> CutConfiguration:
    """Cut vectors of g as matrix columns with a final all-ones row appended."""
    cols = tuple(v.coords + (1,) for v in cut_polytope_vertices(g))
    return CutConfiguration(columns=cols, graph=g)


# ---------------------------------------------------------------------------
# named constructors
# ---------------------------------------------------------------------------

def complete_bipartite(p: int, q: int) -> Graph:
    """K_{p,q} with parts {1..p} and {p+1..p+q}; edges in lexicographic (i, j) order."""
    if p < 1 or q < 1:
        raise ValueError("both parts must be nonempty")
    edges = [(i, j) for i in range(1, p + 1) for j in range(p + 1, p + q + 1)]
    return Graph(p + q, edges)


def cycle(n: int) -> Graph:
    """Cycle on n >= 3 vertices; edges {1,2},...,{n-1,n},{1,n}."""
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    edges = [(i, i + 1) for i in range(1, n)] + [(1, n)]
    return Graph(n, edges)


def path(edge_count: int) -> Graph:
    """Path with the given number of edges (path(1) is a single edge)."""
    if edge_count < 1:
        raise ValueError("path needs at least one edge")
    return Graph(edge_count + 1, [(i, i + 1) for i in range(1, edge_count + 1)])


def tree_from_edges(edges) -> Graph:
    """Tree from an explicit edge list; vertex count is the largest label."""
    edges = [tuple(e) for e in edges]
    if not edges:
        raise ValueError("tree needs at least one edge")
    m = max(max(e) for e in edges)
    g = Graph(m, edges)  # connectivity checked here
    if g.edge_count != m - 1:
        raise ValueError("edge list is connected but not acyclic")
    return g


def fundamental_cycles(g: Graph) -> list[list[int]]:
    """Edge-index cycles from a BFS spanning tree rooted at vertex 1.

    One cycle per non-tree edge: the tree path between its endpoints plus the
    edge itself.  Empty for trees.
    """
    parent = {1: None}
    parent_edge = {}
    order = [1]
    adjacency = {v: [] for v in range(1, g.vertex_count + 1)}
    for idx, (u, v) in enumerate(g.edges):
        adjacency[u].append((v, idx))
        adjacency[v].append((u, idx))
    queue = [1]
    tree_edges = set()
    while queue:
        u = queue.pop(0)
        for w, idx in adjacency[u]:
            if w not in parent:
                parent[w] = u
                parent_edge[w] = idx
                tree_edges.add(idx)
                order.append(w)
                queue.append(w)
    depth = {1: 0}
    for v in order[1:]:
        depth[v] = depth[parent[v]] + 1
    cycles = []
    for idx, (u, v) in enumerate(g.edges):
        if idx in tree_edges:
            continue
        path_edges = [idx]
        a, b = u, v
        while depth[a] > depth[b]:
            path_edges.append(parent_edge[a])
            a = parent[a]
        while depth[b] > depth[a]:
            path_edges.append(parent_edge[b])
            b = parent[b]
        while a != b:
            path_edges.append(parent_edge[a])
            path_edges.append(parent_edge[b])
            a, b = parent[a], parent[b]
        cycles.append(sorted(path_edges))
    return cycles


# ---------------------------------------------------------------------------
# plain-text / CSV / JSON interchange
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format: first line m, then one 'u v' per line."""
    vertex_count = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        parts = line.split()
        if vertex_count is None:
            if len(parts) != 1:
                raise EdgeListParseError(lineno, "expected a single vertex count")
            try:
                vertex_count = int(parts[0])
            except ValueError:
                raise EdgeListParseError(lineno, f"bad vertex count {parts[0]!r}") from None
            continue
        if len(parts) != 2:
            raise EdgeListParseError(lineno, "expected two endpoints 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(lineno, f"bad endpoint in {line!r}") from None
        edges.append((lineno, u, v))
    if vertex_count is None:
        raise EdgeListParseError(1, "empty input")
    try:
        return Graph(vertex_count, [(u, v) for _, u, v in edges])
    except ValueError as exc:
        # attribute structural problems to the first edge line if possible
        lineno = edges[0][0] if edges else 1
        raise EdgeListParseError(lineno, str(exc)) from None


def format_edge_list(g: Graph) -> str:
    lines = [str(g.vertex_count)]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_edge_list(path_) -> Graph:
    with open(path_, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def write_edge_list(g: Graph, path_) -> None:
    with open(path_, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g))


def vertices_to_csv(vectors) -> str:
    """One cut vector per CSV row."""
    buf = io.StringIO()
    writer = csv.writer(buf)
    for v in vectors:
        writer.writerow(list(v))
    return buf.getvalue()


def vertices_to_json(vectors) -> str:
    return json.dumps([list(v) for v in vectors])
