"""Graphs with oriented edge pairs.

A graph here is a set of vertices together with oriented edges; every
oriented edge ``e`` has endpoints ``d0(e)``, ``d1(e)`` and a reverse
``rev(e)`` with ``rev(rev(e)) == e`` and ``rev(e) != e``.  A geometric
edge is a pair ``{e, rev(e)}``.  Loops (``d0 == d1``) are not supported;
parallel edges are.

Non-goals: drawing and layout.  The only export format is the line-based
text form produced by :meth:`SerreGraph.to_text`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NonSymmetricSet, PreconditionFailed, QuotientCollapse


class SerreGraph:
    """Finite graph with involutive edge reversal and no loops.

    ``d0``, ``d1`` and ``rev`` are parallel tuples indexed by oriented-edge
    id.  Optional ``vertex_labels`` carry construction-time names (group
    elements, coordinate tuples); structure never depends on them.
    """

    def __init__(self, n_vertices, d0, d1, rev, vertex_labels=None):
        d0, d1, rev = tuple(d0), tuple(d1), tuple(rev)
        m = len(d0)
        if len(d1) != m or len(rev) != m:
            raise ValueError("edge arrays must have equal length")
        for e in range(m):
            if not (0 <= d0[e] < n_vertices and 0 <= d1[e] < n_vertices):
                raise ValueError(f"edge {e} has endpoint out of range")
            if d0[e] == d1[e]:
                raise ValueError(f"edge {e} is a loop")
            if rev[e] == e or rev[rev[e]] != e:
                raise ValueError(f"reversal is not a fixed-point-free involution at {e}")
            if d0[rev[e]] != d1[e] or d1[rev[e]] != d0[e]:
                raise ValueError(f"reversal of edge {e} has wrong endpoints")
        if vertex_labels is not None and len(vertex_labels) != n_vertices:
            raise ValueError("label count mismatch")
        self.n_vertices = n_vertices
        self.d0 = d0
        self.d1 = d1
        self.rev = rev
        self.vertex_labels = tuple(vertex_labels) if vertex_labels is not None else None
        out = [[] for _ in range(n_vertices)]
        for e in range(m):
            out[d0[e]].append(e)
        self._out = [tuple(es) for es in out]

    @classmethod
    def from_geometric_edges(cls, n_vertices, pairs, vertex_labels=None):
        """Build from (u, v) endpoint pairs, one per geometric edge.  The
        oriented edges come out as ``2k`` (u to v) and ``2k+1`` (v to u)."""
        d0, d1, rev = [], [], []
        for k, (u, v) in enumerate(pairs):
            d0 += [u, v]
            d1 += [v, u]
            rev += [2 * k + 1, 2 * k]
        return cls(n_vertices, d0, d1, rev, vertex_labels)

    @property
    def n_oriented_edges(self):
        return len(self.d0)

    @property
    def n_geometric_edges(self):
        return len(self.d0) // 2

    def edges_at(self, v):
        """Oriented edges with origin ``v``."""
        return self._out[v]

    def degree(self, v):
        return len(self._out[v])

    def degree_sequence(self):
        return tuple(sorted(len(es) for es in self._out))

    def is_regular(self):
        degs = {len(es) for es in self._out}
        return len(degs) <= 1

    def neighbors(self, v):
        return sorted({self.d1[e] for e in self._out[v]})

    def is_connected(self):
        if self.n_vertices == 0:
            return True
        seen = {0}
        queue = [0]
        while queue:
            v = queue.pop(0)
            for e in self._out[v]:
                w = self.d1[e]
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.n_vertices

    def bipartition(self):
        """A 2-coloring as a (part0, part1) pair of sorted lists, or None."""
        color = [None] * self.n_vertices
        for start in range(self.n_vertices):
            if color[start] is not None:
                continue
            color[start] = 0
            queue = [start]
            while queue:
                v = queue.pop(0)
                for e in self._out[v]:
                    w = self.d1[e]
                    if color[w] is None:
                        color[w] = 1 - color[v]
                        queue.append(w)
                    elif color[w] == color[v]:
                        return None
        return (
            sorted(v for v in range(self.n_vertices) if color[v] == 0),
            sorted(v for v in range(self.n_vertices) if color[v] == 1),
        )

    def girth(self):
        """Length of a shortest cycle (2 for parallel edges), or None."""
        best = None
        for start in range(self.n_vertices):
            dist = {start: 0}
            parent_edge = {start: None}
            queue = [start]
            while queue:
                v = queue.pop(0)
                if best is not None and dist[v] * 2 >= best:
                    break
                for e in self._out[v]:
                    pe = parent_edge[v]
                    if pe is not None and e == self.rev[pe]:
                        continue
                    w = self.d1[e]
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        parent_edge[w] = e
                        queue.append(w)
                    else:
                        cand = dist[v] + dist[w] + 1
                        if best is None or cand < best:
                            best = cand
        return best

    def is_tree(self):
        return self.is_connected() and self.girth() is None

    # -- serialization ---------------------------------------------------

    def to_text(self):
        """One header line, then one line per oriented edge:
        ``id d0 d1 rev``."""
        lines = [f"serregraph {self.n_vertices} {self.n_oriented_edges}"]
        for e in range(self.n_oriented_edges):
            lines.append(f"{e} {self.d0[e]} {self.d1[e]} {self.rev[e]}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text):
        lines = [ln for ln in (s.strip() for s in text.splitlines())
                 if ln and not ln.startswith("#")]
        head = lines[0].split()
        if len(head) != 3 or head[0] != "serregraph":
            raise ValueError("bad header line")
        n, m = int(head[1]), int(head[2])
        if len(lines) != m + 1:
            raise ValueError(f"expected {m} edge lines, got {len(lines) - 1}")
        d0 = [0] * m
        d1 = [0] * m
        rev = [0] * m
        seen = set()
        for ln in lines[1:]:
            e, a, b, r = map(int, ln.split())
            if e in seen or not 0 <= e < m:
                raise ValueError(f"bad edge id {e}")
            seen.add(e)
            d0[e], d1[e], rev[e] = a, b, r
        return cls(n, d0, d1, rev)

    def __repr__(self):
        return f"SerreGraph({self.n_vertices} vertices, {self.n_geometric_edges} edges)"


@dataclass(frozen=True)
class StructureReport:
    n_vertices: int
    n_geometric_edges: int
    degree_sequence: tuple
    regular: bool
    connected: bool
    bipartite: bool
    girth: object  # int or None (forest)

    def lines(self):
        girth = "-" if self.girth is None else str(self.girth)
        return [
            f"vertices\t{self.n_vertices}",
            f"edges\t{self.n_geometric_edges}",
            f"degrees\t{' '.join(map(str, self.degree_sequence))}",
            f"regular\t{'yes' if self.regular else 'no'}",
            f"connected\t{'yes' if self.connected else 'no'}",
            f"bipartite\t{'yes' if self.bipartite else 'no'}",
            f"girth\t{girth}",
        ]


def structure_report(graph):
    return StructureReport(
        n_vertices=graph.n_vertices,
        n_geometric_edges=graph.n_geometric_edges,
        degree_sequence=graph.degree_sequence(),
        regular=graph.is_regular(),
        connected=graph.is_connected(),
        bipartite=graph.bipartition() is not None,
        girth=graph.girth(),
    )


# -- standard graphs -----------------------------------------------------

def complete_graph(n):
    if n < 2:
        raise ValueError("need at least 2 vertices")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return SerreGraph.from_geometric_edges(n, pairs)


def complete_bipartite_graph(m, n):
    if m < 1 or n < 1:
        raise ValueError("parts must be nonempty")
    pairs = [(u, m + v) for u in range(m) for v in range(n)]
    return SerreGraph.from_geometric_edges(m + n, pairs)


def cycle_graph(n):
    if n < 3:
        raise ValueError("need at least 3 vertices (no loops or parallel pairs)")
    pairs = [(v, (v + 1) % n) for v in range(n)]
    return SerreGraph.from_geometric_edges(n, pairs)


def cube_graph():
    """The 3-cube on vertex set {-1, +1}^3; vertices adjacent when they
    differ in one coordinate."""
    labels = [tuple(1 - 2 * ((i >> k) & 1) for k in range(3)) for i in range(8)]
    pairs = [(i, i ^ (1 << k)) for i in range(8) for k in range(3) if i < i ^ (1 << k)]
    return SerreGraph.from_geometric_edges(8, pairs, vertex_labels=labels)


def petersen_graph():
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5."""
    pairs = [(v, (v + 1) % 5) for v in range(5)]
    pairs += [(5 + v, 5 + (v + 2) % 5) for v in range(5)]
    pairs += [(v, v + 5) for v in range(5)]
    return SerreGraph.from_geometric_edges(10, pairs)


def theta_graph(d):
    """Two vertices joined by ``d`` parallel geometric edges."""
    if d < 2:
        raise ValueError("need at least 2 strands")
    return SerreGraph.from_geometric_edges(2, [(0, 1)] * d)


def cayley_graph(group, genset, cap=None):
    """Cayley graph of a finite permutation group.

    ``genset`` must be symmetric: closed under inversion and without the
    identity.  Vertices are the group elements in sorted image order
    (stored as labels); for each vertex ``g`` and generator ``s`` there is
    an oriented edge from ``g`` to ``g * s``, and its reverse is the edge
    labelled by ``s`` inverse at ``g * s``.
    """
    from .permcore import DEFAULT_ELEMENT_CAP

    genset = list(genset)
    if not genset:
        raise NonSymmetricSet("empty generating set")
    images = {s.images for s in genset}
    if len(images) != len(genset):
        raise NonSymmetricSet("repeated generator")
    for s in genset:
        if s.is_identity():
            raise NonSymmetricSet("identity in generating set")
        if s.inverse().images not in images:
            raise NonSymmetricSet(f"inverse of {s.cycle_string()} missing")
        if not group.contains(s):
            raise PreconditionFailed("generator outside the group")
    elems = sorted(group.elements(cap if cap is not None else DEFAULT_ELEMENT_CAP),
                   key=lambda p: p.images)
    if _generated_order(group.degree, genset) != group.order():
        raise PreconditionFailed("set does not generate the group")
    index = {p.images: i for i, p in enumerate(elems)}
    gen_index = {s.images: k for k, s in enumerate(genset)}
    n = len(elems)
    k = len(genset)
    d0, d1, rev = [], [], []
    for i, g in enumerate(elems):
        for s in genset:
            d0.append(i)
            d1.append(index[(g * s).images])
            # reverse of (g, s) is (g*s, s^-1)
            rev.append(index[(g * s).images] * k + gen_index[s.inverse().images])
    return SerreGraph(n, d0, d1, rev, vertex_labels=elems)


def _generated_order(degree, genset):
    from .permcore import PermGroup

    return PermGroup(degree, genset).order()


def quotient_graph(graph, vertex_blocks, edge_blocks):
    """Quotient by compatible partitions of vertices and oriented edges.

    Each block becomes one vertex / oriented edge; blocks must be unions
    that respect endpoints and reversal.  Raises ``QuotientCollapse`` when
    an edge's endpoints fall in one block (the image would be a loop) and
    ``PreconditionFailed`` when a block of edges meets its own reversal
    (the image reversal would have a fixed point) or when the partitions
    are incompatible with the incidence structure.
    """
    vmap = {}
    for i, block in enumerate(vertex_blocks):
        for v in block:
            vmap[v] = i
    emap = {}
    for i, block in enumerate(edge_blocks):
        for e in block:
            emap[e] = i
    if len(vmap) != graph.n_vertices or len(emap) != graph.n_oriented_edges:
        raise PreconditionFailed("partition does not cover the graph exactly")
    nv, ne = len(vertex_blocks), len(edge_blocks)
    d0 = [None] * ne
    d1 = [None] * ne
    rev = [None] * ne
    for e in range(graph.n_oriented_edges):
        i = emap[e]
        a, b, r = vmap[graph.d0[e]], vmap[graph.d1[e]], emap[graph.rev[e]]
        if a == b:
            raise QuotientCollapse(
                f"edge {e} joins vertices identified by the quotient")
        if r == i:
            raise PreconditionFailed(
                f"edge block {i} contains a reversal pair")
        for slot, val in ((d0, a), (d1, b), (rev, r)):
            if slot[i] is None:
                slot[i] = val
            elif slot[i] != val:
                raise PreconditionFailed("partition not compatible with incidence")
    return SerreGraph(nv, d0, d1, rev)
