"""Group actions on graphs: faithfulness, freeness, local actions, and the
behaviour of normal subgroups.

A :class:`GraphAction` stores, for each generator of the acting group, a
vertex permutation and an oriented-edge permutation.  Internally the three
partial permutations (group points, vertices, edges) are fused into one
"combined" permutation on a disjoint union of blocks; the assignment
extends to a homomorphism exactly when the combined group has the same
order as the acting group, and images of arbitrary elements are read off
by stripping along the combined stabilizer chain (whose base points all
lie in the group block).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ActionNotFree, NotNormal, PreconditionFailed
from .permcore import DEFAULT_ELEMENT_CAP, Permutation, PermGroup
from .serregraph import quotient_graph


class GraphAction:
    def __init__(self, group, graph, vertex_images, edge_images):
        vertex_images = [Permutation(p) if not isinstance(p, Permutation) else p
                         for p in vertex_images]
        edge_images = [Permutation(p) if not isinstance(p, Permutation) else p
                       for p in edge_images]
        if len(vertex_images) != len(group.generators) or \
                len(edge_images) != len(group.generators):
            raise ValueError("one vertex and one edge image per generator")
        nv, ne = graph.n_vertices, graph.n_oriented_edges
        for vp, ep in zip(vertex_images, edge_images):
            if vp.degree != nv or ep.degree != ne:
                raise ValueError("image degree mismatch")
            for e in range(ne):
                if graph.d0[ep(e)] != vp(graph.d0[e]) or \
                        graph.d1[ep(e)] != vp(graph.d1[e]):
                    raise PreconditionFailed(
                        f"edge image of {e} incompatible with endpoints")
                if ep(graph.rev[e]) != graph.rev[ep(e)]:
                    raise PreconditionFailed(
                        f"edge image of {e} incompatible with reversal")
        self.group = group
        self.graph = graph
        self.vertex_images = tuple(vertex_images)
        self.edge_images = tuple(edge_images)
        d = group.degree
        combined_gens = []
        for g, vp, ep in zip(group.generators, vertex_images, edge_images):
            images = list(g.images)
            images += [d + vp(v) for v in range(nv)]
            images += [d + nv + ep(e) for e in range(ne)]
            combined_gens.append(Permutation(images))
        self._combined = PermGroup(d + nv + ne, combined_gens)
        if self._combined.order() != group.order():
            raise PreconditionFailed(
                "generator images do not define a homomorphism")
        self._memo = {}

    # -- element images --------------------------------------------------

    def _lift(self, g):
        """Combined permutation extending the group element ``g``."""
        if not isinstance(g, Permutation):
            g = Permutation.from_cycles(g, degree=self.group.degree)
        cached = self._memo.get(g.images)
        if cached is not None:
            return cached
        self._combined._ensure_bsgs()
        d = self.group.degree
        acc = Permutation.identity(self._combined.degree)
        residue = g
        for lvl in self._combined._levels:
            # every base point sits in the group block: any combined element
            # with trivial group part is trivial
            assert lvl.base < d
            t = lvl.transversal.get(residue.images[lvl.base])
            if t is None:
                raise ValueError("element is not in the acting group")
            residue = residue * Permutation(t.inverse().images[:d])
            acc = t * acc
        if not residue.is_identity():
            raise ValueError("element is not in the acting group")
        self._memo[g.images] = acc
        return acc

    def vertex_image(self, g):
        d, nv = self.group.degree, self.graph.n_vertices
        lifted = self._lift(g)
        return Permutation(lifted.images[x] - d for x in range(d, d + nv))

    def edge_image(self, g):
        d, nv = self.group.degree, self.graph.n_vertices
        lifted = self._lift(g)
        base = d + nv
        return Permutation(lifted.images[x] - base
                           for x in range(base, self._combined.degree))

    # -- orbits ----------------------------------------------------------

    def vertex_orbits(self):
        return PermGroup(self.graph.n_vertices, self.vertex_images).orbits() \
            if self.vertex_images else \
            [[v] for v in range(self.graph.n_vertices)]

    def edge_orbits(self):
        return PermGroup(self.graph.n_oriented_edges, self.edge_images).orbits() \
            if self.edge_images else \
            [[e] for e in range(self.graph.n_oriented_edges)]

    def is_vertex_transitive(self):
        return len(self.vertex_orbits()) == 1

    def has_edge_inversion(self):
        """Some element maps an oriented edge to its reverse, i.e. some edge
        orbit contains a reversal pair."""
        rev = self.graph.rev
        for orbit in self.edge_orbits():
            members = set(orbit)
            if any(rev[e] in members for e in orbit):
                return True
        return False

    def is_faithful(self):
        moved = PermGroup(self.graph.n_vertices + self.graph.n_oriented_edges,
                          [self._fuse_vertex_edge(vp, ep)
                           for vp, ep in zip(self.vertex_images, self.edge_images)])
        return moved.order() == self.group.order()

    def _fuse_vertex_edge(self, vp, ep):
        nv = self.graph.n_vertices
        return Permutation(list(vp.images) + [nv + x for x in ep.images])

    def is_free_on_vertices(self):
        order = self.group.order()
        return all(len(orbit) == order for orbit in self.vertex_orbits())

    # -- stabilizers -----------------------------------------------------

    def vertex_stabilizer(self, x):
        """Stabilizer of a vertex, as a subgroup of the acting group."""
        d = self.group.degree
        stab = self._combined.point_stabilizer(d + x)
        gens = [Permutation(g.images[:d]) for g in stab.generators]
        return PermGroup(d, gens)

    def local_action(self, x):
        """Image of the vertex stabilizer on the edges with origin ``x``.

        Edge slots are sorted by oriented-edge id, so the resulting group is
        reproducible.
        """
        d, nv = self.group.degree, self.graph.n_vertices
        slots = sorted(self.graph.edges_at(x))
        index = {e: i for i, e in enumerate(slots)}
        stab = self._combined.point_stabilizer(d + x)
        gens = []
        for g in stab.generators:
            gens.append(Permutation(index[g.images[d + nv + e] - d - nv]
                                    for e in slots))
        return PermGroup(max(len(slots), 1), gens)

    def fixes_star_subgroup(self, x):
        """Subgroup fixing the vertex ``x`` and every edge at ``x``
        (the kernel of the local action)."""
        d, nv = self.group.degree, self.graph.n_vertices
        sub = self._combined.point_stabilizer(d + x)
        for e in sorted(self.graph.edges_at(x)):
            sub = sub.point_stabilizer(d + nv + e)
        return PermGroup(d, [Permutation(g.images[:d]) for g in sub.generators])

    def edge_inverters(self, e, cap=DEFAULT_ELEMENT_CAP):
        """All group elements mapping the oriented edge ``e`` to its
        reverse."""
        target = self.graph.rev[e]
        out = []
        for g in self.group.elements(cap):
            if self.edge_image(g)(e) == target:
                out.append(g)
        return out

    def restricted_to(self, subgroup):
        """The same action restricted to a subgroup of the acting group."""
        vgens = [self.vertex_image(g) for g in subgroup.generators]
        egens = [self.edge_image(g) for g in subgroup.generators]
        return GraphAction(subgroup, self.graph, vgens, egens)


@dataclass(frozen=True)
class FreenessReport:
    faithful: bool
    vertex_transitive: bool
    free_on_vertices: bool
    has_edge_inversion: bool
    free: bool

    def as_dict(self):
        return {
            "faithful": self.faithful,
            "vertex_transitive": self.vertex_transitive,
            "free_on_vertices": self.free_on_vertices,
            "has_edge_inversion": self.has_edge_inversion,
            "free": self.free,
        }


def freeness_report(action):
    free_v = action.is_free_on_vertices()
    inversion = action.has_edge_inversion()
    return FreenessReport(
        faithful=action.is_faithful(),
        vertex_transitive=action.is_vertex_transitive(),
        free_on_vertices=free_v,
        has_edge_inversion=inversion,
        free=free_v and not inversion,
    )


def _subgroup_action_orbits(action, subgroup):
    vgens = [action.vertex_image(g) for g in subgroup.generators]
    egens = [action.edge_image(g) for g in subgroup.generators]
    nv, ne = action.graph.n_vertices, action.graph.n_oriented_edges
    vorbits = PermGroup(nv, vgens).orbits() if vgens else [[v] for v in range(nv)]
    eorbits = PermGroup(ne, egens).orbits() if egens else [[e] for e in range(ne)]
    return vorbits, eorbits


def kernel_on_quotient_check(action, normal):
    """The kernel of the induced action on the orbit quotient equals the
    normal subgroup itself.

    Requires the graph connected, ``normal`` normal in the acting group,
    and the restricted action free.  Under those hypotheses the check must
    come out true; the function exists to verify that on concrete inputs.
    """
    if not action.graph.is_connected():
        raise PreconditionFailed("graph must be connected")
    if not action.group.is_normal(normal):
        raise NotNormal("subgroup is not normal in the acting group")
    sub_action = action.restricted_to(normal)
    rep = freeness_report(sub_action)
    if not rep.free:
        raise ActionNotFree("normal subgroup does not act freely")
    vorbits, eorbits = _subgroup_action_orbits(action, normal)
    quotient_graph(action.graph, vorbits, eorbits)  # validates the quotient
    vblock = {v: i for i, orbit in enumerate(vorbits) for v in orbit}
    eblock = {e: i for i, orbit in enumerate(eorbits) for e in orbit}
    induced = []
    for vp, ep in zip(action.vertex_images, action.edge_images):
        iv = [None] * len(vorbits)
        for v in range(action.graph.n_vertices):
            iv[vblock[v]] = vblock[vp(v)]
        ie = [None] * len(eorbits)
        for e in range(action.graph.n_oriented_edges):
            ie[eblock[e]] = eblock[ep(e)]
        fused = list(iv) + [len(vorbits) + x for x in ie]
        induced.append(Permutation(fused))
    image_order = PermGroup(len(vorbits) + len(eorbits), induced).order()
    kernel_order = action.group.order() // image_order
    return kernel_order == normal.order()


@dataclass(frozen=True)
class NormalActionClassification:
    case: str  # FreeOnVertices | EdgeTransitiveVertexTransitive | EdgeTransitiveBipartite
    vertex_orbit_count: int
    vertex_orbit_sizes: tuple
    transitive_on_geometric_edges: bool


def classify_normal_action(action, normal, cap=DEFAULT_ELEMENT_CAP):
    """Trichotomy for how a normal subgroup can sit inside a
    vertex-transitive action with quasi-primitive local action: it acts
    freely on vertices, or it is vertex-transitive, or it has exactly two
    vertex orbits forming a bipartition; in the last two cases it is
    transitive on geometric edges.
    """
    if not action.is_vertex_transitive():
        raise PreconditionFailed("acting group is not vertex-transitive")
    if not action.local_action(0).is_quasi_primitive(cap):
        raise PreconditionFailed("local action is not quasi-primitive")
    if not action.group.is_normal(normal):
        raise NotNormal("subgroup is not normal in the acting group")
    vorbits, eorbits = _subgroup_action_orbits(action, normal)
    sizes = tuple(sorted(len(o) for o in vorbits))
    rev = action.graph.rev
    geom = {frozenset((e, rev[e])) for e in range(action.graph.n_oriented_edges)}
    geom_orbit_of = {}
    for i, orbit in enumerate(eorbits):
        for e in orbit:
            geom_orbit_of[e] = i
    geom_classes = {frozenset((geom_orbit_of[min(p)], geom_orbit_of[max(p)]))
                    for p in geom}
    edge_transitive = len(geom_classes) == 1
    n_orbits = len(vorbits)
    order = normal.order()
    if all(len(o) == order for o in vorbits):
        case = "FreeOnVertices"
    elif n_orbits == 1:
        case = "EdgeTransitiveVertexTransitive"
    elif n_orbits == 2:
        parts = action.graph.bipartition()
        if parts is None or sorted(map(sorted, vorbits)) != sorted(map(list, parts)):
            raise PreconditionFailed("two orbits do not form a bipartition")
        case = "EdgeTransitiveBipartite"
    else:
        raise PreconditionFailed("orbit structure outside the trichotomy")
    if case != "FreeOnVertices" and not edge_transitive:
        raise PreconditionFailed("expected transitivity on geometric edges")
    return NormalActionClassification(
        case=case,
        vertex_orbit_count=n_orbits,
        vertex_orbit_sizes=sizes,
        transitive_on_geometric_edges=edge_transitive,
    )


# -- canned actions ------------------------------------------------------

def action_from_vertex_group(graph, vertex_group):
    """Extend a permutation group on the vertices to a graph action.

    Only valid for graphs without parallel edges, where a vertex pair
    determines at most one geometric edge.
    """
    lookup = {}
    for e in range(graph.n_oriented_edges):
        key = (graph.d0[e], graph.d1[e])
        if key in lookup:
            raise PreconditionFailed("graph has parallel edges; supply edge images")
        lookup[key] = e
    edge_images = []
    for vp in vertex_group.generators:
        try:
            edge_images.append(Permutation(
                lookup[(vp(graph.d0[e]), vp(graph.d1[e]))]
                for e in range(graph.n_oriented_edges)))
        except KeyError:
            raise PreconditionFailed(
                "vertex group is not a group of graph automorphisms") from None
    return GraphAction(vertex_group, graph, list(vertex_group.generators),
                       edge_images)


def left_cayley_action(group, genset, cap=None):
    """Left-translation action of a group on its own Cayley graph."""
    from .serregraph import cayley_graph

    graph = cayley_graph(group, genset, cap=cap)
    elems = list(graph.vertex_labels)
    index = {p.images: i for i, p in enumerate(elems)}
    k = len(genset)
    vgens, egens = [], []
    for g in group.generators:
        gi = g.inverse()
        vp = Permutation(index[(gi * h).images] for h in elems)
        egens.append(Permutation(vp(e // k) * k + e % k
                                 for e in range(graph.n_oriented_edges)))
        vgens.append(vp)
    return GraphAction(group, graph, vgens, egens)
