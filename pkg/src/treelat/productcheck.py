"""Finite-side verification for groups acting on a product of two graphs.

An instance is one finite group together with actions on two graphs; the
hypothesis battery decides membership in the class E (transitive on the
vertex product, faithful factors, prescribed 2-transitive local actions)
and its subclass F (additionally free on the vertex product).  The module
also machine-checks the stabilizer factorization consequences and
certifies group factorizations G = AB with trivial intersection.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GroupTooLarge, NotInE, PreconditionFailed
from .graphaction import GraphAction, action_from_vertex_group
from .permcore import DEFAULT_ELEMENT_CAP, Permutation, PermGroup
from .serregraph import SerreGraph, complete_graph, cube_graph, theta_graph
from .verdict import classify_2transitive_small


class ProductActionInstance:
    """Two graph actions of one group, with paired generator images."""

    def __init__(self, action1, action2):
        if action1.group is not action2.group:
            g1, g2 = action1.group, action2.group
            if g1.degree != g2.degree or g1.generators != g2.generators:
                raise PreconditionFailed(
                    "both actions must share one generator list")
        self.group = action1.group
        self.a1 = action1
        self.a2 = action2

    def pair_generators(self):
        """Vertex permutations of the product VX1 x VX2, one per group
        generator, with pair (v1, v2) encoded as v1 * |VX2| + v2."""
        n2 = self.a2.graph.n_vertices
        out = []
        for vp1, vp2 in zip(self.a1.vertex_images, self.a2.vertex_images):
            images = []
            for v1 in range(self.a1.graph.n_vertices):
                w1 = vp1(v1) * n2
                images.extend(w1 + vp2(v2) for v2 in range(n2))
            out.append(Permutation(images))
        return out

    def product_vertex_group(self):
        n = self.a1.graph.n_vertices * self.a2.graph.n_vertices
        return PermGroup(n, self.pair_generators())

    def pair_stabilizer(self, x1, x2):
        """Stabilizer of (x1, x2), as a subgroup of the acting group."""
        s1 = self.a1.vertex_stabilizer(x1)
        s2 = self.a2.vertex_stabilizer(x2)
        return s1.intersection(s2)


@dataclass(frozen=True)
class HypothesisReport:
    hyp1: bool
    hyp2: bool
    hyp3: bool
    hyp4: bool
    hyp5: bool
    hyp6: bool
    witnesses: tuple
    member_of_E: bool
    member_of_F: bool

    def as_dict(self):
        d = {f"hyp{i}": getattr(self, f"hyp{i}") for i in range(1, 7)}
        d["member_of_E"] = self.member_of_E
        d["member_of_F"] = self.member_of_F
        d["witnesses"] = list(self.witnesses)
        return d


def _local_action_matches(action, target):
    """Same classification data: degree, order, and table label."""
    local = action.local_action(0)
    want = classify_2transitive_small(target)
    got = classify_2transitive_small(local)
    if (got.degree, got.order, got.label) == (want.degree, want.order, want.label):
        return True, None
    return False, (f"local action degree {got.degree} order {got.order} "
                   f"label {got.label}, expected degree {want.degree} "
                   f"order {want.order} label {want.label}")


def check_hypotheses(instance, f1, f2, cap=DEFAULT_ELEMENT_CAP):
    """Decide each membership hypothesis exactly; failures carry witnesses."""
    if instance.group.order() > cap:
        raise GroupTooLarge(instance.group.order(), cap)
    witnesses = []

    hyp1 = True
    for name, graph, f in (("X1", instance.a1.graph, f1),
                           ("X2", instance.a2.graph, f2)):
        if not graph.is_connected():
            hyp1 = False
            witnesses.append(f"hyp1: {name} is not connected")
        if not graph.is_regular() or graph.degree(0) != f.degree:
            hyp1 = False
            witnesses.append(f"hyp1: {name} is not {f.degree}-regular")

    # the paired action must embed the group into Aut(X1) x Aut(X2)
    fused = []
    nv1 = instance.a1.graph.n_vertices
    ne1 = instance.a1.graph.n_oriented_edges
    nv2 = instance.a2.graph.n_vertices
    ne2 = instance.a2.graph.n_oriented_edges
    for vp1, ep1, vp2, ep2 in zip(instance.a1.vertex_images,
                                  instance.a1.edge_images,
                                  instance.a2.vertex_images,
                                  instance.a2.edge_images):
        images = list(vp1.images)
        images += [nv1 + x for x in ep1.images]
        images += [nv1 + ne1 + x for x in vp2.images]
        images += [nv1 + ne1 + nv2 + x for x in ep2.images]
        fused.append(Permutation(images))
    hyp2 = PermGroup(nv1 + ne1 + nv2 + ne2, fused).order() == instance.group.order()
    if not hyp2:
        witnesses.append("hyp2: the paired action is not faithful on (X1, X2)")

    product = instance.product_vertex_group()
    orbit0 = product.orbit(0)
    hyp3 = len(orbit0) == product.degree
    if not hyp3:
        witnesses.append(f"hyp3: product orbit of (0,0) has size {len(orbit0)} "
                         f"of {product.degree}")

    hyp4 = True
    for name, action in (("X1", instance.a1), ("X2", instance.a2)):
        if not action.is_faithful():
            hyp4 = False
            witnesses.append(f"hyp4: action on {name} is not faithful")

    hyp5 = True
    for name, action, f in (("X1", instance.a1, f1), ("X2", instance.a2, f2)):
        if not action.is_vertex_transitive():
            hyp5 = False
            witnesses.append(f"hyp5: action on {name} is not vertex-transitive")
            continue
        ok, why = _local_action_matches(action, f)
        if not ok:
            hyp5 = False
            witnesses.append(f"hyp5: on {name}, {why}")

    order = instance.group.order()
    hyp6 = hyp3 and all(len(o) == order for o in product.orbits())
    if not hyp6:
        stab = order // len(orbit0) if hyp3 else None
        witnesses.append("hyp6: product action is not free" +
                         (f" (stabilizer order {stab})" if stab else ""))

    in_e = hyp1 and hyp2 and hyp3 and hyp4 and hyp5
    return HypothesisReport(hyp1, hyp2, hyp3, hyp4, hyp5, hyp6,
                            tuple(witnesses), in_e, in_e and hyp6)


@dataclass(frozen=True)
class BasicLemmaReport:
    cross_transitive: bool
    product_covers_group: bool
    in_f: bool
    cross_free: object  # bool, or None when not in F
    trivial_intersection: object

    def all_applicable_pass(self):
        core = self.cross_transitive and self.product_covers_group
        if not self.in_f:
            return core
        return core and self.cross_free and self.trivial_intersection


def basic_lemma_check(instance, f1, f2, cap=DEFAULT_ELEMENT_CAP):
    """Stabilizer consequences of membership in E: each vertex stabilizer
    is transitive on the other factor, and the two stabilizers cover the
    group; in F they additionally act freely and meet trivially."""
    report = check_hypotheses(instance, f1, f2, cap)
    if not report.member_of_E:
        raise NotInE("; ".join(report.witnesses))
    g1 = instance.a1.vertex_stabilizer(0)
    g2 = instance.a2.vertex_stabilizer(0)

    def orbits_on_other(stab, action):
        gens = [action.vertex_image(g) for g in stab.generators]
        group = PermGroup(action.graph.n_vertices, gens)
        return group.orbits()

    orb_12 = orbits_on_other(g1, instance.a2)
    orb_21 = orbits_on_other(g2, instance.a1)
    cross_transitive = len(orb_12) == 1 and len(orb_21) == 1
    meet = g1.intersection(g2, cap)
    covers = g1.order() * g2.order() == instance.group.order() * meet.order()
    in_f = report.member_of_F
    cross_free = None
    trivial = None
    if in_f:
        cross_free = (all(len(o) == g1.order() for o in orb_12)
                      and all(len(o) == g2.order() for o in orb_21))
        trivial = meet.order() == 1
    return BasicLemmaReport(cross_transitive, covers, in_f, cross_free, trivial)


def product_orbit_report(instance, cap=DEFAULT_ELEMENT_CAP):
    """Orbit decomposition of VX1 x VX2: (orbit size, stabilizer order)
    pairs, orbits sorted by minimal representative."""
    n = instance.a1.graph.n_vertices * instance.a2.graph.n_vertices
    if n > cap or instance.group.order() > cap:
        raise GroupTooLarge(max(n, instance.group.order()), cap)
    order = instance.group.order()
    out = []
    for orbit in instance.product_vertex_group().orbits():
        out.append((len(orbit), order // len(orbit)))
    return out


@dataclass(frozen=True)
class FactorizationCertificate:
    ok: bool
    group_order: int
    a_order: int
    b_order: int
    intersection_order: int
    reason: str = ""

    @property
    def product_vertex_count(self):
        # |G/A| * |G/B| — the vertex count of any coset-graph realization
        return (self.group_order // self.a_order) * \
            (self.group_order // self.b_order)


def factorization_certificate(group, a, b, cap=DEFAULT_ELEMENT_CAP):
    """Certify G = A·B with trivial intersection: the diagonal action on
    cosets(A) x cosets(B) is then free and transitive."""
    for name, sub in (("A", a), ("B", b)):
        for g in sub.generators:
            if not group.contains(g):
                return FactorizationCertificate(
                    False, group.order(), a.order(), b.order(), 0,
                    f"{name} is not a subgroup")
    meet = a.intersection(b, cap)
    if meet.order() != 1:
        return FactorizationCertificate(
            False, group.order(), a.order(), b.order(), meet.order(),
            f"intersection has order {meet.order()}")
    if a.order() * b.order() != group.order():
        return FactorizationCertificate(
            False, group.order(), a.order(), b.order(), 1,
            f"|A||B| = {a.order() * b.order()} != |G| = {group.order()}")
    return FactorizationCertificate(True, group.order(), a.order(),
                                    b.order(), 1)


def coset_action(group, subgroup, cap=DEFAULT_ELEMENT_CAP):
    """Right-coset action of a group on cosets of a subgroup.

    Returns the image permutation group, the coset representatives
    (cosets sorted by their minimal element), and the raw image of each
    group generator — the last kept separately because the permutation
    group discards trivial generators."""
    if group.order() > cap:
        raise GroupTooLarge(group.order(), cap)
    sub_elems = list(subgroup.elements(cap))
    coset_of = {}
    reps = []
    for g in sorted(group.elements(cap), key=lambda p: p.images):
        if g.images in coset_of:
            continue
        idx = len(reps)
        reps.append(g)
        for h in sub_elems:
            coset_of[(h * g).images] = idx
    gens = []
    for s in group.generators:
        gens.append(Permutation(coset_of[(r * s).images] for r in reps))
    return PermGroup(len(reps), gens), reps, gens


def coset_complete_graph_instance(group, a, b, cap=DEFAULT_ELEMENT_CAP):
    """Instance on complete graphs over the two coset spaces; every vertex
    permutation is an automorphism of a complete graph, so any certified
    factorization yields a free transitive product action."""
    act_a, _, gens_a = coset_action(group, a, cap)
    act_b, _, gens_b = coset_action(group, b, cap)
    if act_a.degree < 2 or act_b.degree < 2:
        raise PreconditionFailed("coset spaces too small for a graph")
    ka = complete_graph(act_a.degree)
    kb = complete_graph(act_b.degree)
    a1 = GraphAction(group, ka, gens_a, _induced_edge_images(ka, gens_a))
    a2 = GraphAction(group, kb, gens_b, _induced_edge_images(kb, gens_b))
    return ProductActionInstance(a1, a2)


def _induced_edge_images(graph, vertex_perms):
    lookup = {(graph.d0[e], graph.d1[e]): e
              for e in range(graph.n_oriented_edges)}
    return [Permutation(lookup[(vp(graph.d0[e]), vp(graph.d1[e]))]
                        for e in range(graph.n_oriented_edges))
            for vp in vertex_perms]


# -- worked instances ----------------------------------------------------

def _cube_diagonal_perm(vp):
    """Diagonal (antipodal vertex pair) permutation induced by a cube
    automorphism; diagonals indexed by their vertex in 0..3."""
    images = []
    for k in range(4):
        w = vp(k)
        images.append(w if w < 4 else 7 - w)
    return Permutation(images)


def theta4_cube_instance():
    """The order-48 cube group acting on theta(4) through the diagonal
    quotient and on the cube itself: transitive on the 16 vertex pairs with
    stabilizers of order 3, hence in E but not in F."""
    # r: quarter turn about the z axis; s: half turn about an edge axis;
    # z: the antipodal map.  Vertices are coordinate bitmasks.
    def bits(v):
        return v & 1, (v >> 1) & 1, (v >> 2) & 1

    def pack(b0, b1, b2):
        return b0 | (b1 << 1) | (b2 << 2)

    r = Permutation(pack(b1, 1 - b0, b2) for b0, b1, b2 in map(bits, range(8)))
    s = Permutation(pack(b2, 1 - b1, b0) for b0, b1, b2 in map(bits, range(8)))
    z = Permutation(v ^ 7 for v in range(8))
    group = PermGroup(8, [r, s, z])
    cube = cube_graph()
    a2 = GraphAction(group, cube, [r, s, z],
                     _induced_edge_images(cube, [r, s, z]))
    theta = theta_graph(4)
    swap = Permutation.from_cycles("(0 1)")
    ident = Permutation.identity(2)
    vgens, egens = [], []
    for vp, swaps in ((r, False), (s, False), (z, True)):
        strand = _cube_diagonal_perm(vp)
        vgens.append(swap if swaps else ident)
        egens.append(Permutation(2 * strand(e // 2) + ((e % 2) ^ int(swaps))
                                 for e in range(8)))
    a1 = GraphAction(group, theta, vgens, egens)
    return ProductActionInstance(a1, a2)


def kneser_petersen_graph():
    """The Petersen graph as the Kneser graph on 2-subsets of a 5-set."""
    pairs = [(i, j) for i in range(5) for j in range(i + 1, 5)]
    index = {p: k for k, p in enumerate(pairs)}
    edges = [(index[p], index[q]) for p in pairs for q in pairs
             if p < q and not set(p) & set(q)]
    return SerreGraph.from_geometric_edges(10, edges, vertex_labels=pairs), index


def _petersen_action(group):
    graph, index = kneser_petersen_graph()
    pairs = list(graph.vertex_labels)
    vgens = []
    for g in group.generators:
        vgens.append(Permutation(index[tuple(sorted((g(i), g(j))))]
                                 for i, j in pairs))
    return GraphAction(group, graph, vgens, _induced_edge_images(graph, vgens))


def sym5_complete6_petersen_instance():
    """Sym(5) on the six-vertex complete graph (through its exotic degree-6
    action) and on the Petersen graph: one orbit of 60 vertex pairs with
    stabilizers of order 2."""
    from .groupzoo import sym5_exotic_degree6, symmetric

    group = symmetric(5)
    exotic = sym5_exotic_degree6()
    k6 = complete_graph(6)
    a1 = GraphAction(group, k6, exotic.generators,
                     _induced_edge_images(k6, exotic.generators))
    return ProductActionInstance(a1, _petersen_action(group))


def sym5_complete5_petersen_instance():
    """Sym(5) acting naturally on the five-vertex complete graph and on the
    Petersen graph: two vertex-pair orbits, of sizes 20 and 30."""
    from .groupzoo import symmetric

    group = symmetric(5)
    k5 = complete_graph(5)
    a1 = GraphAction(group, k5, group.generators,
                     _induced_edge_images(k5, group.generators))
    return ProductActionInstance(a1, _petersen_action(group))


def diagonal_cycle6_instance():
    """C6 acting on two copies of the hexagon by the same rotation."""
    from .serregraph import cycle_graph

    group = PermGroup.from_cycles(6, "(0 1 2 3 4 5)")
    act = action_from_vertex_group(cycle_graph(6), group)
    return ProductActionInstance(act, act)


# -- instance bundle serialization ---------------------------------------

def instance_to_text(instance):
    lines = ["[graph1]"]
    lines.append(instance.a1.graph.to_text().rstrip("\n"))
    lines.append("[graph2]")
    lines.append(instance.a2.graph.to_text().rstrip("\n"))
    lines.append("[group]")
    lines.append(str(instance.group.degree))
    for g in instance.group.generators:
        lines.append(g.cycle_string())
    for tag, action in (("[action1]", instance.a1), ("[action2]", instance.a2)):
        lines.append(tag)
        for vp, ep in zip(action.vertex_images, action.edge_images):
            lines.append(vp.cycle_string() + "\t" + ep.cycle_string())
    return "\n".join(lines) + "\n"


def instance_from_text(text):
    sections = {}
    current = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("[") and line.endswith("]"):
            current = line[1:-1]
            sections[current] = []
        else:
            sections[current].append(line)
    g1 = SerreGraph.from_text("\n".join(sections["graph1"]))
    g2 = SerreGraph.from_text("\n".join(sections["graph2"]))
    degree = int(sections["group"][0])
    gens = [Permutation.from_cycles(s, degree=degree)
            for s in sections["group"][1:]]
    group = PermGroup(degree, gens)

    def parse_action(tag, graph):
        vgens, egens = [], []
        for line in sections[tag]:
            vtext, etext = line.split("\t")
            vgens.append(Permutation.from_cycles(vtext, degree=graph.n_vertices))
            egens.append(Permutation.from_cycles(etext,
                                                 degree=graph.n_oriented_edges))
        return GraphAction(group, graph, vgens, egens)

    return ProductActionInstance(parse_action("action1", g1),
                                 parse_action("action2", g2))
