"""Named constructors for the permutation groups used throughout the
package: symmetric/alternating families, the degree-5 and degree-6
2-transitive groups, and a few special actions."""

from __future__ import annotations

from .permcore import Permutation, PermGroup


def symmetric(n):
    if n < 2:
        return PermGroup.trivial(max(n, 1))
    cyc = "(" + " ".join(map(str, range(n))) + ")"
    return PermGroup.from_cycles(n, cyc, "(0 1)")


def alternating(n):
    if n < 3:
        return PermGroup.trivial(max(n, 1))
    gens = ["(0 1 2)"]
    if n > 3:
        pts = range(n) if n % 2 else range(1, n)
        gens.append("(" + " ".join(map(str, pts)) + ")")
    return PermGroup.from_cycles(n, *gens)


def cyclic(n):
    return PermGroup.from_cycles(n, "(" + " ".join(map(str, range(n))) + ")")


def dihedral(n):
    """Dihedral group of order 2n on the vertices of an n-gon."""
    refl = "".join(f"({i} {n - i})" for i in range(1, (n + 1) // 2))
    cyc = "(" + " ".join(map(str, range(n))) + ")"
    return PermGroup.from_cycles(n, cyc, refl)


def klein_four():
    """Klein four-group in its regular degree-4 action."""
    return PermGroup.from_cycles(4, "(0 1)(2 3)", "(0 2)(1 3)")


def frobenius20():
    """C5 : C4, the sharply 2-transitive group of degree 5."""
    return PermGroup.from_cycles(5, "(0 1 2 3 4)", "(1 2 4 3)")


def psl2_5_degree6():
    """PSL(2,5) on the projective line over F5, points 0..4 and 5 for the
    point at infinity: translation z -> z+1 and the involution z -> -1/z."""
    return PermGroup.from_cycles(6, "(0 1 2 3 4)", "(0 5)(1 4)")


def pgl2_5_degree6():
    """PGL(2,5) on the projective line over F5: adds z -> 2z."""
    return PermGroup.from_cycles(6, "(0 1 2 3 4)", "(1 2 4 3)", "(0 5)(1 4)")


def psl3_2_degree7():
    """PSL(3,2) acting on the seven nonzero vectors of F2^3; generators come
    from a Singer cycle and a basis transposition."""
    return PermGroup.from_cycles(7, "(0 1 4 2 6 5 3)", "(1 3)(2 4)")


def sym5_exotic_degree6():
    """Sym(5) in its transitive degree-6 action, by conjugation on its six
    subgroups of order 5."""
    s5 = symmetric(5)
    subgroups = {}
    for p in s5.elements():
        if p.order() == 5:
            key = frozenset(q.images for q in (p, p * p, p * p * p,
                                               p * p * p * p))
            subgroups.setdefault(key, min(key))
    keys = sorted(subgroups, key=lambda k: subgroups[k])
    index = {k: i for i, k in enumerate(keys)}
    gens = []
    for g in s5.generators:
        gi = g.inverse()
        images = []
        for k in keys:
            conj = frozenset((gi * Permutation(im) * g).images for im in k)
            images.append(index[conj])
        gens.append(Permutation(images))
    return PermGroup(6, gens)
