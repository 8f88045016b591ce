"""Deterministic permutation-group engine.

Membership, exact orders, transitivity tests, stabilizers and normal
structure for groups at desk scale.  Everything is reproducible: the
stabilizer chain uses a fixed base discipline (smallest moved point,
ascending), so transversals, element enumeration order and derived
generator lists are stable across runs.

Composition convention: ``(p * q)(x) = q(p(x))`` -- apply ``p`` first.
"""

from __future__ import annotations

import itertools
import re
from math import factorial

from .errors import GroupTooLarge

DEGREE_CAP = 4096
DEFAULT_ELEMENT_CAP = 10**6

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class Permutation:
    """A permutation of the points 0..degree-1, stored as an image tuple."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if len(images) > DEGREE_CAP:
            raise ValueError(f"degree {len(images)} exceeds cap {DEGREE_CAP}")
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation of 0..{len(images) - 1}: {images!r}")
        self.images = images

    @property
    def degree(self):
        return len(self.images)

    @classmethod
    def identity(cls, degree):
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, text, degree=None):
        """Parse cycle notation, e.g. ``"(0 1 2)(3 4)"``; identity is ``"()"``.

        Points may be separated by spaces or commas.  The degree defaults to
        one more than the largest point mentioned.
        """
        stripped = text.strip()
        if not re.fullmatch(r"(\(\s*[\d\s,]*\)\s*)+", stripped):
            raise ValueError(f"cannot parse permutation {text!r}")
        cycles = []
        for body in _CYCLE_RE.findall(stripped):
            pts = [int(tok) for tok in re.split(r"[,\s]+", body.strip()) if tok]
            if len(set(pts)) != len(pts):
                raise ValueError(f"repeated point in cycle {body!r}")
            if pts:
                cycles.append(pts)
        n = max((max(c) for c in cycles), default=-1) + 1
        if degree is not None:
            if degree < n:
                raise ValueError(f"degree {degree} too small for {text!r}")
            n = degree
        images = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                if images[a] != a:
                    raise ValueError(f"point {a} occurs in two cycles of {text!r}")
                images[a] = b
        return cls(images)

    def __mul__(self, other):
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        oi = other.images
        return Permutation(oi[v] for v in self.images)

    def inverse(self):
        inv = [0] * self.degree
        for x, y in enumerate(self.images):
            inv[y] = x
        return Permutation(inv)

    def __call__(self, point):
        return self.images[point]

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def is_identity(self):
        return all(i == v for i, v in enumerate(self.images))

    def order(self):
        n = 1
        p = self
        while not p.is_identity():
            p = p * self
            n += 1
        return n

    def cycles(self, include_fixed=False):
        seen = set()
        out = []
        for start in range(self.degree):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self.images[start]
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self.images[x]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_string(self):
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self):
        return f"Permutation[{self.cycle_string()}]"

    def restrict(self, points):
        """Permutation induced on an invariant list of points (new labels
        follow the order of ``points``)."""
        index = {p: i for i, p in enumerate(points)}
        try:
            return Permutation(index[self.images[p]] for p in points)
        except KeyError:
            raise ValueError("point list is not invariant") from None


def parse_perm_list(text, degree=None):
    """Parse a comma-separated list of cycle-notation permutations, padded to
    a common degree."""
    parts = [p for p in re.split(r",(?![^()]*\))", text) if p.strip()]
    raw = [Permutation.from_cycles(p) for p in parts]
    n = max((p.degree for p in raw), default=0)
    if degree is not None:
        n = max(n, degree)
    return [Permutation.from_cycles(p.cycle_string(), degree=n) for p in raw]


class _Level:
    __slots__ = ("base", "gens", "orbit", "transversal", "inverse", "pending")

    def __init__(self, base, degree):
        self.base = base
        self.gens = []
        self.orbit = [base]
        # transversal[x] maps base -> x; inverse[x] maps x -> base
        identity = Permutation.identity(degree)
        self.transversal = {base: identity}
        self.inverse = {base: identity}
        self.pending = []


class PermGroup:
    """A permutation group given by generators, with a lazily built BSGS."""

    def __init__(self, degree, generators):
        if degree < 1 or degree > DEGREE_CAP:
            raise ValueError(f"degree must be in 1..{DEGREE_CAP}")
        gens = []
        seen = set()
        for g in generators:
            if not isinstance(g, Permutation):
                g = Permutation.from_cycles(g, degree=degree)
            if g.degree != degree:
                raise ValueError("generator degree mismatch")
            if g.is_identity() or g.images in seen:
                continue
            seen.add(g.images)
            gens.append(g)
        self.degree = degree
        self.generators = tuple(gens)
        self._levels = None
        self._order = None

    @classmethod
    def from_cycles(cls, degree, *cycle_strings):
        return cls(degree, [Permutation.from_cycles(s, degree=degree) for s in cycle_strings])

    @classmethod
    def trivial(cls, degree):
        return cls(degree, [])

    # -- Schreier-Sims ---------------------------------------------------

    def _ensure_bsgs(self):
        # Idempotent: concurrent triggers may race but build identical chains
        # from immutable inputs; last write wins harmlessly.
        if self._levels is not None:
            return
        levels = []

        def sift(g, start):
            for idx in range(start, len(levels)):
                lvl = levels[idx]
                ti = lvl.inverse.get(g.images[lvl.base])
                if ti is None:
                    return g, idx
                g = g * ti
            return g, len(levels)

        def add_gen(h, j):
            # h fixes the bases of levels[:j]; it is a strong generator for
            # every level up to j.  Extend those orbits incrementally and
            # queue the Schreier pairs that still need verification.
            if j == len(levels):
                base = min(x for x in range(self.degree) if h.images[x] != x)
                levels.append(_Level(base, self.degree))
            for k in range(j + 1):
                lvl = levels[k]
                lvl.gens.append(h)
                fresh = []
                for x in list(lvl.orbit):
                    lvl.pending.append((x, h))
                    y = h.images[x]
                    if y not in lvl.transversal:
                        lvl.transversal[y] = lvl.transversal[x] * h
                        lvl.inverse[y] = lvl.transversal[y].inverse()
                        lvl.orbit.append(y)
                        fresh.append(y)
                while fresh:
                    x = fresh.pop(0)
                    for s in lvl.gens:
                        lvl.pending.append((x, s))
                        y = s.images[x]
                        if y not in lvl.transversal:
                            lvl.transversal[y] = lvl.transversal[x] * s
                            lvl.inverse[y] = lvl.transversal[y].inverse()
                            lvl.orbit.append(y)
                            fresh.append(y)

        for g in self.generators:
            h, j = sift(g, 0)
            if not h.is_identity():
                add_gen(h, j)
        # Verify Schreier pairs, deepest level first: every pair (x, s) at
        # level i yields a Schreier generator fixing the first i+1 bases,
        # whose residue (if any) becomes a strong generator further down.
        while True:
            lvl_index = None
            for i in range(len(levels) - 1, -1, -1):
                if levels[i].pending:
                    lvl_index = i
                    break
            if lvl_index is None:
                break
            lvl = levels[lvl_index]
            x, s = lvl.pending.pop()
            sg = lvl.transversal[x] * s * lvl.inverse[s.images[x]]
            if sg.is_identity():
                continue
            h, j = sift(sg, lvl_index + 1)
            if not h.is_identity():
                add_gen(h, j)
        self._levels = levels

    def order(self):
        if self._order is None:
            self._ensure_bsgs()
            n = 1
            for lvl in self._levels:
                n *= len(lvl.transversal)
            self._order = n
        return self._order

    def contains(self, p):
        if not isinstance(p, Permutation):
            p = Permutation.from_cycles(p, degree=self.degree)
        if p.degree != self.degree:
            return False
        self._ensure_bsgs()
        for lvl in self._levels:
            ti = lvl.inverse.get(p.images[lvl.base])
            if ti is None:
                return False
            p = p * ti
        return p.is_identity()

    def elements(self, cap=DEFAULT_ELEMENT_CAP):
        """All elements, in the canonical chain-product order."""
        if cap is not None and self.order() > cap:
            raise GroupTooLarge(self.order(), cap)
        self._ensure_bsgs()

        def rec(idx):
            if idx < 0:
                yield Permutation.identity(self.degree)
                return
            lvl = self._levels[idx]
            for tail in rec(idx - 1):
                for x in sorted(lvl.transversal):
                    yield lvl.transversal[x] * tail

        return rec(len(self._levels) - 1)

    def base_points(self):
        self._ensure_bsgs()
        return [lvl.base for lvl in self._levels]

    # -- orbits ----------------------------------------------------------

    def orbit(self, x):
        seen = {x}
        queue = [x]
        while queue:
            y = queue.pop(0)
            for g in self.generators:
                z = g.images[y]
                if z not in seen:
                    seen.add(z)
                    queue.append(z)
        return sorted(seen)

    def orbit_transversal(self, x):
        """Orbit of ``x`` with coset representatives mapping ``x`` to each
        orbit point, in BFS order."""
        trans = {x: Permutation.identity(self.degree)}
        queue = [x]
        while queue:
            y = queue.pop(0)
            ty = trans[y]
            for g in self.generators:
                z = g.images[y]
                if z not in trans:
                    trans[z] = ty * g
                    queue.append(z)
        return trans

    def orbits(self):
        seen = set()
        out = []
        for x in range(self.degree):
            if x not in seen:
                orb = self.orbit(x)
                seen.update(orb)
                out.append(orb)
        return out

    def is_transitive(self):
        return len(self.orbit(0)) == self.degree

    def is_2_transitive(self):
        """Transitivity on ordered pairs of distinct points, by pair-orbit
        enumeration."""
        d = self.degree
        if d < 2:
            raise ValueError("degree must be at least 2")
        start = (0, 1)
        seen = {start}
        queue = [start]
        while queue:
            a, b = queue.pop(0)
            for g in self.generators:
                pair = (g.images[a], g.images[b])
                if pair not in seen:
                    seen.add(pair)
                    queue.append(pair)
        return len(seen) == d * (d - 1)

    def contains_alt(self):
        """Whether the group contains Alt(d), for degree d >= 3.

        Alt(d) and Sym(d) are the only subgroups of Sym(d) of order d!/2
        and d!, so an order test suffices.
        """
        if self.degree < 3:
            raise ValueError("degree must be at least 3")
        f = factorial(self.degree)
        return self.order() in (f // 2, f)

    # -- stabilizers and normal structure --------------------------------

    def point_stabilizer(self, x):
        """Stabilizer of a point, generated by Schreier generators."""
        if not 0 <= x < self.degree:
            raise ValueError("point out of range")
        trans = self.orbit_transversal(x)
        gens = []
        seen = set()
        for y in sorted(trans):
            ty = trans[y]
            for s in self.generators:
                sg = ty * s * trans[s.images[y]].inverse()
                if not sg.is_identity() and sg.images not in seen:
                    seen.add(sg.images)
                    gens.append(sg)
        return PermGroup(self.degree, gens)

    def stabilizer_chain_order(self, x):
        return len(self.orbit(x)), self.point_stabilizer(x).order()

    def normal_closure(self, seeds):
        """Smallest normal subgroup of this group containing the seeds."""
        seeds = list(seeds)
        for s in seeds:
            if not self.contains(s):
                raise ValueError("seed is not an element of the group")
        gens = [s for s in seeds if not s.is_identity()]
        closure = PermGroup(self.degree, gens)
        changed = True
        while changed:
            changed = False
            for g in self.generators:
                gi = g.inverse()
                for n in list(gens):
                    c = gi * n * g
                    if not closure.contains(c):
                        gens.append(c)
                        closure = PermGroup(self.degree, gens)
                        changed = True
        return closure

    def is_normal(self, sub):
        for g in self.generators:
            gi = g.inverse()
            for n in sub.generators:
                if not sub.contains(gi * n * g):
                    return False
        return True

    def conjugacy_class(self, p, cap=DEFAULT_ELEMENT_CAP):
        seen = {p.images}
        queue = [p]
        while queue:
            q = queue.pop(0)
            for g in self.generators:
                c = g.inverse() * q * g
                if c.images not in seen:
                    if cap is not None and len(seen) >= cap:
                        raise GroupTooLarge(f">{cap}", cap)
                    seen.add(c.images)
                    queue.append(c)
        return [Permutation(im) for im in sorted(seen)]

    def minimal_normal_subgroups(self, cap=DEFAULT_ELEMENT_CAP):
        """Minimal elements among normal closures of single nontrivial
        elements.  Valid because every minimal normal subgroup of a finite
        group is such a closure."""
        if self.order() > cap:
            raise GroupTooLarge(self.order(), cap)
        # One closure per conjugacy class: normal closures are constant on
        # classes (and on inverse classes).
        closures = []
        remaining = {p.images for p in self.elements(cap)}
        remaining.discard(Permutation.identity(self.degree).images)
        while remaining:
            images = min(remaining)
            rep = Permutation(images)
            for c in self.conjugacy_class(rep, cap):
                remaining.discard(c.images)
                remaining.discard(c.inverse().images)
            closures.append(self.normal_closure([rep]))
        # Deduplicate by mutual containment, then keep minimal ones.
        unique = []
        for c in closures:
            if not any(u.order() == c.order() and _subgroup_of(c, u) for u in unique):
                unique.append(c)
        minimal = []
        for c in unique:
            if not any(d.order() < c.order() and _subgroup_of(d, c) for d in unique):
                minimal.append(c)
        minimal.sort(key=lambda g: (g.order(), [p.images for p in g.generators]))
        return minimal

    def is_quasi_primitive(self, cap=DEFAULT_ELEMENT_CAP):
        """Every minimal normal subgroup acts transitively."""
        return all(n.is_transitive() for n in self.minimal_normal_subgroups(cap))

    def intersection(self, other, cap=DEFAULT_ELEMENT_CAP):
        """Exact intersection, by filtering elements of the smaller group."""
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        small, big = (self, other) if self.order() <= other.order() else (other, self)
        if small.order() > cap:
            raise GroupTooLarge(small.order(), cap)
        found = [p for p in small.elements(cap) if not p.is_identity() and big.contains(p)]
        return PermGroup(self.degree, found)

    def regular_representation(self, cap=DEFAULT_ELEMENT_CAP):
        """Regular action of this group on its own sorted element list.

        Degree equals the order; every nontrivial element of the image is
        fixed-point-free.
        """
        if self.order() > cap:
            raise GroupTooLarge(self.order(), cap)
        if self.order() > DEGREE_CAP:
            raise GroupTooLarge(self.order(), DEGREE_CAP)
        elems = sorted(self.elements(cap), key=lambda p: p.images)
        index = {p.images: i for i, p in enumerate(elems)}
        gens = [Permutation(index[(e * g).images] for e in elems) for g in self.generators]
        return PermGroup(max(len(elems), 1), gens)

    def __repr__(self):
        gens = ", ".join(g.cycle_string() for g in self.generators) or "()"
        return f"PermGroup(degree={self.degree}, <{gens}>)"


def _subgroup_of(sub, sup):
    return all(sup.contains(g) for g in sub.generators)


def subgroup_of(sub, sup):
    """Whether every generator of ``sub`` lies in ``sup``."""
    return _subgroup_of(sub, sup)
