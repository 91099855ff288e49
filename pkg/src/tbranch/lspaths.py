"""Piecewise-linear path model for highest-weight crystals.

A path is a sequence of (direction, duration) segments with durations
summing to 1; directions lie in the Weyl orbit of the dominant base weight
and are stored as integer offset vectors (direction = lambda - sum c_i
alpha_i).  The root operators act by locally reflecting the stretch of the
path between the last attainment of the minimum of the height function
h_i(t) = <path(t), alpha_i^vee> and its first return to min+1 (lowering),
or the mirror-image stretch (raising).  Durations are exact Fractions; the
height minima of valid paths are integers, which is asserted rather than
assumed.

Directions are interned in a PathSpace so that reflection and pairing
reduce to table lookups; this is what keeps generation of six-digit
crystals affordable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

ONE = Fraction(1)


class PathSpace:
    """Interned Weyl-orbit directions for one dominant base weight."""

    def __init__(self, diagram, base_coeffs):
        if len(base_coeffs) != diagram.num_nodes:
            raise ValueError("base weight has wrong length")
        if any(c < 0 for c in base_coeffs):
            raise ValueError("base weight must be dominant")
        self.diagram = diagram
        self.base = tuple(base_coeffs)
        self.n = diagram.num_nodes
        self._adj = diagram.adjacency
        self._ids: dict[tuple, int] = {}
        self.offsets: list[tuple] = []   # direction id -> offset vector
        self.pair: list[tuple] = []      # direction id -> pairing per node
        self._refl: list[list] = []      # direction id -> reflected id per node
        self.root = self.intern(tuple([0] * self.n))

    def intern(self, off: tuple) -> int:
        did = self._ids.get(off)
        if did is None:
            did = len(self.offsets)
            self._ids[off] = did
            self.offsets.append(off)
            base, adj = self.base, self._adj
            self.pair.append(tuple(
                base[i] - 2 * off[i] + sum(off[j] for j in adj[i])
                for i in range(self.n)))
            self._refl.append([None] * self.n)
        return did

    def reflect(self, did: int, i: int) -> int:
        cached = self._refl[did][i]
        if cached is None:
            off = self.offsets[did]
            p = self.pair[did][i]
            new = off[:i] + (off[i] + p,) + off[i + 1:]
            cached = self.intern(new)
            self._refl[did][i] = cached
        return cached


@dataclass(frozen=True)
class LSPath:
    """A canonical path: interned directions with positive durations."""

    space: PathSpace
    segs: tuple  # ((direction id, Fraction), ...)

    def endpoint_offset(self) -> tuple:
        """Offset vector of the endpoint; integral for crystal elements."""
        n = self.space.n
        acc = [Fraction(0)] * n
        for d, a in self.segs:
            off = self.space.offsets[d]
            for i in range(n):
                if off[i]:
                    acc[i] += a * off[i]
        out = []
        for v in acc:
            if v.denominator != 1:
                raise AssertionError("non-integral path endpoint: %s" % (acc,))
            out.append(int(v))
        return tuple(out)

    def weight_coeffs(self) -> tuple:
        off = self.endpoint_offset()
        sp = self.space
        return tuple(
            sp.base[i] - 2 * off[i] + sum(off[j] for j in sp.diagram.adjacency[i])
            for i in range(sp.n))


def straight_path(space: PathSpace) -> LSPath:
    """The highest-weight element: one segment in the base direction."""
    return LSPath(space, ((space.root, ONE),))


def _merge(parts) -> tuple:
    out = []
    for d, a in parts:
        if a == 0:
            continue
        if out and out[-1][0] == d:
            out[-1] = (d, out[-1][1] + a)
        else:
            out.append((d, a))
    return tuple(out)


def heights(space: PathSpace, segs, i: int) -> list:
    """Values of h_i at the segment breakpoints (length len(segs)+1)."""
    H = [Fraction(0)]
    h = Fraction(0)
    pair = space.pair
    for d, a in segs:
        h = h + a * pair[d][i]
        H.append(h)
    return H


def stats(space: PathSpace, segs, i: int):
    """(m, eps, phi) for node i; m and phi are asserted integral."""
    H = heights(space, segs, i)
    m = min(H)
    phi = H[-1] - m
    if m.denominator != 1 or phi.denominator != 1:
        raise AssertionError(
            "non-integral height statistics (%s, %s) at node %d" % (m, phi, i))
    return int(m), -int(m), int(phi)


def lower(space: PathSpace, segs, i: int, H=None):
    """Lowering operator f_i, or None when phi_i = 0.

    Reflects the part of the path between the last attainment of the height
    minimum and the first subsequent crossing of min+1, splitting the
    crossing segment at an exact rational point when it is interior.
    """
    if H is None:
        H = heights(space, segs, i)
    m = min(H)
    if H[-1] - m < 1:
        return None
    target = m + 1
    k0 = len(H) - 1 - H[::-1].index(m)  # last breakpoint at the minimum
    out = list(segs[:k0])
    j = k0
    while True:
        d, a = segs[j]
        rd = space.reflect(d, i)
        if H[j + 1] >= target:
            if H[j + 1] == target:
                out.append((rd, a))
                j += 1
            else:
                s = (target - H[j]) / (H[j + 1] - H[j])
                a1 = a * s
                out.append((rd, a1))
                out.append((d, a - a1))
                j += 1
            break
        out.append((rd, a))
        j += 1
    out.extend(segs[j:])
    return _merge(out)


def raise_(space: PathSpace, segs, i: int, H=None):
    """Raising operator e_i, or None when eps_i = 0; inverse of lower."""
    if H is None:
        H = heights(space, segs, i)
    m = min(H)
    if m > -1:
        return None
    target = m + 1
    k1 = H.index(m)  # first breakpoint at the minimum
    tail = list(segs[k1:])
    mid = []
    j = k1 - 1
    while True:
        d, a = segs[j]
        rd = space.reflect(d, i)
        if H[j] >= target:
            if H[j] == target:
                mid.append((rd, a))
                j -= 1
            else:
                s = (target - H[j]) / (H[j + 1] - H[j])
                a0 = a * s
                mid.append((rd, a - a0))
                mid.append((d, a0))
                j -= 1
            break
        mid.append((rd, a))
        j -= 1
    mid.reverse()
    return _merge(list(segs[:j + 1]) + mid + tail)
