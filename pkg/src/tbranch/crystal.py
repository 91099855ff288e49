"""Deduplicated generation of highest-weight path crystals.

Generation closes the straight path under all lowering operators with a
breadth-first sweep over a canonical-form store.  An optional truncation
(grading node, max degree) discards elements whose offset at the grading
node exceeds the bound; this is sound because lowering at the grading node
raises that offset by exactly one and lowering elsewhere leaves it fixed,
so discarded elements can never be ancestors of kept ones.  A hard element
cap guards against misuse on infinite-type crystals.
"""

from __future__ import annotations

import json
from collections import deque
from fractions import Fraction

from .diagram import Diagram
from .lspaths import LSPath, PathSpace, heights, lower, straight_path
from .weights import weyl_dimension

DEFAULT_CAP = 5_000_000


class CapExceeded(RuntimeError):
    """Raised when generation passes the element cap; carries partial stats."""

    def __init__(self, count, by_degree=None):
        self.count = count
        self.by_degree = dict(by_degree or {})
        msg = "crystal generation exceeded cap (%d elements reached)" % count
        if self.by_degree:
            msg += "; elements by degree so far: %s" % (self.by_degree,)
        super().__init__(msg)


class Crystal:
    """Element store with lowering edges and cached per-element statistics."""

    def __init__(self, diagram, base_coeffs, space, truncation=None):
        self.diagram = diagram
        self.base_coeffs = tuple(base_coeffs)
        self.space = space
        self.truncation = truncation  # (grading node, max degree) or None
        self.elements: list[tuple] = []      # id -> canonical segments
        self.index: dict[tuple, int] = {}
        self.offsets: list[tuple] = []       # id -> integer offset vector
        self.eps: list[tuple] = []           # id -> epsilon vector
        self.phi: list[tuple] = []           # id -> phi vector
        self.f_edges: list[list] = []        # id -> lowering target per node
        self.e_edges: list[list] = []        # id -> raising target per node

    def __len__(self):
        return len(self.elements)

    def path(self, eid: int) -> LSPath:
        return LSPath(self.space, self.elements[eid])

    def weight_coeffs(self, eid: int) -> tuple:
        off = self.offsets[eid]
        sp = self.space
        return tuple(
            sp.base[i] - 2 * off[i] + sum(off[j] for j in self.diagram.adjacency[i])
            for i in range(sp.n))

    def degree(self, eid: int, grading: int) -> int:
        return self.offsets[eid][grading]

    def layer_sizes(self, grading: int) -> list[int]:
        """Element counts per degree, degree 0 upward."""
        if not self.elements:
            return []
        top = max(off[grading] for off in self.offsets)
        out = [0] * (top + 1)
        for off in self.offsets:
            out[off[grading]] += 1
        return out

    def j_highest(self, grading: int) -> list[int]:
        """Elements annihilated by every raising operator except the grading one."""
        n = self.diagram.num_nodes
        rest = [i for i in range(n) if i != grading]
        return [eid for eid in range(len(self.elements))
                if all(self.eps[eid][i] == 0 for i in rest)]

    def highest_weight_elements(self) -> list[int]:
        return [eid for eid in range(len(self.elements))
                if all(e == 0 for e in self.eps[eid])]


def generate(diagram: Diagram, base_coeffs, grading=None, max_degree=None,
             cap: int = DEFAULT_CAP, node_order=None) -> Crystal:
    """Close the straight path under the lowering operators.

    For non-finite diagrams a truncation (grading, max_degree) is mandatory.
    The element count of an untruncated finite-type crystal equals the Weyl
    dimension of the base weight.
    """
    if max_degree is not None and grading is None:
        raise ValueError("max_degree given without a grading node")
    if max_degree is None and not diagram.type_class.is_finite:
        raise ValueError(
            "non-finite diagram: generation requires a grading node and max_degree")
    space = PathSpace(diagram, base_coeffs)
    trunc = (grading, max_degree) if max_degree is not None else None
    crystal = Crystal(diagram, base_coeffs, space, trunc)
    n = diagram.num_nodes
    order = list(node_order) if node_order is not None else list(range(n))

    start = straight_path(space).segs
    crystal.index[start] = 0
    crystal.elements.append(start)
    crystal.offsets.append(tuple([0] * n))
    crystal.f_edges.append([None] * n)
    crystal.e_edges.append([None] * n)
    _record_stats(crystal, 0)

    queue = deque([0])
    while queue:
        eid = queue.popleft()
        segs = crystal.elements[eid]
        off = crystal.offsets[eid]
        phis = crystal.phi[eid]
        for i in order:
            if phis[i] < 1:
                continue
            if trunc is not None and i == trunc[0] and off[i] >= trunc[1]:
                continue
            child = lower(space, segs, i)
            cid = crystal.index.get(child)
            if cid is None:
                cid = len(crystal.elements)
                if cid >= cap:
                    raise CapExceeded(cid, _degree_histogram(crystal, grading))
                crystal.index[child] = cid
                crystal.elements.append(child)
                child_off = off[:i] + (off[i] + 1,) + off[i + 1:]
                crystal.offsets.append(child_off)
                crystal.f_edges.append([None] * n)
                crystal.e_edges.append([None] * n)
                _record_stats(crystal, cid)
                queue.append(cid)
            crystal.f_edges[eid][i] = cid
            crystal.e_edges[cid][i] = eid
    return crystal


def _record_stats(crystal: Crystal, eid: int) -> None:
    space = crystal.space
    segs = crystal.elements[eid]
    eps = []
    phi = []
    for i in range(space.n):
        H = heights(space, segs, i)
        m = min(H)
        p = H[-1] - m
        if m.denominator != 1 or p.denominator != 1:
            raise AssertionError("non-integral height statistics at node %d" % i)
        eps.append(-int(m))
        phi.append(int(p))
    crystal.eps.append(tuple(eps))
    crystal.phi.append(tuple(phi))


def _degree_histogram(crystal: Crystal, grading):
    if grading is None:
        return {}
    hist = {}
    for off in crystal.offsets:
        hist[off[grading]] = hist.get(off[grading], 0) + 1
    return hist


def expected_size(diagram: Diagram, base_coeffs) -> int:
    """Crystal cardinality of an untruncated finite-type crystal."""
    return weyl_dimension(diagram, base_coeffs)


# -- disk cache ---------------------------------------------------------------

CACHE_VERSION = 1


def _canonical_payload(crystal: Crystal) -> dict:
    """Stable dict form: elements sorted by canonical key, fractions as num/den."""
    sp = crystal.space

    def seg_key(segs):
        return tuple((sp.offsets[d], a.numerator, a.denominator) for d, a in segs)

    order = sorted(range(len(crystal.elements)),
                   key=lambda eid: seg_key(crystal.elements[eid]))
    renum = {old: new for new, old in enumerate(order)}
    elements = []
    for eid in order:
        elements.append([[list(sp.offsets[d]), "%d/%d" % (a.numerator, a.denominator)]
                         for d, a in crystal.elements[eid]])
    edges = []
    for eid in order:
        row = crystal.f_edges[eid]
        edges.append([renum[t] if t is not None else -1 for t in row])
    d = crystal.diagram
    return {
        "version": CACHE_VERSION,
        "pqr": [d.p, d.q, d.r],
        "base": list(crystal.base_coeffs),
        "truncation": list(crystal.truncation) if crystal.truncation else None,
        "elements": elements,
        "f_edges": edges,
    }


def save_crystal(crystal: Crystal, path) -> None:
    payload = _canonical_payload(crystal)
    with open(path, "w") as fh:
        json.dump(payload, fh, separators=(",", ":"), sort_keys=True)


def load_crystal(path) -> Crystal:
    with open(path) as fh:
        payload = json.load(fh)
    if payload.get("version") != CACHE_VERSION:
        raise ValueError("unsupported crystal cache version %r" % payload.get("version"))
    p, q, r = payload["pqr"]
    diagram = Diagram(p, q, r)
    base = tuple(payload["base"])
    space = PathSpace(diagram, base)
    trunc = tuple(payload["truncation"]) if payload["truncation"] else None
    crystal = Crystal(diagram, base, space, trunc)
    n = diagram.num_nodes
    for raw in payload["elements"]:
        segs = []
        for off, frac in raw:
            num, den = frac.split("/")
            segs.append((space.intern(tuple(off)), Fraction(int(num), int(den))))
        segs = tuple(segs)
        eid = len(crystal.elements)
        crystal.index[segs] = eid
        crystal.elements.append(segs)
        crystal.offsets.append(LSPath(space, segs).endpoint_offset())
        crystal.f_edges.append([None] * n)
        crystal.e_edges.append([None] * n)
        _record_stats(crystal, eid)
    for eid, row in enumerate(payload["f_edges"]):
        for i, tgt in enumerate(row):
            if tgt >= 0:
                crystal.f_edges[eid][i] = tgt
                crystal.e_edges[tgt][i] = eid
    return crystal
