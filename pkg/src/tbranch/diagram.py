"""T-shaped graphs, their naming schemes, Cartan matrices, and resolution formats.

A graph T(p, q, r) consists of a central node u with three attached chains
(arms) of p-1, q-1 and r-1 nodes.  Nodes are numbered internally
0 .. p+q+r-3 in the fixed order u, x_1..x_{p-1}, y_1..y_{q-1}, z_1..z_{r-1};
the x/y/z scheme and the Bourbaki numbering (attached for A/D/E graphs) are
views on top of the canonical ids.  The node z_1 is the distinguished
grading node, which is why r >= 2 is required throughout.
"""

from __future__ import annotations

from dataclasses import dataclass


class DiagramError(ValueError):
    """Invalid diagram or format data."""


@dataclass(frozen=True)
class TypeClass:
    """Coarse classification of a T-shaped graph: 1/p + 1/q + 1/r vs 1."""

    kind: str  # "finite" | "affine" | "indefinite"
    name: str | None = None  # "A5", "D7", "E8", ... for finite graphs

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"


@dataclass(frozen=True)
class Format:
    """Rank quadruple (f0, f1, f2, f3) of a length-three free resolution.

    The differentials have ranks r_i with f_i = r_i + r_{i+1} (r_0 = r_4 = 0),
    so a quadruple is a format iff f0 + f2 == f1 + f3, and then
    (r1, r2, r3) = (f0, f1 - f0, f3).
    """

    f0: int
    f1: int
    f2: int
    f3: int

    def __post_init__(self):
        if min(self.astuple()) < 0:
            raise DiagramError("format entries must be nonnegative")
        if self.f0 + self.f2 != self.f1 + self.f3:
            raise DiagramError(
                "inconsistent format %s: rank additivity f0 + f2 == f1 + f3 fails"
                % (self.astuple(),))

    def astuple(self) -> tuple[int, int, int, int]:
        return (self.f0, self.f1, self.f2, self.f3)

    @property
    def r1(self) -> int:
        return self.f0

    @property
    def r2(self) -> int:
        return self.f1 - self.f0

    @property
    def r3(self) -> int:
        return self.f3

    def ranks(self) -> tuple[int, int, int]:
        return (self.r1, self.r2, self.r3)

    def pqr(self) -> tuple[int, int, int]:
        return (self.r1 + 1, self.r2 - 1, self.r3 + 1)


def classify(p: int, q: int, r: int) -> TypeClass:
    """Classify T(p, q, r) by the sign of 1/p + 1/q + 1/r - 1."""
    # compare 1/p + 1/q + 1/r with 1 over a common denominator
    lhs = q * r + p * r + p * q
    rhs = p * q * r
    if lhs > rhs:
        n = p + q + r - 2
        if min(p, q) == 1:
            name = "A%d" % n
        elif sorted((p, q, r))[:2] == [2, 2]:
            name = "D%d" % n
        else:
            name = "E%d" % n
        return TypeClass("finite", name)
    if lhs == rhs:
        return TypeClass("affine")
    return TypeClass("indefinite")


class Diagram:
    """A T(p, q, r) graph with fixed arm roles.

    The arm-role assignment (which arm is x and which is y) is part of the
    data: when p == q the two choices give different table conventions, so
    it is never inferred.
    """

    def __init__(self, p: int, q: int, r: int):
        if p < 1 or q < 1:
            raise DiagramError("arm parameters p, q must be >= 1")
        if r < 2:
            raise DiagramError(
                "r >= 2 required: the grading node z_1 must exist (got r=%d)" % r)
        self.p, self.q, self.r = p, q, r
        self.num_nodes = p + q + r - 2
        self.nodes = tuple(range(self.num_nodes))
        self.type_class = classify(p, q, r)

        adj = [set() for _ in range(self.num_nodes)]

        def link(a, b):
            adj[a].add(b)
            adj[b].add(a)

        for i in range(1, p):
            link(self.x(i), self.x(i - 1) if i > 1 else 0)
        for j in range(1, q):
            link(self.y(j), self.y(j - 1) if j > 1 else 0)
        for k in range(1, r):
            link(self.z(k), self.z(k - 1) if k > 1 else 0)
        self.adjacency = tuple(frozenset(s) for s in adj)

        self._xyz_names = {0: "u"}
        for i in range(1, p):
            self._xyz_names[self.x(i)] = "x%d" % i
        for j in range(1, q):
            self._xyz_names[self.y(j)] = "y%d" % j
        for k in range(1, r):
            self._xyz_names[self.z(k)] = "z%d" % k
        self._xyz_ids = {v: k for k, v in self._xyz_names.items()}

        self._bourbaki = self._build_bourbaki()
        self._bourbaki_ids = (
            {v: k for k, v in self._bourbaki.items()} if self._bourbaki else None)
        self._cartan = None

    # -- canonical ids of the three arms ------------------------------------

    def x(self, i: int) -> int:
        if not 1 <= i <= self.p - 1:
            raise DiagramError("no node x%d in T(%d,%d,%d)" % (i, self.p, self.q, self.r))
        return i

    def y(self, j: int) -> int:
        if not 1 <= j <= self.q - 1:
            raise DiagramError("no node y%d in T(%d,%d,%d)" % (j, self.p, self.q, self.r))
        return self.p - 1 + j

    def z(self, k: int) -> int:
        if not 1 <= k <= self.r - 1:
            raise DiagramError("no node z%d in T(%d,%d,%d)" % (k, self.p, self.q, self.r))
        return self.p + self.q - 2 + k

    @property
    def grading_node(self) -> int:
        return self.z(1)

    def arm_of(self, node: int) -> str:
        name = self._xyz_names[node]
        return name[0]

    def f1_chain(self) -> tuple[int, ...]:
        """Nodes x_{p-1}, ..., x_1, u, y_1, ..., y_{q-1} in chain order.

        Consecutive entries are adjacent; this is the A-chain left after
        deleting z_1, and the order in which gl(F1) weight tuples are read.
        """
        xs = [self.x(i) for i in range(self.p - 1, 0, -1)]
        ys = [self.y(j) for j in range(1, self.q)]
        return tuple(xs + [0] + ys)

    def z_chain(self) -> tuple[int, ...]:
        """Nodes z_2, ..., z_{r-1}: the A-chain carrying the gl(F3) tuples."""
        return tuple(self.z(k) for k in range(2, self.r))

    def extremal(self, arm: str) -> int | None:
        """Outermost node of an arm, or None when the arm is empty."""
        if arm == "x":
            return self.x(self.p - 1) if self.p > 1 else None
        if arm == "y":
            return self.y(self.q - 1) if self.q > 1 else None
        if arm == "z":
            return self.z(self.r - 1)
        raise DiagramError("unknown arm %r" % arm)

    # -- naming schemes ------------------------------------------------------

    def name_of(self, node: int, scheme: str = "xyz") -> str:
        if scheme == "xyz":
            return self._xyz_names[node]
        if scheme == "canonical":
            return str(node)
        if scheme == "bourbaki":
            if self._bourbaki is None:
                raise DiagramError("no Bourbaki naming for %s graphs" % self.type_class.kind)
            return str(self._bourbaki[node])
        raise DiagramError("unknown naming scheme %r" % scheme)

    def node_lookup(self, scheme: str, name: str | int) -> int:
        """Resolve a node name in the given scheme to its canonical id."""
        if scheme == "xyz":
            key = str(name)
            if key not in self._xyz_ids:
                raise DiagramError(
                    "unknown node %r; valid names: %s"
                    % (name, ", ".join(sorted(self._xyz_ids))))
            return self._xyz_ids[key]
        if scheme == "canonical":
            i = int(name)
            if not 0 <= i < self.num_nodes:
                raise DiagramError(
                    "canonical id %r out of range 0..%d" % (name, self.num_nodes - 1))
            return i
        if scheme == "bourbaki":
            if self._bourbaki_ids is None:
                raise DiagramError("no Bourbaki naming for %s graphs" % self.type_class.kind)
            b = int(name)
            if b not in self._bourbaki_ids:
                raise DiagramError(
                    "unknown Bourbaki label %r; valid: %s"
                    % (name, sorted(self._bourbaki_ids)))
            return self._bourbaki_ids[b]
        raise DiagramError("unknown naming scheme %r" % scheme)

    def node(self, spec: str | int) -> int:
        """Resolve a node given as xyz name, Bourbaki number, or 'c<i>'."""
        if isinstance(spec, int):
            if self._bourbaki_ids:
                return self.node_lookup("bourbaki", spec)
            return self.node_lookup("canonical", spec)
        s = str(spec).strip()
        if s in self._xyz_ids:
            return self._xyz_ids[s]
        if s.startswith("c:"):
            return self.node_lookup("canonical", s[2:])
        if s.isdigit():
            if self._bourbaki_ids:
                return self.node_lookup("bourbaki", s)
            return self.node_lookup("canonical", s)
        raise DiagramError("cannot resolve node %r" % spec)

    def bourbaki(self, node: int) -> int:
        if self._bourbaki is None:
            raise DiagramError("no Bourbaki naming for %s graphs" % self.type_class.kind)
        return self._bourbaki[node]

    def _arm_lists(self):
        xs = [self.x(i) for i in range(1, self.p)]
        ys = [self.y(j) for j in range(1, self.q)]
        zs = [self.z(k) for k in range(1, self.r)]
        return xs, ys, zs

    def _build_bourbaki(self):
        """Bourbaki labels for finite graphs, matching the arm conventions
        used throughout the tables (see the per-type rules below)."""
        tc = self.type_class
        if not tc.is_finite:
            return None
        n = self.num_nodes
        xs, ys, zs = self._arm_lists()
        out = {}
        fam = tc.name[0]
        if fam == "A":
            # walk the path from the x-arm end (falling back to y, then u)
            if xs:
                order = xs[::-1] + [0] + ys + zs
            elif ys:
                order = ys[::-1] + [0] + zs
            else:
                order = [0] + zs
            for lbl, node in enumerate(order, start=1):
                out[node] = lbl
            return out
        if fam == "D":
            # long arm is the chain 1..n-3 ending at the branch node n-2;
            # the arm cyclically after the long one (x->y->z->x) gets n-1.
            arms = {"x": xs, "y": ys, "z": zs}
            long_arm = max(arms, key=lambda a: len(arms[a]))
            if len(arms[long_arm]) <= 1:
                long_arm = "z"  # D4: all arms single nodes
            nxt = {"x": "y", "y": "z", "z": "x"}
            first, second = nxt[long_arm], nxt[nxt[long_arm]]
            out[0] = n - 2
            for step, node in enumerate(arms[long_arm]):
                out[node] = n - 3 - step
            out[arms[first][0]] = n - 1
            out[arms[second][0]] = n
            return out
        # E6 / E7 / E8: branch node is 4; Bourbaki arms are {2}, {3,1},
        # {5,6,...} of lengths 1, 2, n-4.  Arms are matched by length; the
        # two length-2 arms of E6 are tied, and the earlier of the tied
        # diagram arms (x before y before z) gets the {3,1} arm.
        b_arms = [(1, [2]), (2, [3, 1]), (n - 4, list(range(5, n + 1)))]
        out[0] = 4
        used = [False, False, False]
        for arm in (xs, ys, zs):
            for idx, (length, labels) in enumerate(b_arms):
                if not used[idx] and length == len(arm):
                    used[idx] = True
                    for node, lbl in zip(arm, labels):
                        out[node] = lbl
                    break
            else:
                raise AssertionError("arm lengths do not match an E-type graph")
        return out

    def theta(self) -> dict[int, int] | None:
        """The diagram involution induced by -w0 (canonical-id map).

        Identity for E7/E8 and even D; swaps the two short arms for odd D,
        flips the path for A, and is the standard involution for E6.
        Returns None for non-finite graphs.
        """
        tc = self.type_class
        if not tc.is_finite:
            return None
        fam, rank = tc.name[0], int(tc.name[1:])
        ident = {v: v for v in self.nodes}
        if fam == "E" and rank in (7, 8):
            return ident
        if fam == "D" and rank % 2 == 0:
            return ident
        if fam == "A":
            flip = {b: rank + 1 - b for b in range(1, rank + 1)}
        elif fam == "D":
            flip = {b: b for b in range(1, rank + 1)}
            flip[rank - 1], flip[rank] = rank, rank - 1
        else:  # E6
            flip = {1: 6, 6: 1, 3: 5, 5: 3, 2: 2, 4: 4}
        return {v: self._bourbaki_ids[flip[self._bourbaki[v]]] for v in self.nodes}

    # -- matrices ------------------------------------------------------------

    def cartan_matrix(self) -> tuple[tuple[int, ...], ...]:
        """Symmetric generalized Cartan matrix: 2 on the diagonal, -1 for edges."""
        if self._cartan is None:
            A = []
            for i in self.nodes:
                row = [0] * self.num_nodes
                row[i] = 2
                for j in self.adjacency[i]:
                    row[j] = -1
                A.append(tuple(row))
            self._cartan = tuple(A)
        return self._cartan

    def swap_arms(self) -> "Diagram":
        """The diagram with the roles of the x- and y-arms exchanged."""
        return Diagram(self.q, self.p, self.r)

    def __repr__(self):
        tc = self.type_class
        tag = tc.name if tc.is_finite else tc.kind
        return "Diagram(T(%d,%d,%d), %s)" % (self.p, self.q, self.r, tag)

    def __eq__(self, other):
        return isinstance(other, Diagram) and (self.p, self.q, self.r) == (
            other.p, other.q, other.r)

    def __hash__(self):
        return hash((self.p, self.q, self.r))


def build_diagram(p: int, q: int, r: int) -> Diagram:
    return Diagram(p, q, r)


def from_format(fmt: Format) -> Diagram:
    p, q, r = fmt.pqr()
    if q < 1:
        raise DiagramError("format %s gives q = r2 - 1 = %d < 1" % (fmt.astuple(), q))
    if r < 2:
        raise DiagramError("format %s has r3 = 0: no grading node" % (fmt.astuple(),))
    return Diagram(p, q, r)


def to_format(d: Diagram) -> Format:
    return Format(d.p - 1, d.p + d.q, d.q + d.r, d.r - 1)


def diagram_for_type(name: str, grading_bourbaki: int) -> Diagram:
    """Build the T-presentation of an A/D/E algebra graded at a given node.

    The grading node must be adjacent to the branch node; the shorter of
    the two remaining arms plays the x-role (ties resolved toward the arm
    with the smaller leading Bourbaki label, matching the standard tables).
    """
    name = name.upper()
    fam, rank = name[0], int(name[1:])
    if fam == "D":
        if rank < 4:
            raise DiagramError("D%d is not T-shaped" % rank)
        per_node = {rank - 3: (2, 2, rank - 2), rank - 1: (2, rank - 2, 2),
                    rank: (rank - 2, 2, 2)}
    elif fam == "E" and rank in (6, 7, 8):
        per_node = {5: (2, 3, rank - 3), 3: (2, rank - 3, 3), 2: (3, rank - 3, 2)}
    else:
        raise DiagramError("unsupported type %r (expected D>=4 or E6/E7/E8)" % name)
    if grading_bourbaki not in per_node:
        raise DiagramError(
            "grading node %d is not adjacent to the branch node of %s; "
            "valid choices: %s" % (grading_bourbaki, name, sorted(per_node)))
    p, q, r = per_node[grading_bourbaki]
    d = Diagram(p, q, r)
    if d.bourbaki(d.grading_node) != grading_bourbaki:
        # happens when a diagram automorphism identifies two gradings
        # (E6 node 3 ~ node 5, D4 triality)
        raise DiagramError(
            "grading node %d of %s is equivalent to node %d under a diagram "
            "automorphism; use --grade %d"
            % (grading_bourbaki, name, d.bourbaki(d.grading_node),
               d.bourbaki(d.grading_node)))
    return d
