"""Exact weight and root arithmetic in the root-coordinate offset encoding.

A weight is stored as a dominant base weight lambda (fundamental-weight
coefficients) together with the coordinate vector c of lambda - mu over the
simple roots.  This bookkeeping is exact in every type: in the affine case
the fundamental coefficients alone would not pin the delta-direction, but
the offset does.  All arithmetic is exact (ints and Fractions); there is no
floating point anywhere in this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .diagram import Diagram, DiagramError


@dataclass(frozen=True)
class DominantBase:
    """A dominant integral weight in fundamental-weight coordinates."""

    diagram: Diagram
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.diagram.num_nodes:
            raise ValueError("coefficient vector has wrong length")
        if any(c < 0 for c in self.coeffs):
            raise ValueError("base weight must be dominant (coefficients >= 0)")

    @classmethod
    def fundamental(cls, diagram: Diagram, node: int) -> "DominantBase":
        coeffs = [0] * diagram.num_nodes
        coeffs[node] = 1
        return cls(diagram, tuple(coeffs))


@dataclass(frozen=True)
class WeightOffset:
    """The weight mu = lambda - sum_i c_i alpha_i."""

    base: DominantBase
    c: tuple

    def __post_init__(self):
        if len(self.c) != self.base.diagram.num_nodes:
            raise ValueError("offset vector has wrong length")


def pairing(w: WeightOffset, i: int):
    """<mu, alpha_i^vee> = lambda_i - (A c)_i."""
    d = w.base.diagram
    acc = w.base.coeffs[i] - 2 * w.c[i]
    for j in d.adjacency[i]:
        acc += w.c[j]
    return acc


def weight_coeffs(w: WeightOffset) -> tuple:
    """mu in fundamental-weight coordinates (all nodes)."""
    return tuple(pairing(w, i) for i in range(w.base.diagram.num_nodes))


def reflect(w: WeightOffset, i: int) -> WeightOffset:
    """Simple reflection s_i(mu) = mu - <mu, alpha_i^vee> alpha_i."""
    p = pairing(w, i)
    c = list(w.c)
    c[i] += p
    return WeightOffset(w.base, tuple(c))


def positive_roots(d: Diagram, cap: int = 10 ** 6) -> list[tuple[int, ...]]:
    """All positive roots as coordinate vectors over the simple roots.

    Built by closing the simple roots under simple reflections; only valid
    in finite type, and guarded by a cap so misuse on an infinite root
    system fails fast instead of looping.
    """
    if not d.type_class.is_finite:
        raise DiagramError("positive roots are finite only for finite type")
    n = d.num_nodes
    A = d.cartan_matrix()
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    seen = set(simple)
    queue = list(simple)
    while queue:
        v = queue.pop()
        for i in range(n):
            pair = sum(A[i][j] * v[j] for j in range(n) if v[j])
            w = list(v)
            w[i] -= pair
            w = tuple(w)
            if all(x >= 0 for x in w) and w not in seen:
                seen.add(w)
                queue.append(w)
                if len(seen) > cap:
                    raise DiagramError("positive-root closure exceeded cap %d" % cap)
    return sorted(seen)


def weyl_dimension(d: Diagram, coeffs) -> int:
    """dim V(lambda) = prod_{alpha>0} <lambda+rho, alpha^vee> / <rho, alpha^vee>.

    Simply laced, so the coroot of sum m_i alpha_i is sum m_i alpha_i^vee and
    the pairing is sum_i m_i (lambda_i + 1) over sum_i m_i.  Exact integer.
    """
    if isinstance(coeffs, DominantBase):
        coeffs = coeffs.coeffs
    if any(c < 0 for c in coeffs):
        raise ValueError("weight must be dominant")
    num = 1
    den = 1
    for alpha in positive_roots(d):
        num *= sum(m * (c + 1) for m, c in zip(alpha, coeffs))
        den *= sum(alpha)
    q, rem = divmod(num, den)
    if rem:
        raise AssertionError("Weyl dimension did not come out integral")
    return q
