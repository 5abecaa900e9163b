"""Homology as the dual basis of a truncated algebra.

Homology classes are rational combinations of dual basis elements, written
``dual(m)`` for a monomial m.  The evaluation pairing is the Kronecker pairing
on dual bases, and the cap product is the unique bilinear operation satisfying

    <b, cap(a, x)> = <cup(b, a), x>

Orientations give the dual of the top monomial coefficient +1.  Every signed
wrong-way value computed downstream depends on this pair of conventions, so
changing either one means re-deriving those signs.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .ring import (
    Monomial,
    Ring,
    RingElement,
    RingMismatchError,
    TensorRing,
    as_coeff,
    tensor_ring,
)

__all__ = [
    "HomologyElement",
    "OrientedSpace",
    "RingMap",
    "cap",
    "diagonal_pushforward",
    "dual",
    "gysin",
    "homology_cross",
    "pairing",
    "pd",
    "pd_inverse",
]


class HomologyElement:
    """Sparse rational combination of dual basis classes of a ring."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: dict[Monomial, int | Fraction]):
        clean: dict[Monomial, Fraction] = {}
        for m, c in terms.items():
            c = as_coeff(c)
            if c:
                clean[m] = c
        self.ring = ring
        self.terms = clean

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree(self) -> int | None:
        degs = {self.ring.monomial_degree(m) for m in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def __add__(self, other: HomologyElement) -> HomologyElement:
        if not isinstance(other, HomologyElement):
            return NotImplemented
        if self.ring != other.ring:
            raise RingMismatchError("sum of classes over different rings")
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return HomologyElement(self.ring, out)

    def __neg__(self) -> HomologyElement:
        return HomologyElement(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: HomologyElement) -> HomologyElement:
        if not isinstance(other, HomologyElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: int | Fraction) -> HomologyElement:
        scalar = as_coeff(other)
        return HomologyElement(self.ring, {m: c * scalar for m, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, HomologyElement)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    __hash__ = None

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        order = sorted(self.terms, key=lambda m: (self.ring.monomial_degree(m), m))
        for m in order:
            c = self.terms[m]
            body = f"[{self.ring.monomial_str(m)}]"
            if c == 1:
                bits.append(body)
            elif c == -1:
                bits.append(f"-{body}")
            else:
                bits.append(f"{c}*{body}")
        return " + ".join(bits).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"<{self}>"


def dual(ring: Ring, m: Monomial, coeff: int | Fraction = 1) -> HomologyElement:
    """The dual basis class of a monomial, scaled by ``coeff``."""
    m = tuple(m)
    if len(m) != len(ring.generators):
        raise ValueError("monomial has wrong length for this ring")
    for e, t in zip(m, ring.truncations):
        if not 0 <= e < t:
            raise ValueError(f"exponent out of range in monomial {m}")
    return HomologyElement(ring, {m: coeff})


def pairing(c: RingElement, x: HomologyElement) -> Fraction:
    """Kronecker pairing of a cohomology element against a homology class."""
    if c.ring != x.ring:
        raise RingMismatchError("pairing of classes over different rings")
    total = Fraction(0)
    for m, cc in c.terms.items():
        cx = x.terms.get(m)
        if cx is not None:
            total += cc * cx
    return total


def cap(a: RingElement, x: HomologyElement) -> HomologyElement:
    """Cap product, the adjoint of right cup multiplication.

    On dual classes: ``cap(a, dual(m)) = merge_sign(m - a, a) * dual(m - a)``
    whenever the exponent difference stays non-negative, and 0 otherwise.
    """
    if a.ring != x.ring:
        raise RingMismatchError("cap of classes over different rings")
    ring = a.ring
    out: dict[Monomial, Fraction] = {}
    for ma, ca in a.terms.items():
        for mx, cx in x.terms.items():
            sub = tuple(ex - ea for ex, ea in zip(mx, ma))
            if any(e < 0 for e in sub):
                continue
            sign = ring.merge_sign(sub, ma)
            piece = ca * cx if sign > 0 else -(ca * cx)
            out[sub] = out.get(sub, Fraction(0)) + piece
    return HomologyElement(ring, out)


def homology_cross(x: HomologyElement, y: HomologyElement, tensor: TensorRing) -> HomologyElement:
    """Cross product of homology classes into the tensor ring's dual basis."""
    if tensor.left != x.ring or tensor.right != y.ring:
        raise RingMismatchError("cross factors do not match the tensor ring")
    out: dict[Monomial, Fraction] = {}
    for mx, cx in x.terms.items():
        for my, cy in y.terms.items():
            m = tensor.combine(mx, my)
            out[m] = out.get(m, Fraction(0)) + cx * cy
    return HomologyElement(tensor, out)


def _require_homogeneous(x, what: str) -> None:
    if x.terms and x.degree() is None:
        raise ValueError(f"{what} must be homogeneous")


class OrientedSpace:
    """A closed oriented manifold presented through its cohomology ring.

    The dimension is the ring's top degree and the fundamental class is the
    +1 multiple of the dual of the unique top monomial.
    """

    __slots__ = ("ring", "dimension", "fundamental")

    def __init__(self, ring: Ring, dimension: int | None = None):
        if dimension is not None and dimension != ring.top_degree:
            raise ValueError(
                f"declared dimension {dimension} differs from top degree {ring.top_degree}"
            )
        self.ring = ring
        self.dimension = ring.top_degree
        self.fundamental = dual(ring, ring.top_monomial)

    def __repr__(self) -> str:
        return f"OrientedSpace(dim={self.dimension}, {self.ring!r})"


def pd(space: OrientedSpace, c: RingElement) -> HomologyElement:
    """Poincare duality, cap against the fundamental class."""
    if c.ring != space.ring:
        raise RingMismatchError("class does not live over the space's ring")
    _require_homogeneous(c, "Poincare duality input")
    return cap(c, space.fundamental)


def pd_inverse(space: OrientedSpace, x: HomologyElement) -> RingElement:
    """Inverse duality by signed coordinate transport.

    ``pd`` sends the basis monomial ``top - m`` to ``merge_sign(m, top - m)
    * dual(m)``, a signed permutation of bases, so inverting is exact and
    needs no linear solve.
    """
    if x.ring != space.ring:
        raise RingMismatchError("class does not live over the space's ring")
    _require_homogeneous(x, "inverse duality input")
    ring = space.ring
    top = ring.top_monomial
    out: dict[Monomial, Fraction] = {}
    for m, c in x.terms.items():
        comp = tuple(t - e for t, e in zip(top, m))
        sign = ring.merge_sign(m, comp)
        out[comp] = out.get(comp, Fraction(0)) + (c if sign > 0 else -c)
    return RingElement(ring, out)


class RingMap:
    """Degree-preserving algebra map fixed by generator images.

    Images must be homogeneous of the generator's degree (or zero) and must
    satisfy the source truncations in the target ring.
    """

    __slots__ = ("source", "target", "images", "_powers")

    def __init__(self, source: Ring, target: Ring, images: dict[str, RingElement]):
        given = set(images)
        expected = {g.name for g in source.generators}
        if given != expected:
            raise ValueError(f"images must cover exactly {sorted(expected)}")
        powers: list[list[RingElement]] = []
        for g in source.generators:
            img = images[g.name]
            if img.ring != target:
                raise RingMismatchError(f"image of {g.name!r} lives over the wrong ring")
            if img.terms and img.degree() != g.degree:
                raise ValueError(f"image of {g.name!r} is not of degree {g.degree}")
            pows = [target.one()]
            for _ in range(g.truncation):
                pows.append(pows[-1] * img)
            if not pows[g.truncation].is_zero():
                raise ValueError(f"image of {g.name!r} violates its truncation")
            powers.append(pows)
        self.source = source
        self.target = target
        self.images = dict(images)
        self._powers = powers

    def __call__(self, elem: RingElement) -> RingElement:
        if elem.ring != self.source:
            raise RingMismatchError("element does not live over the map's source")
        out = self.target.zero()
        for m, c in elem.terms.items():
            acc = self.target.one()
            for pos, e in enumerate(m):
                if e:
                    acc = acc * self._powers[pos][e]
            out = out + acc * c
        return out

    def __repr__(self) -> str:
        body = ", ".join(f"{n} -> {img}" for n, img in self.images.items())
        return f"RingMap({body})"


def gysin(
    pullback: RingMap,
    source: OrientedSpace,
    target: OrientedSpace,
    x: HomologyElement,
) -> HomologyElement:
    """Wrong-way map ``pd . pullback . pd_inverse`` on homology.

    ``x`` lives over ``source`` and the result over ``target``; the degree
    shifts by ``target.dimension - source.dimension``.
    """
    if pullback.source != source.ring or pullback.target != target.ring:
        raise RingMismatchError("pullback does not connect the given spaces")
    if x.ring != source.ring:
        raise RingMismatchError("class does not live over the source space")
    return pd(target, pullback(pd_inverse(source, x)))


def _splits(m: Monomial):
    for left in itertools.product(*(range(e + 1) for e in m)):
        right = tuple(e - l for e, l in zip(m, left))
        yield left, right


def diagonal_pushforward(x: HomologyElement, tensor: TensorRing | None = None) -> HomologyElement:
    """Pushforward along the diagonal, dual to the cup product.

    Characterized by ``<cross(a, b), result> = <cup(a, b), x>`` for all a, b.
    On a dual class this is the sum over exponent splittings ``m = l + r`` of
    ``merge_sign(l, r) * dual(l x r)``.
    """
    ring = x.ring
    if tensor is None:
        tensor = tensor_ring(ring, ring)
    if tensor.left != ring or tensor.right != ring:
        raise RingMismatchError("tensor ring is not the square of the class's ring")
    out: dict[Monomial, Fraction] = {}
    for m, c in x.terms.items():
        for left, right in _splits(m):
            sign = ring.merge_sign(left, right)
            key = tensor.combine(left, right)
            out[key] = out.get(key, Fraction(0)) + (c if sign > 0 else -c)
    return HomologyElement(tensor, out)
