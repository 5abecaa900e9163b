"""Truncated graded-commutative algebras over the rationals.

A ring is presented by an ordered list of generators, each carrying a degree
and a truncation exponent (the smallest vanishing power).  Monomials are
exponent tuples in generator order; that order is the normal form, and every
product is brought back to it, picking up a Koszul sign for each transposition
of odd-degree factors.  Coefficients are exact `fractions.Fraction` values,
never floats.

Everything here is immutable after construction and all operations are pure,
so rings and elements can be shared freely between threads.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from fractions import Fraction

Monomial = tuple[int, ...]

__all__ = [
    "Generator",
    "Monomial",
    "Ring",
    "RingElement",
    "RingMismatchError",
    "TensorRing",
    "as_coeff",
    "cross",
    "cup",
    "tensor_ring",
]


class RingMismatchError(ValueError):
    """Operands belong to different rings."""


def as_coeff(value: int | Fraction) -> Fraction:
    """Coerce an exact scalar; floats are rejected outright."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    raise TypeError(f"exact rational expected, not {type(value).__name__}")


@dataclass(frozen=True)
class Generator:
    """A ring generator; ``g ** truncation == 0`` is the defining relation.

    An odd-degree generator squares to zero over the rationals by graded
    commutativity, so odd degree forces truncation 2.
    """

    name: str
    degree: int
    truncation: int

    def __post_init__(self) -> None:
        if self.degree < 0:
            raise ValueError(f"generator {self.name!r}: degree must be non-negative")
        if self.truncation < 2:
            raise ValueError(f"generator {self.name!r}: truncation must be at least 2")
        if self.degree % 2 == 1 and self.truncation != 2:
            raise ValueError(f"generator {self.name!r}: odd degree forces truncation 2")


class Ring:
    """``Q[g_1, ..., g_r] / (g_i ** t_i)`` with declaration order as normal form.

    Monomials are plain exponent tuples aligned with ``generators``.  The top
    monomial (every exponent at ``truncation - 1``) is the unique monomial of
    maximal degree; keeping it unique is why degree-0 generators are refused.
    """

    def __init__(self, generators: Iterable[Generator]):
        gens = tuple(generators)
        names = [g.name for g in gens]
        if len(set(names)) != len(names):
            raise ValueError("generator names must be unique within a ring")
        for g in gens:
            if g.degree == 0:
                raise ValueError(
                    f"generator {g.name!r}: degree 0 would make the top monomial non-unique"
                )
        self.generators = gens
        self.degrees = tuple(g.degree for g in gens)
        self.truncations = tuple(g.truncation for g in gens)
        self.index = {g.name: pos for pos, g in enumerate(gens)}
        self.top_monomial: Monomial = tuple(t - 1 for t in self.truncations)
        self.top_degree = self.monomial_degree(self.top_monomial)
        self._odd_positions = tuple(
            pos for pos, d in enumerate(self.degrees) if d % 2 == 1
        )
        suffix = [0] * (len(gens) + 1)
        for pos in range(len(gens) - 1, -1, -1):
            suffix[pos] = suffix[pos + 1] + self.degrees[pos] * (self.truncations[pos] - 1)
        self._suffix_top = tuple(suffix)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Ring) and self.generators == other.generators

    def __hash__(self) -> int:
        return hash(self.generators)

    def __repr__(self) -> str:
        body = ", ".join(f"{g.name}:{g.degree}^{g.truncation}" for g in self.generators)
        return f"Ring({body})"

    # -- monomials -----------------------------------------------------

    def monomial(self, exponents: dict[str, int] | None = None) -> Monomial:
        """Build a monomial from a name -> exponent mapping, checking bounds."""
        exps = [0] * len(self.generators)
        for name, e in (exponents or {}).items():
            if name not in self.index:
                raise KeyError(f"unknown generator {name!r}")
            pos = self.index[name]
            if not 0 <= e < self.truncations[pos]:
                raise ValueError(
                    f"exponent {e} of {name!r} outside [0, {self.truncations[pos]})"
                )
            exps[pos] = e
        return tuple(exps)

    def monomial_degree(self, m: Monomial) -> int:
        return sum(d * e for d, e in zip(self.degrees, m))

    def exponents_by_name(self, m: Monomial) -> dict[str, int]:
        """Nonzero exponents of ``m`` keyed by generator name, in ring order."""
        return {g.name: e for g, e in zip(self.generators, m) if e}

    def monomial_str(self, m: Monomial) -> str:
        parts = []
        for g, e in zip(self.generators, m):
            if e == 0:
                continue
            parts.append(g.name if e == 1 else f"{g.name}^{e}")
        return " ".join(parts) if parts else "1"

    def monomials(self) -> Iterator[Monomial]:
        """All monomials of the ring, in lexicographic exponent order."""
        return itertools.product(*(range(t) for t in self.truncations))

    @property
    def total_dimension(self) -> int:
        dim = 1
        for t in self.truncations:
            dim *= t
        return dim

    # -- products --------------------------------------------------------

    def merge_sign(self, left: Monomial, right: Monomial) -> int:
        """Koszul sign of normal-ordering the concatenation ``left * right``.

        Counts the transpositions of odd-degree factors: one for every pair
        of positions i > j with an odd generator of ``left`` at i moving past
        an odd generator of ``right`` at j.
        """
        total = 0
        odd = self._odd_positions
        for i in odd:
            ei = left[i]
            if not ei:
                continue
            for j in odd:
                if j >= i:
                    break
                ej = right[j]
                if ej:
                    total += ei * ej
        return -1 if total & 1 else 1

    def mul_monomials(self, ma: Monomial, mb: Monomial) -> tuple[Monomial, int] | None:
        """Merged monomial and sign of ``ma * mb``, or None if truncated away."""
        out = []
        for e1, e2, t in zip(ma, mb, self.truncations):
            e = e1 + e2
            if e >= t:
                return None
            out.append(e)
        return tuple(out), self.merge_sign(ma, mb)

    # -- elements --------------------------------------------------------

    def zero(self) -> RingElement:
        return RingElement(self, {})

    def one(self) -> RingElement:
        return RingElement(self, {(0,) * len(self.generators): Fraction(1)})

    def gen(self, name: str) -> RingElement:
        return RingElement(self, {self.monomial({name: 1}): Fraction(1)})

    def element(self, terms: dict[Monomial, int | Fraction]) -> RingElement:
        """Validating element constructor for externally built exponent tuples."""
        checked: dict[Monomial, int | Fraction] = {}
        for m, c in terms.items():
            m = tuple(m)
            if len(m) != len(self.generators):
                raise ValueError(f"monomial {m} has wrong length for {self!r}")
            for e, t in zip(m, self.truncations):
                if not 0 <= e < t:
                    raise ValueError(f"exponent out of range in monomial {m}")
            checked[m] = c
        return RingElement(self, checked)

    # -- enumeration -----------------------------------------------------

    def basis(self, d: int) -> list[Monomial]:
        """All monomials of degree exactly ``d``, lexicographically ordered."""
        if d < 0:
            raise ValueError("degree must be non-negative")
        r = len(self.generators)
        out: list[Monomial] = []
        exps = [0] * r

        def fill(pos: int, remaining: int) -> None:
            if remaining > self._suffix_top[pos]:
                return
            if pos == r:
                out.append(tuple(exps))
                return
            deg = self.degrees[pos]
            for e in range(self.truncations[pos]):
                rest = remaining - e * deg
                if rest < 0:
                    break
                exps[pos] = e
                fill(pos + 1, rest)
            exps[pos] = 0

        fill(0, d)
        return out

    def poincare_series(self, max_degree: int) -> list[tuple[int, int]]:
        """Pairs ``(d, dim)`` for d = 0 .. max_degree, counted without signs."""
        if max_degree < 0:
            raise ValueError("degree must be non-negative")
        dims = [0] * (max_degree + 1)
        dims[0] = 1
        for g in self.generators:
            acc = [0] * (max_degree + 1)
            for e in range(g.truncation):
                shift = e * g.degree
                if shift > max_degree:
                    break
                for d in range(max_degree + 1 - shift):
                    if dims[d]:
                        acc[d + shift] += dims[d]
            dims = acc
        return list(enumerate(dims))


class RingElement:
    """Sparse rational combination of normal-ordered monomials."""

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
        """The common degree of all monomials, or None when mixed or zero."""
        degs = {self.ring.monomial_degree(m) for m in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def __add__(self, other: RingElement) -> RingElement:
        if not isinstance(other, RingElement):
            return NotImplemented
        if self.ring != other.ring:
            raise RingMismatchError("sum of elements over different rings")
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, Fraction(0)) + c
        return RingElement(self.ring, out)

    def __neg__(self) -> RingElement:
        return RingElement(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: RingElement) -> RingElement:
        if not isinstance(other, RingElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: RingElement | int | Fraction) -> RingElement:
        if isinstance(other, RingElement):
            return cup(self, other)
        scalar = as_coeff(other)
        return RingElement(self.ring, {m: c * scalar for m, c in self.terms.items()})

    def __rmul__(self, other: int | Fraction) -> RingElement:
        scalar = as_coeff(other)
        return RingElement(self.ring, {m: c * scalar for m, c in self.terms.items()})

    def __pow__(self, power: int) -> RingElement:
        if not isinstance(power, int) or power < 0:
            raise ValueError("power must be a non-negative integer")
        out = self.ring.one()
        for _ in range(power):
            out = cup(out, self)
        return out

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RingElement)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    __hash__ = None  # mutable container semantics

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        order = sorted(self.terms, key=lambda m: (self.ring.monomial_degree(m), m))
        for m in order:
            c = self.terms[m]
            body = self.ring.monomial_str(m)
            if body == "1":
                bits.append(str(c))
            elif c == 1:
                bits.append(body)
            elif c == -1:
                bits.append(f"-{body}")
            else:
                bits.append(f"{c}*{body}")
        return " + ".join(bits).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"<{self}>"


def cup(a: RingElement, b: RingElement) -> RingElement:
    """Graded product of ``a`` and ``b``; truncated monomials drop out."""
    if a.ring != b.ring:
        raise RingMismatchError("cup of elements over different rings")
    ring = a.ring
    out: dict[Monomial, Fraction] = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            hit = ring.mul_monomials(ma, mb)
            if hit is None:
                continue
            m, sign = hit
            piece = ca * cb if sign > 0 else -(ca * cb)
            out[m] = out.get(m, Fraction(0)) + piece
    return RingElement(ring, out)


class TensorRing(Ring):
    """Ring of a cross product, left factor's generators first.

    Either side's generator names are kept when possible; a right-hand name
    colliding with a used one is prefixed with ``r.`` until it is free.
    """

    def __init__(self, left: Ring, right: Ring):
        taken = {g.name for g in left.generators}
        gens = list(left.generators)
        for g in right.generators:
            name = g.name
            while name in taken:
                name = f"r.{name}"
            taken.add(name)
            gens.append(Generator(name, g.degree, g.truncation))
        super().__init__(gens)
        self.left = left
        self.right = right
        self._split_at = len(left.generators)

    def combine(self, ml: Monomial, mr: Monomial) -> Monomial:
        """Concatenate factor monomials; no sign, the order is already normal."""
        return ml + mr

    def split(self, m: Monomial) -> tuple[Monomial, Monomial]:
        return m[: self._split_at], m[self._split_at :]

    def monomial_str(self, m: Monomial) -> str:
        ml, mr = self.split(m)
        return f"{self.left.monomial_str(ml)} x {self.right.monomial_str(mr)}"


def tensor_ring(left: Ring, right: Ring) -> TensorRing:
    """Tensor square builder; Poincare series multiply, dimensions convolve."""
    return TensorRing(left, right)


def cross(a: RingElement, b: RingElement, tensor: TensorRing) -> RingElement:
    """Embed the pair (a, b) as a product monomial of the tensor ring.

    No sign appears here; the Koszul sign of the usual product rule
    ``(a x b)(c x d) = (-1)^(|b||c|) (ac x bd)`` falls out of ``cup`` on the
    merged monomials.
    """
    if tensor.left != a.ring or tensor.right != b.ring:
        raise RingMismatchError("cross factors do not match the tensor ring")
    out: dict[Monomial, Fraction] = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            m = tensor.combine(ma, mb)
            out[m] = out.get(m, Fraction(0)) + ca * cb
    return RingElement(tensor, out)
