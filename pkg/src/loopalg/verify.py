"""Verification sweeps over the kernel and the space catalog.

Each sweep returns a Report whose failures list holds printable
counterexamples; an empty list means every check passed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .homology import (
    cap,
    diagonal_pushforward,
    dual,
    gysin,
    pairing,
    pd,
    pd_inverse,
)
from .ring import cross, tensor_ring
from .spaces import SpaceParams, catalog_for

__all__ = [
    "Report",
    "verify_gysin_values",
    "verify_ring_axioms",
    "verify_structure",
]


@dataclass
class Report:
    """Outcome of a verification sweep."""

    name: str
    checks: int = 0
    failed: int = 0
    failures: list[str] = field(default_factory=list)
    keep: int = 12

    def note(self, ok: bool, message) -> bool:
        """Record one check; ``message`` may be a thunk to defer formatting."""
        self.checks += 1
        if not ok:
            self.failed += 1
            if len(self.failures) < self.keep:
                self.failures.append(message() if callable(message) else str(message))
        return ok

    def absorb(self, other: Report) -> None:
        self.checks += other.checks
        self.failed += other.failed
        for f in other.failures:
            if len(self.failures) < self.keep:
                self.failures.append(f)

    @property
    def passed(self) -> bool:
        return self.failed == 0

    def summary(self) -> str:
        if self.passed:
            return f"PASS ({self.checks} checks)"
        return f"FAIL ({self.failed} of {self.checks} checks failed)"


def verify_gysin_values(params: SpaceParams, max_k: int) -> Report:
    """Re-derive the signed wrong-way and cap values the pipeline rests on.

    For every level k <= max_k, index i and break index m this checks, with
    x_all = x1 .. x_{2k-1} and x_omit the same word without x_{2m}:

        cap(x_{2m}, -[a^i x_all])    == +[a^i x_omit]
        cap(x_{2m}, [a^i b x_all])   == -[a^i b x_omit]
        retraction_!(dual a^i)       == -[a^i x_all]
        retraction_!(dual a^i b)     == +[a^i b x_all]
        figure8_!(dual a^i)          == -[a^i x_omit]
        figure8_!(dual a^i b)        == -[a^i b x_omit]
    """
    cat = catalog_for(params)
    rep = Report(f"gysin signs ({params.token}, n={params.n}, k<={max_k})")
    for k in range(1, max_k + 1):
        gam = cat.gamma(k)
        ring = gam.ring
        full = {f"x{j}": 1 for j in range(1, 2 * k)}
        p_l = cat.pullback_pL(k)
        for i in range(params.n):
            a_part = {"a": i} if i else {}
            all_a = dual(ring, ring.monomial(full | a_part))
            all_b = dual(ring, ring.monomial(full | a_part | {"b": 1}))

            got = gysin(p_l, cat.sm, gam, cat.sm_dual(i))
            rep.note(got == -all_a, lambda g=got, k=k, i=i: f"retraction_!(a^{i}) at k={k}: {g}")
            got = gysin(p_l, cat.sm, gam, cat.sm_dual(i, with_b=True))
            rep.note(got == all_b, lambda g=got, k=k, i=i: f"retraction_!(a^{i} b) at k={k}: {g}")

            for m in range(1, k):
                omit = {f"x{j}": 1 for j in range(1, 2 * k) if j != 2 * m}
                omit_a = dual(ring, ring.monomial(omit | a_part))
                omit_b = dual(ring, ring.monomial(omit | a_part | {"b": 1}))
                x2m = ring.gen(f"x{2 * m}")

                got = cap(x2m, -all_a)
                rep.note(
                    got == omit_a,
                    lambda g=got, k=k, i=i, m=m: f"cap(x{2 * m}, -[a^{i} x..]) at k={k}: {g}",
                )
                got = cap(x2m, all_b)
                rep.note(
                    got == -omit_b,
                    lambda g=got, k=k, i=i, m=m: f"cap(x{2 * m}, [a^{i} b x..]) at k={k}: {g}",
                )

                p_v = cat.pullback_pV(k, m)
                got = gysin(p_v, cat.sm_pair, gam, cat.sm_pair_dual(i))
                rep.note(
                    got == -omit_a,
                    lambda g=got, k=k, i=i, m=m: f"figure8_!(a^{i}) at k={k}, m={m}: {g}",
                )
                got = gysin(p_v, cat.sm_pair, gam, cat.sm_pair_dual(i, with_b=True))
                rep.note(
                    got == -omit_b,
                    lambda g=got, k=k, i=i, m=m: f"figure8_!(a^{i} b) at k={k}, m={m}: {g}",
                )
    return rep


def _random_homogeneous(ring, rng, degrees):
    d = rng.choice(degrees)
    basis = ring.basis(d)
    picks = rng.sample(basis, k=min(len(basis), rng.randint(1, 3)))
    return ring.element(
        {m: Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for m in picks}
    )


def _random_dual(ring, rng, monos):
    picks = rng.sample(monos, k=min(len(monos), rng.randint(1, 3)))
    from .homology import HomologyElement

    return HomologyElement(
        ring, {m: Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for m in picks}
    )


def verify_ring_axioms(params: SpaceParams, random_checks: int = 1000, seed: int = 0) -> Report:
    """Kernel law suite, exhaustive over the SM and level-2 rings.

    Covers graded commutativity, unit, truncation, associativity, the cap
    module axiom, the pairing adjunction, duality bijectivity and the
    diagonal/cup adjunction, then adds randomized combination checks.
    """
    cat = catalog_for(params)
    rep = Report(f"ring axioms ({params.token}, n={params.n})")
    spaces = [cat.sm, cat.sm_pair, cat.gamma(2)]

    for space in spaces:
        ring = space.ring
        monos = list(ring.monomials())
        elems = {m: ring.element({m: 1}) for m in monos}
        duals = {m: dual(ring, m) for m in monos}
        one = ring.one()

        for g in ring.generators:
            rep.note(
                (ring.gen(g.name) ** g.truncation).is_zero(),
                f"{ring!r}: {g.name}^{g.truncation} != 0",
            )
        for m, e in elems.items():
            rep.note(one * e == e and e * one == e, lambda m=m: f"unit law fails at {m}")

        for ma, ea in elems.items():
            da = ring.monomial_degree(ma)
            for mb, eb in elems.items():
                db = ring.monomial_degree(mb)
                ab = ea * eb
                ba = eb * ea
                flip = -1 if (da % 2 and db % 2) else 1
                rep.note(
                    ab == ba * flip,
                    lambda ma=ma, mb=mb: f"graded commutativity fails at {ma}, {mb}",
                )

        for ma, ea in elems.items():
            for mb, eb in elems.items():
                ab = ea * eb
                for mc, ec in elems.items():
                    rep.note(
                        ab * ec == ea * (eb * ec),
                        lambda ma=ma, mb=mb, mc=mc: f"associativity fails at {ma},{mb},{mc}",
                    )

        for ma, ea in elems.items():
            for mb, eb in elems.items():
                ba = eb * ea
                for mx, dx in duals.items():
                    inner = cap(ea, dx)
                    rep.note(
                        cap(ba, dx) == cap(eb, inner),
                        lambda ma=ma, mb=mb, mx=mx: f"cap module axiom fails at {ma},{mb},{mx}",
                    )
                    rep.note(
                        pairing(eb, inner) == pairing(ba, dx),
                        lambda ma=ma, mb=mb, mx=mx: f"pairing adjunction fails at {ma},{mb},{mx}",
                    )

        seen = set()
        for m, e in elems.items():
            image = pd(space, e)
            rep.note(len(image.terms) == 1, lambda m=m: f"pd not monomial at {m}")
            seen.update(image.terms)
            rep.note(
                pd_inverse(space, image) == e,
                lambda m=m: f"pd_inverse . pd != id at {m}",
            )
        rep.note(seen == set(monos), f"{ring!r}: pd is not a bijection on bases")

        square = tensor_ring(ring, ring)
        for mx, dx in duals.items():
            push = diagonal_pushforward(dx, square)
            for ma, ea in elems.items():
                for mb, eb in elems.items():
                    lhs = pairing(cross(ea, eb, square), push)
                    rhs = pairing(ea * eb, dx)
                    rep.note(
                        lhs == rhs,
                        lambda ma=ma, mb=mb, mx=mx: f"diagonal adjunction fails at {ma},{mb},{mx}",
                    )

    rng = random.Random(seed)
    pool = []
    for space in spaces:
        ring = space.ring
        degrees = [d for d, dim in ring.poincare_series(ring.top_degree) if dim]
        pool.append((ring, degrees, list(ring.monomials())))
    rounds = (random_checks + 3) // 4
    for _ in range(rounds):
        ring, degrees, monos = rng.choice(pool)
        a = _random_homogeneous(ring, rng, degrees)
        b = _random_homogeneous(ring, rng, degrees)
        c = _random_homogeneous(ring, rng, degrees) + _random_homogeneous(ring, rng, degrees)
        x = _random_dual(ring, rng, monos)
        da, db = a.degree() or 0, b.degree() or 0
        flip = -1 if (da % 2 and db % 2) else 1
        rep.note(a * b == (b * a) * flip, lambda: f"random commutativity: {a} vs {b}")
        rep.note((a * b) * c == a * (b * c), lambda: f"random associativity: {a},{b},{c}")
        rep.note(
            cap(b * a, x) == cap(b, cap(a, x)),
            lambda: f"random cap module axiom: {a},{b},{x}",
        )
        rep.note(
            pairing(b, cap(a, x)) == pairing(b * a, x),
            lambda: f"random pairing adjunction: {a},{b},{x}",
        )
    return rep


def verify_structure(params: SpaceParams, max_k: int = 12) -> Report:
    """Structural facts about the level rings up to max_k.

    Total dimension 2n * 2^(2k-1), top degree lambda_k + 2N - 1 attained
    once, and the odd/even degree split of the two generator families.
    """
    cat = catalog_for(params)
    rep = Report(f"structure ({params.token}, n={params.n}, k<={max_k})")
    for k in range(1, max_k + 1):
        ring = cat.gamma(k).ring
        series = dict(ring.poincare_series(ring.top_degree))
        total = sum(series.values())
        rep.note(
            total == 2 * params.n * 2 ** (2 * k - 1),
            f"k={k}: total dimension {total}",
        )
        expected_top = params.lambda_k(k) + 2 * params.N - 1
        rep.note(
            ring.top_degree == expected_top,
            f"k={k}: top degree {ring.top_degree} != {expected_top}",
        )
        rep.note(series[ring.top_degree] == 1, f"k={k}: top degree not one-dimensional")
        for i in range(params.n):
            rep.note(cat.deg_A(k, i) % 2 == 1, f"deg_A({k},{i}) is even")
            rep.note(cat.deg_B(k, i) % 2 == 0, f"deg_B({k},{i}) is odd")
    return rep
