"""Loop-space homology classes and the operations between them.

The relative homology of the free loop space modulo constant loops has one
generator per (family, level, index): an odd-degree family A and an even
family B, with dual cohomology generators written s (sigma) and m (mu).  This
module computes the level-splitting coproduct twice, once from the closed
formula and once through the completing-manifold pipeline, the dual product
on cohomology, the presentation-ring normal form, and Betti counts, together
with the verification sweeps tying them together.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .homology import HomologyElement, cap, diagonal_pushforward, dual
from .ring import RingElement, as_coeff
from .spaces import SpaceCatalog, SpaceParams, catalog_for
from .verify import Report

__all__ = [
    "CohClass",
    "LoopClass",
    "PipelineMatchError",
    "PresMonomial",
    "TensorCohClass",
    "TensorLoopClass",
    "ThomPullback",
    "betti",
    "betti_table",
    "cap_with_thom",
    "coh_cross",
    "coproduct_closed",
    "coproduct_pipeline",
    "gamma_class",
    "generator_degree",
    "gh_dual_pairing",
    "gh_product",
    "gh_product_pairs",
    "presentation_normalize",
    "tensor_pairing",
    "thom_pullback",
    "verify_coassociativity",
    "verify_duality",
    "verify_pipeline",
    "verify_presentation",
]

_KIND_RANK = {"A": 0, "B": 1, "s": 0, "m": 1}
_COH_TO_LOOP = {"s": "A", "m": "B"}


class PipelineMatchError(RuntimeError):
    """A capped class missed the precomputed wrong-way images.

    This never happens when the sign conventions are consistent, so it
    indicates a broken convention rather than bad input.
    """


def generator_degree(params: SpaceParams, kind: str, k: int, i: int) -> int:
    """Homology degree of A/B (equal to the degree of s/m) at (k, i)."""
    params.check_index(i)
    base = params.lambda_k(k)
    if kind in ("A", "s"):
        return base + i * (params.lam + 1)
    if kind in ("B", "m"):
        return base + (i + 1) * (params.lam + 1) + params.N - 1
    raise ValueError(f"unknown generator kind {kind!r}")


class _FormalSum:
    """Shared container behavior for the four class types."""

    kinds: frozenset[str] = frozenset()
    pair = False

    __slots__ = ("params", "terms")

    def __init__(self, params: SpaceParams, terms: dict | None = None):
        self.params = params
        clean = {}
        for key, c in (terms or {}).items():
            c = as_coeff(c)
            if not c:
                continue
            self._check_key(key)
            clean[key] = c
        self.terms = clean

    def _check_key(self, key) -> None:
        parts = key if self.pair else (key,)
        for part in parts:
            kind, k, i = part
            if kind not in self.kinds:
                raise ValueError(f"unexpected generator kind {kind!r}")
            self.params.check_level(k)
            self.params.check_index(i)

    @classmethod
    def zero(cls, params: SpaceParams):
        return cls(params, {})

    @classmethod
    def generator(cls, params: SpaceParams, kind: str, k: int, i: int):
        return cls(params, {(kind, k, i): 1})

    def _key_degree(self, key) -> int:
        if self.pair:
            return sum(generator_degree(self.params, *part) for part in key)
        return generator_degree(self.params, *key)

    def degree(self) -> int | None:
        degs = {self._key_degree(key) for key in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def sorted_terms(self) -> list[tuple[object, Fraction]]:
        def rank(key):
            parts = key if self.pair else (key,)
            return tuple((_KIND_RANK[kind], k, i) for kind, k, i in parts)

        return [(key, self.terms[key]) for key in sorted(self.terms, key=rank)]

    def _same(self, other) -> None:
        if type(other) is not type(self) or other.params != self.params:
            raise ValueError("operands are classes over different spaces")

    def __add__(self, other):
        self._same(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, Fraction(0)) + c
        return type(self)(self.params, out)

    def __neg__(self):
        return type(self)(self.params, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, scalar):
        scalar = as_coeff(scalar)
        return type(self)(self.params, {k: c * scalar for k, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        return (
            type(other) is type(self)
            and self.params == other.params
            and self.terms == other.terms
        )

    __hash__ = None

    def __repr__(self) -> str:
        if not self.terms:
            return "0"

        def atom(part):
            kind, k, i = part
            return f"{kind}[{k},{i}]"

        bits = []
        for key, c in self.sorted_terms():
            body = " x ".join(atom(p) for p in key) if self.pair else atom(key)
            bits.append(body if c == 1 else f"{c}*{body}")
        return " + ".join(bits)


class LoopClass(_FormalSum):
    """Rational combination of loop-homology generators A[k,i], B[k,i]."""

    kinds = frozenset("AB")


class TensorLoopClass(_FormalSum):
    """Combination of tensor pairs of loop-homology generators."""

    kinds = frozenset("AB")
    pair = True


class CohClass(_FormalSum):
    """Rational combination of the dual cohomology generators s[k,i], m[k,i]."""

    kinds = frozenset("sm")


class TensorCohClass(_FormalSum):
    """Combination of tensor pairs of cohomology generators."""

    kinds = frozenset("sm")
    pair = True


# -- the coproduct, closed form --------------------------------------


def coproduct_closed(x: LoopClass) -> TensorLoopClass:
    """Level-splitting coproduct from the closed formula.

    A[k,i] splits into sum_{m,j} A[m,j] x A[k-m,i-j]; B[k,i] into the two
    mixed A/B families over the same ranges.  Level-1 classes map to zero.
    """
    out: dict = {}
    for (kind, k, i), c in x.terms.items():
        for m in range(1, k):
            for j in range(i + 1):
                if kind == "A":
                    _bump(out, (("A", m, j), ("A", k - m, i - j)), c)
                else:
                    _bump(out, (("A", m, j), ("B", k - m, i - j)), c)
                    _bump(out, (("B", m, j), ("A", k - m, i - j)), c)
    return TensorLoopClass(x.params, out)


def _bump(d: dict, key, c) -> None:
    d[key] = d.get(key, Fraction(0)) + c


# -- the coproduct, completing-manifold pipeline ----------------------


@dataclass(frozen=True)
class ThomPullback:
    """Pullback of the tubular Thom class to the level-k manifold.

    One fiber class x_{2m} per interior break index m; the index doubles as
    the marker of the interval factor it pairs with.
    """

    k: int
    terms: tuple[tuple[int, RingElement], ...]


def thom_pullback(catalog: SpaceCatalog, k: int) -> ThomPullback:
    """The fiber classes x_2, x_4, .. x_{2(k-1)}; empty at level 1."""
    catalog.params.check_level(k)
    ring = catalog.gamma(k).ring
    return ThomPullback(k, tuple((m, ring.gen(f"x{2 * m}")) for m in range(1, k)))


def gamma_class(catalog: SpaceCatalog, kind: str, k: int, i: int) -> HomologyElement:
    """The level-k carrier of A[k,i] or B[k,i], with its intrinsic sign.

    A classes are carried by -[a^i x_1 .. x_{2k-1}] and B classes by
    +[a^i b x_1 .. x_{2k-1}].
    """
    params = catalog.params
    params.check_level(k)
    params.check_index(i)
    if kind not in ("A", "B"):
        raise ValueError(f"unknown generator kind {kind!r}")
    ring = catalog.gamma(k).ring
    exps = {f"x{j}": 1 for j in range(1, 2 * k)}
    if i:
        exps["a"] = i
    if kind == "B":
        exps["b"] = 1
    return dual(ring, ring.monomial(exps), 1 if kind == "B" else -1)


def cap_with_thom(
    catalog: SpaceCatalog, k: int, x: HomologyElement
) -> list[tuple[int, HomologyElement]]:
    """Cap each Thom fiber class into x, with the cross-product sign.

    Capping x_{2m} x [interval] into x x [interval] leaves the interval
    factor alone at the cost of (-1)^{deg x}, which is the sign applied here.
    """
    if x.terms and x.degree() is None:
        raise ValueError("cap_with_thom input must be homogeneous")
    sign = -1 if (x.degree() or 0) % 2 else 1
    return [(m, cap(xi, x) * sign) for m, xi in thom_pullback(catalog, k).terms]


def _match_wrongway(catalog, k, m, z: HomologyElement) -> dict[tuple[int, bool], Fraction]:
    """Express a capped class as a wrong-way image from SM x_M SM.

    Matches against the precomputed images of the full dual basis and then
    insists the matched class is spanned by the diagonal duals (a^j and
    a^j b); anything else trips PipelineMatchError.
    """
    table = catalog.pv_gysin_table(k, m)
    acc: dict = {}
    for mono, c in z.terms.items():
        hit = table.get(mono)
        if hit is None:
            raise PipelineMatchError(
                f"unmatched component [{z.ring.monomial_str(mono)}] at level {k}, break {m}"
            )
        u, sign = hit
        _bump(acc, u, c / sign)
    ring = catalog.sm_pair.ring
    out: dict[tuple[int, bool], Fraction] = {}
    for u, cu in acc.items():
        if not cu:
            continue
        exps = ring.exponents_by_name(u)
        if exps.get("xi"):
            raise PipelineMatchError(
                f"fiber-class component [{ring.monomial_str(u)}] at level {k}, break {m}"
            )
        out[(exps.get("a", 0), bool(exps.get("b")))] = cu
    return out


def _loop_key(ring, mono, level: int) -> tuple[str, int, int]:
    exps = ring.exponents_by_name(mono)
    return ("B" if exps.get("b") else "A", level, exps.get("a", 0))


def coproduct_pipeline(x: LoopClass, catalog: SpaceCatalog | None = None) -> TensorLoopClass:
    """Recompute the coproduct through the completing manifolds.

    Per generator at level k: cap the carrier class with each Thom fiber
    class, recognize the result as a wrong-way image from SM x_M SM, replace
    the matched diagonal classes by diagonal pushforwards over SM, and read
    the tensor factors off at levels (m, k - m).  No sign enters in the last
    step; the factor conventions already absorb it.
    """
    cat = catalog or catalog_for(x.params)
    out: dict = {}
    for (kind, k, i), c in x.terms.items():
        carrier = gamma_class(cat, kind, k, i)
        for m, z in cap_with_thom(cat, k, carrier):
            matched = _match_wrongway(cat, k, m, z)
            for (j, with_b), cu in matched.items():
                exps: dict[str, int] = {}
                if j:
                    exps["a"] = j
                if with_b:
                    exps["b"] = 1
                spread = diagonal_pushforward(
                    dual(cat.sm.ring, cat.sm.ring.monomial(exps)), cat.sm_tensor
                )
                for tmono, dc in spread.terms.items():
                    ml, mr = cat.sm_tensor.split(tmono)
                    key = (
                        _loop_key(cat.sm.ring, ml, m),
                        _loop_key(cat.sm.ring, mr, k - m),
                    )
                    _bump(out, key, c * cu * dc)
    return TensorLoopClass(x.params, out)


# -- the dual product --------------------------------------------------


def _gh_key(params, ka, kb):
    kind_a, la, ia = ka
    kind_b, lb, ib = kb
    if kind_a == "m" and kind_b == "m":
        return None
    i = ia + ib
    if i > params.n - 1:
        return None
    kind = "s" if (kind_a, kind_b) == ("s", "s") else "m"
    return (kind, la + lb, i)


def gh_product(a: CohClass, b: CohClass) -> CohClass:
    """Product on the dual generators: s*s -> s, s*m -> m, m*m = 0.

    Levels add, indices add and truncate above n - 1; the degree grows by
    deg a + deg b + N - 1.
    """
    if a.params != b.params:
        raise ValueError("operands are classes over different spaces")
    out: dict = {}
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            key = _gh_key(a.params, ka, kb)
            if key is not None:
                _bump(out, key, ca * cb)
    return CohClass(a.params, out)


def gh_product_pairs(t: TensorCohClass) -> CohClass:
    """Multiply out a sum of tensor pairs, bilinearly."""
    out: dict = {}
    for (ka, kb), c in t.terms.items():
        key = _gh_key(t.params, ka, kb)
        if key is not None:
            _bump(out, key, c)
    return CohClass(t.params, out)


def gh_dual_pairing(a: CohClass, x: LoopClass) -> Fraction:
    """Kronecker pairing, s[k,i] against A[k,i] and m[k,i] against B[k,i]."""
    if a.params != x.params:
        raise ValueError("operands are classes over different spaces")
    total = Fraction(0)
    for (kind, k, i), c in a.terms.items():
        cx = x.terms.get((_COH_TO_LOOP[kind], k, i))
        if cx is not None:
            total += c * cx
    return total


def coh_cross(a: CohClass, b: CohClass) -> TensorCohClass:
    if a.params != b.params:
        raise ValueError("operands are classes over different spaces")
    out: dict = {}
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            _bump(out, (ka, kb), ca * cb)
    return TensorCohClass(a.params, out)


def tensor_pairing(t: TensorCohClass, x: TensorLoopClass) -> Fraction:
    """Componentwise Kronecker pairing of tensor classes; no extra sign."""
    if t.params != x.params:
        raise ValueError("operands are classes over different spaces")
    total = Fraction(0)
    for ((ka, kb)), c in t.terms.items():
        key = (
            (_COH_TO_LOOP[ka[0]], ka[1], ka[2]),
            (_COH_TO_LOOP[kb[0]], kb[1], kb[2]),
        )
        cx = x.terms.get(key)
        if cx is not None:
            total += c * cx
    return total


# -- presentation ring -------------------------------------------------


@dataclass(frozen=True)
class PresMonomial:
    """Monomial w^e of the level generator times alpha_i and beta_i powers.

    ``alphas[j]`` is the exponent of alpha_{j+1} (indices 1 .. n-1) and
    ``betas[j]`` the exponent of beta_j (indices 0 .. n-1).  The constant
    monomial is excluded; the presentation ring has no unit adjoined.
    """

    omega: int
    alphas: tuple[int, ...]
    betas: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.omega < 0 or any(e < 0 for e in self.alphas + self.betas):
            raise ValueError("exponents must be non-negative")
        if self.factor_count == 0:
            raise ValueError("the constant monomial is not in the presentation ring")

    @classmethod
    def build(
        cls,
        params: SpaceParams,
        omega: int = 0,
        alphas: dict[int, int] | None = None,
        betas: dict[int, int] | None = None,
    ) -> PresMonomial:
        n = params.n
        a = [0] * (n - 1)
        for idx, e in (alphas or {}).items():
            if not 1 <= idx <= n - 1:
                raise ValueError(f"alpha index {idx} outside 1 .. {n - 1}")
            a[idx - 1] = e
        b = [0] * n
        for idx, e in (betas or {}).items():
            if not 0 <= idx <= n - 1:
                raise ValueError(f"beta index {idx} outside 0 .. {n - 1}")
            b[idx] = e
        return cls(omega, tuple(a), tuple(b))

    @property
    def factor_count(self) -> int:
        return self.omega + sum(self.alphas) + sum(self.betas)

    @property
    def sub_index(self) -> int:
        return sum((j + 1) * e for j, e in enumerate(self.alphas)) + sum(
            j * e for j, e in enumerate(self.betas)
        )

    @property
    def beta_count(self) -> int:
        return sum(self.betas)

    def mul(self, other: PresMonomial) -> PresMonomial:
        if len(self.alphas) != len(other.alphas):
            raise ValueError("presentation monomials over different n")
        return PresMonomial(
            self.omega + other.omega,
            tuple(x + y for x, y in zip(self.alphas, other.alphas)),
            tuple(x + y for x, y in zip(self.betas, other.betas)),
        )


def presentation_normalize(p: PresMonomial, params: SpaceParams) -> CohClass:
    """Normal form of a presentation monomial among the dual generators.

    With k factors, total sub-index s and c beta factors the monomial maps
    to s[k,s] when c = 0, to m[k,s] when c = 1, and to zero otherwise or when
    s exceeds n - 1.
    """
    if len(p.alphas) != params.n - 1 or len(p.betas) != params.n:
        raise ValueError("presentation monomial does not match n")
    k = p.factor_count
    s = p.sub_index
    c = p.beta_count
    if c > 1 or s > params.n - 1:
        return CohClass.zero(params)
    return CohClass.generator(params, "s" if c == 0 else "m", k, s)


# -- Betti numbers -----------------------------------------------------


def betti(params: SpaceParams, d: int) -> int:
    """Dimension of the relative loop homology in degree d."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    count = 0
    k = 1
    while params.lambda_k(k) <= d:
        for i in range(params.n):
            if generator_degree(params, "A", k, i) == d:
                count += 1
            if generator_degree(params, "B", k, i) == d:
                count += 1
        k += 1
    return count


def betti_table(params: SpaceParams, max_degree: int) -> list[tuple[int, int]]:
    """Pairs (d, dim) for d = 0 .. max_degree."""
    if max_degree < 0:
        raise ValueError("degree must be non-negative")
    counts = [0] * (max_degree + 1)
    k = 1
    while params.lambda_k(k) <= max_degree:
        for i in range(params.n):
            for kind in "AB":
                d = generator_degree(params, kind, k, i)
                if d <= max_degree:
                    counts[d] += 1
        k += 1
    return list(enumerate(counts))


# -- verification sweeps ----------------------------------------------


def _loop_keys(params: SpaceParams, max_k: int):
    for k in range(1, max_k + 1):
        for kind in "AB":
            for i in range(params.n):
                yield (kind, k, i)


def _coh_keys(params: SpaceParams, max_k: int):
    for k in range(1, max_k + 1):
        for kind in "sm":
            for i in range(params.n):
                yield (kind, k, i)


def verify_duality(params: SpaceParams, max_k: int) -> Report:
    """<a * b, X> == <a x b, coproduct X> over all basis triples.

    Products range over pairs of total level at most max_k and X over all
    basis generators of level at most max_k.
    """
    rep = Report(f"duality ({params.token}, n={params.n}, level<={max_k})")
    coh = list(_coh_keys(params, max_k - 1))
    split = {}
    for key in _loop_keys(params, max_k):
        x = LoopClass.generator(params, *key)
        split[key] = (x, coproduct_closed(x))
    for ka in coh:
        ca = CohClass.generator(params, *ka)
        for kb in coh:
            if ka[1] + kb[1] > max_k:
                continue
            cb = CohClass.generator(params, *kb)
            prod = gh_product(ca, cb)
            crossed = coh_cross(ca, cb)
            for key, (x, vee) in split.items():
                lhs = gh_dual_pairing(prod, x)
                rhs = tensor_pairing(crossed, vee)
                rep.note(
                    lhs == rhs,
                    lambda ka=ka, kb=kb, key=key, lhs=lhs, rhs=rhs: (
                        f"<{ka}*{kb}, {key}>: {lhs} != {rhs}"
                    ),
                )
    return rep


def _triple_closed(params: SpaceParams, kind: str, k: int, i: int) -> dict:
    """Direct three-way splitting, the common value of both coassociations."""
    out: dict = {}
    for m1 in range(1, k - 1):
        for m2 in range(1, k - m1):
            m3 = k - m1 - m2
            for j1 in range(i + 1):
                for j2 in range(i - j1 + 1):
                    j3 = i - j1 - j2
                    if kind == "A":
                        _bump(out, (("A", m1, j1), ("A", m2, j2), ("A", m3, j3)), 1)
                    else:
                        _bump(out, (("B", m1, j1), ("A", m2, j2), ("A", m3, j3)), 1)
                        _bump(out, (("A", m1, j1), ("B", m2, j2), ("A", m3, j3)), 1)
                        _bump(out, (("A", m1, j1), ("A", m2, j2), ("B", m3, j3)), 1)
    return out


def verify_coassociativity(params: SpaceParams, max_k: int) -> Report:
    """Both iterated coproducts agree, and match the direct triple split."""
    rep = Report(f"coassociativity ({params.token}, n={params.n}, k<={max_k})")
    for key in _loop_keys(params, max_k):
        vee = coproduct_closed(LoopClass.generator(params, *key))
        left: dict = {}
        right: dict = {}
        for (u, v), c in vee.terms.items():
            for (p, q), d in coproduct_closed(LoopClass.generator(params, *u)).terms.items():
                _bump(left, (p, q, v), c * d)
            for (p, q), d in coproduct_closed(LoopClass.generator(params, *v)).terms.items():
                _bump(right, (u, p, q), c * d)
        left = {t: c for t, c in left.items() if c}
        right = {t: c for t, c in right.items() if c}
        direct = _triple_closed(params, *key)
        rep.note(left == right, lambda key=key: f"coassociativity fails at {key}")
        rep.note(left == direct, lambda key=key: f"triple split mismatch at {key}")
    return rep


def verify_pipeline(
    params: SpaceParams, max_k: int, catalog: SpaceCatalog | None = None
) -> Report:
    """The completing-manifold pipeline equals the closed formula."""
    cat = catalog or catalog_for(params)
    rep = Report(f"pipeline ({params.token}, n={params.n}, k<={max_k})")
    for key in _loop_keys(params, max_k):
        x = LoopClass.generator(params, *key)
        try:
            piped = coproduct_pipeline(x, cat)
        except PipelineMatchError as err:
            rep.note(False, f"{key}: {err}")
            continue
        rep.note(
            piped == coproduct_closed(x),
            lambda key=key, piped=piped: f"{key}: pipeline gives {piped!r}",
        )
    return rep


def _pres_monomials(params: SpaceParams, factors: int):
    """All presentation monomials with the given factor count."""
    slots = 1 + (params.n - 1) + params.n
    for combo in itertools.combinations_with_replacement(range(slots), factors):
        exps = [0] * slots
        for slot in combo:
            exps[slot] += 1
        yield PresMonomial(
            exps[0],
            tuple(exps[1 : params.n]),
            tuple(exps[params.n :]),
        )


def verify_presentation(
    params: SpaceParams, max_level: int, omega_max: int | None = None
) -> Report:
    """The normal form is a well-defined, surjective ring map.

    Checks the generating relations, multiplicativity over monomial pairs up
    to the level bound, surjectivity witnesses for every s[k,i] and m[k,i],
    and that powers of the level generator w stay nonzero.
    """
    rep = Report(f"presentation ({params.token}, n={params.n}, level<={max_level})")
    n = params.n
    if omega_max is None:
        omega_max = 2 * max_level

    def norm(p: PresMonomial) -> CohClass:
        return presentation_normalize(p, params)

    alpha = {i: PresMonomial.build(params, alphas={i: 1}) for i in range(1, n)}
    beta = {i: PresMonomial.build(params, betas={i: 1}) for i in range(n)}
    omega = PresMonomial.build(params, omega=1)

    for i, j in itertools.product(range(1, n), repeat=2):
        value = norm(alpha[i].mul(alpha[j]))
        if i + j > n - 1:
            rep.note(value.is_zero(), f"alpha_{i} alpha_{j} does not vanish")
        else:
            rep.note(
                value == CohClass.generator(params, "s", 2, i + j),
                f"alpha_{i} alpha_{j} misses s[2,{i + j}]",
            )
    for i, j in itertools.product(range(1, n), range(n)):
        value = norm(alpha[i].mul(beta[j]))
        if i + j > n - 1:
            rep.note(value.is_zero(), f"alpha_{i} beta_{j} does not vanish")
        else:
            rep.note(
                value == CohClass.generator(params, "m", 2, i + j),
                f"alpha_{i} beta_{j} misses m[2,{i + j}]",
            )
    for i, j in itertools.product(range(n), repeat=2):
        rep.note(
            norm(beta[i].mul(beta[j])).is_zero(),
            f"beta_{i} beta_{j} does not vanish",
        )

    by_count = {f: list(_pres_monomials(params, f)) for f in range(1, max_level)}
    for f1, monos1 in by_count.items():
        for f2, monos2 in by_count.items():
            if f1 + f2 > max_level:
                continue
            for p in monos1:
                np_ = norm(p)
                for q in monos2:
                    rep.note(
                        norm(p.mul(q)) == gh_product(np_, norm(q)),
                        lambda p=p, q=q: f"multiplicativity fails at {p} * {q}",
                    )

    for k in range(1, max_level + 1):
        rep.note(
            norm(PresMonomial.build(params, omega=k))
            == CohClass.generator(params, "s", k, 0),
            f"w^{k} misses s[{k},0]",
        )
        for i in range(1, n):
            rep.note(
                norm(PresMonomial.build(params, omega=k - 1, alphas={i: 1}))
                == CohClass.generator(params, "s", k, i),
                f"w^{k - 1} alpha_{i} misses s[{k},{i}]",
            )
        for i in range(n):
            rep.note(
                norm(PresMonomial.build(params, omega=k - 1, betas={i: 1}))
                == CohClass.generator(params, "m", k, i),
                f"w^{k - 1} beta_{i} misses m[{k},{i}]",
            )

    for k in range(1, omega_max + 1):
        value = norm(PresMonomial.build(params, omega=k))
        rep.note(
            not value.is_zero() and value == CohClass.generator(params, "s", k, 0),
            f"w^{k} is not s[{k},0]",
        )
    return rep
