"""Space catalog for the two projective families.

For M = CP^n the index jump is lam = 1 and the real dimension N = 2n; for
M = HP^n, lam = 3 and N = 4n.  The catalog builds the cohomology rings of the
unit tangent bundle SM, of the fiber product SM x_M SM, and of the level-k
completing manifolds, all with rational coefficients:

    H*(SM)        = Q[a, b] / (a^n, b^2)        |a| = lam + 1, |b| = N + lam
    H*(SM x_M SM) = Q[a, b, xi] / (.., xi^2)    |xi| = N - 1
    H*(level k)   = Q[a, b, x1 .. x_{2k-1}]     |x_odd| = lam, |x_even| = N - 1

with every x squaring to zero.  For n = 1 the class a satisfies a = 0, which
is represented by simply omitting the generator; the quotient presentation is
the same ring.

Rings, oriented spaces, pullbacks and wrong-way tables are cached per catalog,
and catalogs are cached per (family, n).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .homology import HomologyElement, OrientedSpace, RingMap, dual, gysin
from .ring import Generator, Monomial, Ring, TensorRing, tensor_ring

__all__ = ["SpaceCatalog", "SpaceParams", "catalog_for"]

_FAMILY_TOKENS = {
    "cp": "complex",
    "hp": "quaternionic",
    "complex": "complex",
    "quaternionic": "quaternionic",
}


@dataclass(frozen=True)
class SpaceParams:
    """Family and rank of the base projective space."""

    family: str
    n: int

    def __post_init__(self) -> None:
        if self.family not in ("complex", "quaternionic"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.n < 1:
            raise ValueError("n must be at least 1")

    @classmethod
    def from_token(cls, token: str, n: int) -> SpaceParams:
        family = _FAMILY_TOKENS.get(token.lower())
        if family is None:
            raise ValueError(f"unknown space token {token!r}")
        return cls(family, n)

    @property
    def token(self) -> str:
        return "cp" if self.family == "complex" else "hp"

    @property
    def lam(self) -> int:
        """Index jump of the fibration: 1 for CP^n, 3 for HP^n."""
        return 1 if self.family == "complex" else 3

    @property
    def N(self) -> int:
        """Real dimension of the base."""
        return (2 if self.family == "complex" else 4) * self.n

    def lambda_k(self, k: int) -> int:
        """Index of the k-fold iterate, k*lam + (k-1)*(N-1)."""
        self.check_level(k)
        return k * self.lam + (k - 1) * (self.N - 1)

    def check_level(self, k: int) -> None:
        if k < 1:
            raise ValueError("level k must be >= 1")

    def check_index(self, i: int) -> None:
        if not 0 <= i <= self.n - 1:
            raise ValueError(f"index out of range for n={self.n}")


class SpaceCatalog:
    """Lazily built rings, spaces and pullbacks for one (family, n)."""

    def __init__(self, params: SpaceParams):
        self.params = params
        self._sm: OrientedSpace | None = None
        self._sm_pair: OrientedSpace | None = None
        self._sm_tensor: TensorRing | None = None
        self._gammas: dict[int, OrientedSpace] = {}
        self._pL: dict[int, RingMap] = {}
        self._pV: dict[tuple[int, int], RingMap] = {}
        self._pv_tables: dict[tuple[int, int], dict[Monomial, tuple[Monomial, Fraction]]] = {}

    def _base_generators(self) -> list[Generator]:
        p = self.params
        gens = []
        if p.n >= 2:
            gens.append(Generator("a", p.lam + 1, p.n))
        gens.append(Generator("b", p.N + p.lam, 2))
        return gens

    @property
    def sm(self) -> OrientedSpace:
        """Unit tangent bundle, dimension 2N - 1."""
        if self._sm is None:
            self._sm = OrientedSpace(Ring(self._base_generators()))
        return self._sm

    @property
    def sm_pair(self) -> OrientedSpace:
        """Fiber product SM x_M SM, dimension 3N - 2."""
        if self._sm_pair is None:
            p = self.params
            gens = self._base_generators()
            gens.append(Generator("xi", p.N - 1, 2))
            self._sm_pair = OrientedSpace(Ring(gens))
        return self._sm_pair

    @property
    def sm_tensor(self) -> TensorRing:
        """Tensor square of the SM ring, for diagonal pushforwards."""
        if self._sm_tensor is None:
            ring = self.sm.ring
            self._sm_tensor = tensor_ring(ring, ring)
        return self._sm_tensor

    def gamma(self, k: int) -> OrientedSpace:
        """Level-k completing manifold, dimension lambda_k + 2N - 1."""
        self.params.check_level(k)
        if k not in self._gammas:
            p = self.params
            gens = self._base_generators()
            for j in range(1, 2 * k):
                deg = p.lam if j % 2 == 1 else p.N - 1
                gens.append(Generator(f"x{j}", deg, 2))
            self._gammas[k] = OrientedSpace(Ring(gens))
        return self._gammas[k]

    def pullback_pL(self, k: int) -> RingMap:
        """Pullback along the retraction of the level-k manifold onto SM."""
        if k not in self._pL:
            gam = self.gamma(k).ring
            images = {"b": gam.gen("b")}
            if self.params.n >= 2:
                images["a"] = gam.gen("a")
            self._pL[k] = RingMap(self.sm.ring, gam, images)
        return self._pL[k]

    def pullback_pV(self, k: int, m: int) -> RingMap:
        """Pullback along the m-th figure-eight retraction onto SM x_M SM.

        Sends the fiber class xi to x_{2m}; requires 1 <= m <= k - 1.
        """
        self.params.check_level(k)
        if not 1 <= m <= k - 1:
            raise ValueError(f"break index m={m} outside 1 .. {k - 1}")
        key = (k, m)
        if key not in self._pV:
            gam = self.gamma(k).ring
            images = {"b": gam.gen("b"), "xi": gam.gen(f"x{2 * m}")}
            if self.params.n >= 2:
                images["a"] = gam.gen("a")
            self._pV[key] = RingMap(self.sm_pair.ring, gam, images)
        return self._pV[key]

    # -- degree bookkeeping -------------------------------------------

    def deg_A(self, k: int, i: int) -> int:
        """Degree of the odd family generator at level k: lambda_k + i(lam+1)."""
        p = self.params
        p.check_index(i)
        return p.lambda_k(k) + i * (p.lam + 1)

    def deg_B(self, k: int, i: int) -> int:
        """Degree of the even family generator: lambda_k + (i+1)(lam+1) + N - 1."""
        p = self.params
        p.check_index(i)
        return p.lambda_k(k) + (i + 1) * (p.lam + 1) + p.N - 1

    # -- distinguished classes ----------------------------------------

    def sm_monomial(self, i: int, with_b: bool = False) -> Monomial:
        self.params.check_index(i)
        exps: dict[str, int] = {}
        if i:
            exps["a"] = i
        if with_b:
            exps["b"] = 1
        return self.sm.ring.monomial(exps)

    def sm_dual(self, i: int, with_b: bool = False) -> HomologyElement:
        """Dual class of a^i (times b) over SM."""
        return dual(self.sm.ring, self.sm_monomial(i, with_b))

    def sm_pair_dual(self, i: int, with_b: bool = False) -> HomologyElement:
        """Dual class of a^i (times b) over SM x_M SM."""
        self.params.check_index(i)
        exps: dict[str, int] = {}
        if i:
            exps["a"] = i
        if with_b:
            exps["b"] = 1
        ring = self.sm_pair.ring
        return dual(ring, ring.monomial(exps))

    def pv_gysin_table(self, k: int, m: int) -> dict[Monomial, tuple[Monomial, Fraction]]:
        """Wrong-way images of the full dual basis of SM x_M SM at (k, m).

        Maps each image monomial of the level-k ring to the source basis
        monomial and the sign it arrived with.  Covering the full basis lets
        callers detect any unexpected component instead of silently dropping
        it.
        """
        key = (k, m)
        if key not in self._pv_tables:
            pmap = self.pullback_pV(k, m)
            pair = self.sm_pair
            gam = self.gamma(k)
            table: dict[Monomial, tuple[Monomial, Fraction]] = {}
            for u in pair.ring.monomials():
                image = gysin(pmap, pair, gam, dual(pair.ring, u))
                ((mono, coeff),) = image.terms.items()
                table[mono] = (u, coeff)
            self._pv_tables[key] = table
        return self._pv_tables[key]


_CATALOGS: dict[SpaceParams, SpaceCatalog] = {}


def catalog_for(params: SpaceParams) -> SpaceCatalog:
    """Shared catalog per (family, n); rings are cached inside it."""
    cat = _CATALOGS.get(params)
    if cat is None:
        cat = _CATALOGS.setdefault(params, SpaceCatalog(params))
    return cat
