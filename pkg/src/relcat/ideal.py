"""Graded ideals: kernels, powers, nilpotency and quotients."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional

from .algebra import Algebra, Elem, FreeCDGA, GradedBasis, TableAlgebra
from .linalg import Echelon, Vec, kernel as null_space
from .morphism import AlgebraMorphism, common_degree


class IdealError(ValueError):
    pass


class GradedIdeal:
    """Per-degree RREF spanning sets (coordinates in the ambient basis),
    known up to degree ``upto``."""

    def __init__(self, ambient: Algebra, spans: Dict[int, Iterable[Vec]], upto: Optional[int] = None):
        self.ambient = ambient
        self.upto = ambient.max_degree if upto is None else upto
        self._ech: Dict[int, Echelon] = {}
        for n, vecs in spans.items():
            if n > self.upto:
                continue
            e = Echelon(vecs)
            if e.rank:
                self._ech[n] = e

    def __repr__(self):
        return f"GradedIdeal(dims={self.dims()})"

    def degrees(self) -> List[int]:
        return sorted(self._ech)

    def basis(self, n: int) -> List[Vec]:
        e = self._ech.get(n)
        return e.basis() if e else []

    def elements(self, n: int) -> List[Elem]:
        return [self.ambient.from_vec(v, n) for v in self.basis(n)]

    def dim(self, n: int) -> int:
        e = self._ech.get(n)
        return e.rank if e else 0

    def dims(self) -> List[int]:
        return [self.dim(n) for n in range(self.upto + 1)]

    def is_zero(self) -> bool:
        return not self._ech

    def min_degree(self) -> Optional[int]:
        return min(self._ech) if self._ech else None

    def contains(self, a: Elem) -> bool:
        if not a:
            return True
        n = self.ambient.elem_degree(a)
        if n > self.upto:
            raise IdealError(f"degree {n} is beyond the known range {self.upto}")
        e = self._ech.get(n)
        v = self.ambient.to_vec(a)
        return e.contains(v) if e else not v

    def reduce(self, a: Elem) -> Elem:
        """Canonical representative of a modulo the ideal (homogeneous a)."""
        if not a:
            return {}
        n = self.ambient.elem_degree(a)
        e = self._ech.get(n)
        v = self.ambient.to_vec(a)
        if e:
            v = e.reduce(v)
        return self.ambient.from_vec(v, n)

    def pivots(self, n: int) -> List[int]:
        e = self._ech.get(n)
        return e.pivots() if e else []

    def includes(self, other: "GradedIdeal") -> bool:
        top = min(self.upto, other.upto)
        return all(self.contains(x) for n in range(top + 1) for x in other.elements(n))

    def same_as(self, other: "GradedIdeal") -> bool:
        return self.includes(other) and other.includes(self)

    def closure_violations(self) -> List[tuple]:
        """Pairs (basis element, spanning vector) whose product leaves the ideal."""
        A = self.ambient
        bad = []
        for n in self.degrees():
            for x in self.elements(n):
                for m in range(0, self.upto - n + 1):
                    for k in A.basis(m):
                        p = A.mul({k: 1}, x)
                        if not self.contains(p):
                            bad.append((A.name(k), A.fmt(x)))
        return bad

    def is_differential(self) -> Optional[tuple]:
        """None if dI ⊆ I within range; otherwise a witnessing element and its image."""
        A = self.ambient
        for n in self.degrees():
            if n + 1 > self.upto:
                continue
            for x in self.elements(n):
                dx = A.d(x)
                if not self.contains(dx):
                    return (A.fmt(x), A.fmt(dx))
        return None


def zero_ideal(A: Algebra) -> GradedIdeal:
    return GradedIdeal(A, {})


def kernel(phi: AlgebraMorphism, upto: Optional[int] = None) -> GradedIdeal:
    """ker φ, degree by degree, up to the common materialized degree."""
    S, T = phi.source, phi.target
    top = common_degree(S, T) if upto is None else upto
    if top > common_degree(S, T):
        raise IdealError(f"requested degree {top} exceeds common cutoff {common_degree(S, T)}")
    spans = {}
    for n in range(top + 1):
        imgs = [T.to_vec(phi.apply_basis(k)) for k in S.basis(n)]
        if imgs:
            ker = null_space(imgs)
            if ker:
                spans[n] = ker
    return GradedIdeal(S, spans, top)


def ideal_generated(A: Algebra, gens: Iterable[Elem], upto: Optional[int] = None) -> GradedIdeal:
    top = A.max_degree if upto is None else upto
    gens = [g for g in gens if g]
    spans: Dict[int, List[Vec]] = {}
    for g in gens:
        n = A.elem_degree(g)
        for m in range(0, top - n + 1):
            for k in A.basis(m):
                p = A.mul({k: 1}, g)
                if p:
                    spans.setdefault(n + m, []).append(A.to_vec(p))
    return GradedIdeal(A, spans, top)


def ideal_product(I: GradedIdeal, J: GradedIdeal) -> GradedIdeal:
    """Span of products x·y of spanning vectors (an ideal when I, J are)."""
    A = I.ambient
    top = min(I.upto, J.upto)
    spans: Dict[int, List[Vec]] = {}
    for n in I.degrees():
        xs = I.elements(n)
        for m in J.degrees():
            if n + m > top:
                break
            ys = J.elements(m)
            for x in xs:
                for y in ys:
                    p = A.mul(x, y)
                    if p:
                        spans.setdefault(n + m, []).append(A.to_vec(p))
    return GradedIdeal(A, spans, top)


def ideal_power(I: GradedIdeal, n: int) -> GradedIdeal:
    if n < 1:
        raise ValueError("ideal_power needs n >= 1")
    out = I
    for _ in range(n - 1):
        if out.is_zero():
            break
        out = ideal_product(out, I)
    return out


@dataclass(frozen=True)
class NilResult:
    value: int
    certified: bool
    #: degree range over which the powers were computed
    upto: int
    #: I, I^2, ..., I^(value+1); the last one is zero within range
    powers: tuple = field(default=(), repr=False, compare=False)

    def __str__(self):
        return f"{self.value}" if self.certified else f">= {self.value} (uncertified)"


def nil(I: GradedIdeal) -> NilResult:
    """Largest n with Iⁿ ≠ 0 (0 for the zero ideal).

    Powers are exact in the computed range; vanishing is only certified when
    the ambient algebra has nothing above that range.
    """
    if I.dim(0):
        raise IdealError("ideal meets degree 0, so it is not nilpotent")
    A = I.ambient
    certified = A.top_degree is not None and A.top_degree <= I.upto
    n = 0
    J = I
    powers = [I]
    while not J.is_zero():
        n += 1
        J = ideal_product(J, I)
        powers.append(J)
    return NilResult(n, certified, I.upto, tuple(powers))


@dataclass
class Quotient:
    algebra: TableAlgebra
    projection: AlgebraMorphism
    #: for each quotient basis index, the ambient key of its representative
    representatives: List[object]


def quotient_algebra(A: Algebra, I: GradedIdeal, name: str = "") -> Quotient:
    """A/I as a table algebra with the projection.

    The basis is the set of ambient basis elements that are not pivots of
    I's echelon form; classes are computed by echelon reduction.
    """
    if isinstance(A, FreeCDGA):
        if not A.complete:
            raise IdealError("quotients need a finite ambient algebra")
        A = A.to_table()
        I = GradedIdeal(A, {n: I.basis(n) for n in I.degrees()}, A.max_degree)
    bad = I.is_differential()
    if bad is not None:
        raise IdealError(f"ideal is not closed under d: d({bad[0]}) = {bad[1]}")
    if I.is_zero():
        from .morphism import identity
        return Quotient(A, identity(A, name="p"), list(A.all_keys()))
    reps = []
    for n in range(A.max_degree + 1):
        piv = set(I.pivots(n))
        for i, k in enumerate(A.basis(n)):
            if i not in piv:
                reps.append(k)
    pos = {k: i for i, k in enumerate(reps)}
    items = [(A.name(k), A.degree(k)) for k in reps]

    def cls(a: Elem) -> Dict[int, Fraction]:
        r = I.reduce(a)
        return {pos[k]: c for k, c in r.items()}

    prod = {}
    for k1 in reps:
        for k2 in reps:
            v = A.mul_basis(k1, k2)
            if v:
                c = cls(v)
                if c:
                    prod[(pos[k1], pos[k2])] = c
    diff = {}
    for k in reps:
        c = cls(A.d_basis(k))
        if c:
            diff[pos[k]] = c
    Q = TableAlgebra(GradedBasis(items), prod, diff, unit=pos[A.unit_key],
                     name=name or (f"{A.label}/I" if A.label else ""), factors=A.factors)
    imgs = {k: cls({k: 1}) for k in A.all_keys()}
    proj = AlgebraMorphism(A, Q, imgs, name="p")
    return Quotient(Q, proj, reps)
