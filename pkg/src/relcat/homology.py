"""Cohomology of CDGAs with product structure, induced maps and
quasi-isomorphism checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional

from .algebra import Algebra, Elem, GradedBasis, TableAlgebra
from .linalg import Echelon, kernel as null_space
from .morphism import AlgebraMorphism, common_degree


class CohomologyError(ValueError):
    pass


def cohomology_range(A: Algebra, upto: Optional[int] = None) -> int:
    """Largest degree whose cohomology is computable (d out of it must exist)."""
    if A.complete:
        return A.top_degree if upto is None else upto
    limit = A.cutoff - 1
    if upto is None:
        return limit
    if upto > limit:
        raise CohomologyError(
            f"cohomology in degree {upto} needs the algebra up to degree {upto + 1}, "
            f"but it stops at {A.max_degree}")
    return upto


@dataclass
class _Degree:
    reps: List[Elem]
    ech: Echelon        # coboundaries first, then representatives
    nbound: int
    zdim: int
    bdim: int


@dataclass
class CohomologyAlgebra:
    source: Algebra
    table: TableAlgebra
    reps: List[Elem]
    upto: int
    #: True when classes above ``upto`` may exist (products landing there are dropped)
    truncated: bool
    _degrees: Dict[int, _Degree] = field(repr=False, default_factory=dict)
    _offset: Dict[int, int] = field(repr=False, default_factory=dict)

    def dims(self) -> List[int]:
        return [len(self._degrees[n].reps) for n in range(self.upto + 1)]

    def class_of(self, z: Elem) -> Elem:
        """The cohomology class of a cocycle, as an element of ``table``."""
        A = self.source
        n = A.elem_degree(z)
        if n is None:
            return {}
        if n > self.upto:
            if self.truncated:
                return {}
            raise CohomologyError(f"degree {n} above computed range")
        if A.d(z):
            raise CohomologyError(f"not a cocycle: {A.fmt(z)}")
        info = self._degrees[n]
        coeffs = info.ech.express(A.to_vec(z))
        if coeffs is None:
            raise CohomologyError("cocycle not in Z: inconsistent echelon")
        off = self._offset[n]
        return {off + i - info.nbound: c for i, c in coeffs.items() if i >= info.nbound and c}

    def is_coboundary(self, z: Elem) -> bool:
        return not self.class_of(z)


def cohomology(A: Algebra, upto: Optional[int] = None, name: str = "") -> CohomologyAlgebra:
    """H*(A) in degrees ≤ upto with canonical representatives.

    Representatives are the cocycle echelon rows reduced modulo coboundaries
    (and earlier representatives), kept whenever they are nonzero.
    """
    top = cohomology_range(A, upto)
    degrees: Dict[int, _Degree] = {}
    bounds: Dict[int, List] = {}
    for n in range(top + 1):
        keys = A.basis(n)
        if n > 0:
            prev = A.basis(n - 1)
            bounds[n] = [A.to_vec(A.d_basis(k)) for k in prev]
        else:
            bounds[n] = []
        if not keys:
            degrees[n] = _Degree([], Echelon(track=True), 0, 0, 0)
            continue
        dvecs = [A.to_vec(A.d_basis(k)) for k in keys]
        Z = null_space(dvecs)
        ech = Echelon(track=True)
        for v in bounds[n]:
            ech.insert(v)
        nb = ech.inserted
        bdim = ech.rank
        reps = []
        for z in Z:
            r = ech.reduce(z)
            if r:
                ech.insert(r)
                reps.append(A.from_vec(r, n))
        # trim the echelon so only coboundaries and reps were inserted
        degrees[n] = _Degree(reps, ech, nb, len(Z), bdim)
    items, offset, allreps = [], {}, []
    for n in range(top + 1):
        offset[n] = len(items)
        for r in degrees[n].reps:
            piv = min(A.to_vec(r))
            items.append((f"[{A.name(A.basis(n)[piv])}]", n))
            allreps.append(r)
    truncated = not (A.complete and top >= A.top_degree)
    H = CohomologyAlgebra(A, None, allreps, top, truncated, degrees, offset)
    prod = {}
    for i, a in enumerate(allreps):
        da = items[i][1]
        for j, b in enumerate(allreps):
            if j < i:
                continue
            if da + items[j][1] > top:
                continue
            c = H.class_of(A.mul(a, b))
            if c:
                prod[(i, j)] = c
    unit_idx = 0 if items and items[0][1] == 0 else None
    if unit_idx is None:
        raise CohomologyError("algebra has no degree-0 cohomology")
    # unit class must be the class of 1
    one = H.class_of(A.unit())
    if one != {0: 1}:
        raise CohomologyError("degree-0 cohomology is not spanned by the unit")
    H.table = TableAlgebra(GradedBasis(items), prod, {}, unit=0,
                           name=name or (f"H({A.label})" if A.label else "H"))
    return H


def induced_map(phi: AlgebraMorphism, HS: Optional[CohomologyAlgebra] = None,
                HT: Optional[CohomologyAlgebra] = None, upto: Optional[int] = None) -> AlgebraMorphism:
    """H(φ) between the cohomology tables.

    Source classes above the target's range map to 0 when the target
    cohomology is complete there, and are left out otherwise.
    """
    if upto is None and HS is None and HT is None and phi.source.complete and phi.target.complete:
        upto = max(phi.source.top_degree, phi.target.top_degree)
        HS = cohomology(phi.source, phi.source.top_degree)
        HT = cohomology(phi.target, phi.target.top_degree)
    if upto is None:
        upto = min(cohomology_range(phi.source), cohomology_range(phi.target),
                   common_degree(phi.source, phi.target))
    HS = HS if HS is not None else cohomology(phi.source, upto)
    HT = HT if HT is not None else cohomology(phi.target, upto)
    top = min(HS.upto, HT.upto) if HT.truncated else HS.upto
    imgs = {}
    for i, r in enumerate(HS.reps):
        if HS.table.degree(i) > top:
            continue
        if HS.table.degree(i) > HT.upto:
            imgs[i] = {}
            continue
        img = phi(r)
        if phi.target.d(img):
            raise CohomologyError(f"image of a cocycle is not a cocycle: {phi.target.fmt(img)}")
        imgs[i] = HT.class_of(img)
    return AlgebraMorphism(HS.table, HT.table, imgs, name=f"H({phi.name})" if phi.name else "H")


@dataclass
class QuasiIsoVerdict:
    per_degree: Dict[int, tuple]   # n -> (dim H^n source, dim H^n target, rank)
    ok: bool

    def failures(self) -> List[int]:
        return [n for n, (a, b, r) in sorted(self.per_degree.items()) if not (a == b == r)]

    def log(self) -> List[str]:
        return [f"H^{n}: {a} -> {b}, rank {r}" for n, (a, b, r) in sorted(self.per_degree.items())]


def is_quasi_iso(phi: AlgebraMorphism, upto: Optional[int] = None) -> QuasiIsoVerdict:
    """Compare H(φ) degree by degree; with both ends finite the default
    range is every degree where either side is nonzero."""
    S, T = phi.source, phi.target
    if upto is None and S.complete and T.complete:
        upto = max(S.top_degree, T.top_degree)
        HS = cohomology(S, S.top_degree)
        HT = cohomology(T, T.top_degree)
    else:
        if upto is None:
            upto = min(cohomology_range(S), cohomology_range(T), common_degree(S, T))
        HS = cohomology(S, upto)
        HT = cohomology(T, upto)
    f = induced_map(phi, HS, HT, upto)
    per = {}
    for n in range(upto + 1):
        a = HS.table.dim(n) if n <= HS.table.max_degree else 0
        b = HT.table.dim(n) if n <= HT.table.max_degree else 0
        r = f.matrix_rank(n) if a and b else 0
        per[n] = (a, b, r)
    ok = all(a == b == r for a, b, r in per.values())
    return QuasiIsoVerdict(per, ok)
