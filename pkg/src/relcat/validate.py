"""Axiom checks for algebras and morphisms.

Checks never raise on a violated axiom; they collect ``Violation`` records
naming the witnessing basis elements.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from .algebra import Algebra, DegreeOverflow, FreeCDGA, TableAlgebra
from .linalg import vadd, vscale
from .morphism import AlgebraMorphism, common_degree


@dataclass(frozen=True)
class Violation:
    kind: str
    witness: Tuple[str, ...]
    detail: str = ""

    def __str__(self):
        return f"{self.kind} at ({', '.join(self.witness)}): {self.detail}"


@dataclass
class ValidationReport:
    violations: List[Violation] = field(default_factory=list)
    checked_upto: Optional[int] = None

    @property
    def ok(self) -> bool:
        return not self.violations

    def add(self, kind, witness, detail=""):
        self.violations.append(Violation(kind, tuple(witness), detail))

    def kinds(self):
        return sorted({v.kind for v in self.violations})


def _sgn(p):
    return -1 if p & 1 else 1


def _check_table(A: TableAlgebra, rep: ValidationReport) -> None:
    keys = A.all_keys()
    deg, nm = A.degree, A.name
    for (i, j), v in A.table_entries().items():
        for k in v:
            if deg(k) != deg(i) + deg(j):
                rep.add("degree", (nm(i), nm(j)), f"product has a term {nm(k)} in degree {deg(k)}")
    for i, v in A.differential_entries().items():
        for k in v:
            if deg(k) != deg(i) + 1:
                rep.add("degree", (nm(i),), f"d has a term {nm(k)} in degree {deg(k)}")
    u = A.unit_key
    for i in keys:
        if A.mul_basis(u, i) != {i: 1} or A.mul_basis(i, u) != {i: 1}:
            rep.add("unit", (nm(i),), "unit does not act as identity")
    if A.d_basis(u):
        rep.add("leibniz", (nm(u),), "d(1) != 0")
    for a, i in enumerate(keys):
        for j in keys[a:]:
            lhs = A.mul_basis(i, j)
            rhs = vscale(A.mul_basis(j, i), _sgn(deg(i) * deg(j)))
            if lhs != rhs:
                rep.add("commutativity", (nm(i), nm(j)),
                        f"{A.fmt(lhs)} != {A.fmt(rhs)}")
    for i in keys:
        for j in keys:
            ij = A.mul_basis(i, j)
            for k in keys:
                left = A.mul(ij, {k: 1})
                right = A.mul({i: 1}, A.mul_basis(j, k))
                if left != right:
                    rep.add("associativity", (nm(i), nm(j), nm(k)),
                            f"{A.fmt(left)} != {A.fmt(right)}")
    for i in keys:
        dd = A.d(A.d_basis(i))
        if dd:
            rep.add("d^2", (nm(i),), A.fmt(dd))
    for i in keys:
        for j in keys:
            lhs = A.d(A.mul_basis(i, j))
            rhs = vadd(A.mul(A.d_basis(i), {j: 1}), A.mul({i: 1}, A.d_basis(j)), _sgn(deg(i)))
            if lhs != rhs:
                rep.add("leibniz", (nm(i), nm(j)), f"{A.fmt(lhs)} != {A.fmt(rhs)}")


def _check_free(A: FreeCDGA, rep: ValidationReport, simply_connected: bool) -> None:
    base_rep = ValidationReport()
    _check_table(A.base, base_rep)
    rep.violations.extend(base_rep.violations)
    for g, d in A.gens:
        if simply_connected and d < 2:
            rep.add("degree", (g,), f"degree {d} generator in a simply-connected model")
        dg = A.d_basis(A.gen_key(g)) if d + 1 <= A.max_degree else {}
        for k in dg:
            if A.degree(k) != d + 1:
                rep.add("degree", (g,), f"d{g} has a term {A.name(k)} in degree {A.degree(k)}")
                break
        if d + 2 <= A.max_degree:
            dd = A.d(dg)
            if dd:
                rep.add("d^2", (g,), A.fmt(dd))


def validate_algebra(A: Algebra, simply_connected: bool = False) -> ValidationReport:
    """Check unit, degree additivity, graded commutativity, associativity,
    d² = 0 and Leibniz.

    For free algebras the product axioms hold by construction, so only the
    base table and the generator differentials are inspected (d² is a
    derivation, so vanishing on generators is enough).
    """
    rep = ValidationReport(checked_upto=A.max_degree)
    if isinstance(A, TableAlgebra):
        _check_table(A, rep)
    elif isinstance(A, FreeCDGA):
        _check_free(A, rep, simply_connected)
    else:
        raise TypeError(f"cannot validate {type(A).__name__}")
    return rep


def check_morphism(phi: AlgebraMorphism, upto: Optional[int] = None) -> ValidationReport:
    """Degree preservation, multiplicativity and d-compatibility up to ``upto``."""
    S, T = phi.source, phi.target
    top = common_degree(S, T) if upto is None else upto
    rep = ValidationReport(checked_upto=top)
    if isinstance(S, FreeCDGA):
        base = S.base
        keys = [(b, ()) for n in range(min(top, base.max_degree) + 1) for b in base.basis(n)]
        gkeys = [S.gen_key(g) for g, d in S.gens if d <= top]
        pair_keys = keys
    else:
        keys = S.all_keys(top)
        gkeys = []
        pair_keys = keys
    for k in keys + gkeys:
        img = phi.apply_basis(k)
        for x in img:
            if T.degree(x) != S.degree(k):
                rep.add("degree", (S.name(k),), f"image has a term {T.name(x)} of degree {T.degree(x)}")
                break
    if S.unit() and phi(S.unit()) != T.unit():
        rep.add("unit", ("1",), "unit not preserved")
    for a, i in enumerate(pair_keys):
        for j in pair_keys[a:]:
            if S.degree(i) + S.degree(j) > top:
                continue
            lhs = phi(S.mul_basis(i, j))
            rhs = T.mul(phi.apply_basis(i), phi.apply_basis(j))
            if lhs != rhs:
                rep.add("multiplicativity", (S.name(i), S.name(j)),
                        f"{T.fmt(lhs)} != {T.fmt(rhs)}")
    for k in keys + gkeys:
        if S.degree(k) + 1 > top:
            continue
        try:
            lhs = phi(S.d_basis(k))
            rhs = T.d(phi.apply_basis(k))
        except DegreeOverflow:
            continue
        if lhs != rhs:
            rep.add("differential", (S.name(k),), f"{T.fmt(lhs)} != {T.fmt(rhs)}")
    if phi.section is not None:
        s = phi.section
        for k in T.all_keys(top):
            back = phi(s.apply_basis(k))
            if back != {k: 1}:
                rep.add("section", (T.name(k),), f"phi(s({T.name(k)})) = {T.fmt(back)}")
    return rep
