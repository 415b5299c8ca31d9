"""Module retractions of the join model k_n: the msecat / mrelcat solver.

A (B,d)-module retraction r: (A⊗ΛW, D̄) → A is a degree-preserving linear
map with r∘k_n = id, r∘D̄ = d∘r and r(s(b)·x) = s(b)·r(x), B acting through
the section s.  All conditions are linear in the values of r on the basis
elements a⊗ω with ω ∈ Λ⁺W, so existence is a linear feasibility problem.
Since A is finite, r vanishes above top(A) and every condition landing
there is empty: once the cutoff reaches top(A) the truncated system is the
whole system.

Equations carry labels ``d|x|a`` (component a of r(D̄x) - d r(x)) and
``mod|b|x|a`` (component a of r(s(b)x) - s(b) r(x)); the certificate checker
rebuilds them from these labels on its own.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .algebra import TableAlgebra
from .invariants import basis_doc, elem_doc, product_doc
from .linalg import Echelon, Vec
from .morphism import AlgebraMorphism, compose
from .sullivan import JoinModel, ModelError, join_model
from .validate import check_morphism


class SectionError(ValueError):
    pass


@dataclass
class RetractionSystem:
    jm: JoinModel
    section: AlgebraMorphism
    bound: int                               # largest degree of the system
    variables: List[Tuple[object, int]]      # (J key, A basis index)
    var_index: Dict[Tuple[object, int], int]
    labels: List[str]
    degrees: List[int]                       # target degree of each equation
    rows: List[Vec]
    rhs: List[Fraction]

    @property
    def nvars(self) -> int:
        return len(self.variables)


def check_section(phi: AlgebraMorphism, s: AlgebraMorphism) -> None:
    """s must be a CDGA morphism B → A with φ∘s = id."""
    if s.source is not phi.target or s.target is not phi.source:
        raise SectionError("the section must go from the target of φ back to its source")
    rep = check_morphism(s)
    if not rep.ok:
        raise SectionError(f"section is not a CDGA morphism: {rep.violations[0]}")
    B = phi.target
    for b in B.all_keys():
        if phi(s.apply_basis(b)) != {b: 1}:
            raise SectionError(f"φ∘s ≠ id at {B.name(b)}")


def system_degree(A: TableAlgebra, cutoff: int) -> int:
    return min(cutoff, A.top_degree)


def build_system(jm: JoinModel, s: AlgebraMorphism, bound: int) -> RetractionSystem:
    A: TableAlgebra = jm.source
    B = jm.phi.target
    J = jm.algebra
    variables, index = [], {}
    for t in range(bound + 1):
        for x in J.basis(t):
            if not x[1]:
                continue
            for j, a in enumerate(A.basis(t)):
                index[(x, a)] = len(variables)
                variables.append((x, a))
    labels, degrees, rows, rhs = [], [], [], []

    def emit(prefix: str, x, e: int, image, left):
        """Equations r(image) - left(r(x)) = 0, components in A_e."""
        for a in A.basis(e):
            row: Vec = {}
            const = Fraction(0)
            for y, c in image.items():
                if y[1]:
                    v = index.get((y, a))
                    if v is not None:
                        row[v] = row.get(v, 0) + c
                elif y[0] == a:
                    const -= c
            for a2 in A.basis(J.degree(x)):
                coef = left(a2).get(a, 0)
                if coef:
                    v = index[(x, a2)]
                    row[v] = row.get(v, 0) - coef
            row = {k: Fraction(c) for k, c in row.items() if c}
            if not row and not const:
                continue
            labels.append(f"{prefix}|{A.name(a)}")
            degrees.append(e)
            rows.append(row)
            rhs.append(const)

    # r∘D̄ = d∘r on x ∈ A⊗Λ⁺W; on A itself this holds because D̄|A = d
    for t in range(bound):
        for x in J.basis(t):
            if x[1]:
                emit(f"d|{J.name(x)}", x, t + 1, J.d_basis(x), A.d_basis)
    # B-linearity through s
    for b in B.all_keys():
        db = B.degree(b)
        if db == 0:
            continue
        sb = s.apply_basis(b)
        for t in range(bound - db + 1):
            for x in J.basis(t):
                if not x[1]:
                    continue
                act = J.mul(J.base_elem(sb), {x: 1})
                emit(f"mod|{B.name(b)}|{J.name(x)}", x, t + db, act,
                     lambda a2, sb=sb: A.mul(sb, {a2: 1}))
    return RetractionSystem(jm, s, bound, variables, index, labels, degrees, rows, rhs)


@dataclass
class Obstruction:
    n: int
    degree: int
    multipliers: Dict[str, Fraction]
    system: RetractionSystem = field(repr=False)


def solve_system(sysm: RetractionSystem):
    """Least-degree obstruction, or the solution with free variables at 0.

    Equations are eliminated in order of their degree; the first degree at
    which 0 = 1 becomes derivable is the obstruction degree, and its
    multipliers only involve equations up to that degree.
    """
    sentinel = sysm.nvars
    ech = Echelon(track=True)
    order = sorted(range(len(sysm.rows)), key=lambda i: sysm.degrees[i])
    pos = 0
    while pos < len(order):
        e = sysm.degrees[order[pos]]
        inserted = []
        while pos < len(order) and sysm.degrees[order[pos]] == e:
            i = order[pos]
            aug = dict(sysm.rows[i])
            if sysm.rhs[i]:
                aug[sentinel] = sysm.rhs[i]
            ech.insert(aug)
            inserted.append(i)
            pos += 1
        bad = ech.rows.get(sentinel)
        if bad is not None:
            # combos index inserted vectors in insertion order
            y = {}
            for slot, c in ech.combos[sentinel].items():
                if c:
                    y[sysm.labels[order[slot]]] = c
            return None, Obstruction(sysm.jm.n, e, y, sysm)
    x: Vec = {}
    for p, row in ech.rows.items():
        v = row.get(sentinel, 0)
        if v:
            x[p] = v
    return x, None


@dataclass
class RetractionCertificate:
    n: int
    bound: int
    #: True when the system covers every degree where r can be nonzero
    complete: bool
    #: degree -> J basis name -> image in A (name -> coefficient)
    matrices: Dict[int, Dict[str, Dict[str, Fraction]]]
    flags: Dict[str, bool]
    jm: JoinModel = field(repr=False)
    section: AlgebraMorphism = field(repr=False)
    normalized: bool = False

    def image(self, x) -> dict:
        J, A = self.jm.algebra, self.jm.source
        row = self.matrices[J.degree(x)].get(J.name(x), {})
        return {A.lookup(a): c for a, c in row.items()}

    def apply(self, v) -> dict:
        out = {}
        for x, c in v.items():
            if self.jm.algebra.degree(x) > self.bound:
                continue
            for a, q in self.image(x).items():
                out[a] = out.get(a, 0) + c * q
        return {a: q for a, q in out.items() if q}

    @property
    def retraction(self) -> bool:
        return all(self.flags[k] for k in ("restricts_to_identity", "commutes_with_d", "module_map"))

    @property
    def relative(self) -> bool:
        return self.retraction and self.flags["lands_in_K"]


def _matrices(jm: JoinModel, bound: int, value) -> Dict[int, Dict[str, Dict[str, Fraction]]]:
    J, A = jm.algebra, jm.source
    out = {}
    for t in range(bound + 1):
        deg = {}
        for x in J.basis(t):
            img = value(x)
            deg[J.name(x)] = {A.name(a): Fraction(c) for a, c in
                              sorted(img.items(), key=lambda kv: A.index(t)[kv[0]]) if c}
        out[t] = deg
    return out


def retraction_flags(cert: RetractionCertificate) -> Dict[str, bool]:
    """Check the four retraction conditions with the algebra objects."""
    jm, s = cert.jm, cert.section
    J, A, B, phi = jm.algebra, jm.source, jm.phi.target, jm.phi
    D = cert.bound
    ident = all(cert.image((a, ())) == {a: 1} for a in A.all_keys(D))
    commutes = True
    for t in range(D):
        for x in J.basis(t):
            if cert.apply(J.d_basis(x)) != A.d(cert.image(x)):
                commutes = False
    module = True
    for b in B.all_keys():
        sb = s.apply_basis(b)
        for t in range(D - B.degree(b) + 1):
            for x in J.basis(t):
                if cert.apply(J.mul(J.base_elem(sb), {x: 1})) != A.mul(sb, cert.image(x)):
                    module = False
    in_k = all(not phi(cert.image(x)) for t in range(D + 1) for x in J.basis(t) if x[1])
    return {"restricts_to_identity": ident, "commutes_with_d": commutes,
            "module_map": module, "lands_in_K": in_k}


def certificate_from_solution(sysm: RetractionSystem, x: Vec, complete: bool) -> RetractionCertificate:
    jm = sysm.jm
    vals: Dict[object, dict] = {}
    for v, c in x.items():
        key, a = sysm.variables[v]
        vals.setdefault(key, {})[a] = c

    def value(key):
        if not key[1]:
            return {key[0]: 1}
        return vals.get(key, {})

    cert = RetractionCertificate(jm.n, sysm.bound, complete, _matrices(jm, sysm.bound, value), {},
                                 jm, sysm.section)
    cert.flags = retraction_flags(cert)
    return cert


def normalize_retraction(cert: RetractionCertificate, s: Optional[AlgebraMorphism] = None,
                         phi: Optional[AlgebraMorphism] = None) -> RetractionCertificate:
    """r'(a) = a and r'(aω) = r(aω) - sφr(aω) for ω ∈ Λ⁺W."""
    s = s if s is not None else cert.section
    phi = phi if phi is not None else cert.jm.phi
    bad = [k for k in ("restricts_to_identity", "commutes_with_d", "module_map") if not cert.flags[k]]
    if bad:
        raise ValueError(f"not a module retraction: {', '.join(bad)} failed")
    sphi = compose(s, phi)

    def value(key):
        r = cert.image(key)
        if not key[1]:
            return r
        out = dict(r)
        for a, c in sphi(r).items():
            out[a] = out.get(a, 0) - c
        return {a: c for a, c in out.items() if c}

    out = RetractionCertificate(cert.n, cert.bound, cert.complete, _matrices(cert.jm, cert.bound, value),
                                {}, cert.jm, s, normalized=True)
    out.flags = retraction_flags(out)
    return out


@dataclass
class MsecatStep:
    n: int
    feasible: bool
    certificate: Optional[RetractionCertificate] = None
    obstruction: Optional[Obstruction] = None
    generators: int = 0
    equations: int = 0
    unknowns: int = 0


@dataclass
class MsecatResult:
    value: Optional[int]
    n_max: int
    cutoff: int
    bound: int
    complete: bool
    steps: List[MsecatStep]
    #: n at which the search stopped because the tensor power grew past the size limit
    stopped: Optional[int] = None

    def text(self) -> str:
        if self.value is None and self.stopped is not None:
            return f"> {self.stopped - 1} (stopped at n = {self.stopped}: size limit)"
        if self.value is None:
            return f"> {self.n_max}"
        if self.complete:
            return f"{self.value}"
        return f"<= {self.value} (uncertified: cutoff below top degree)"


MAX_TENSOR_DIM = 729


def msecat(phi: AlgebraMorphism, s: AlgebraMorphism, n_max: int = 4, cutoff: int = 16,
           max_tensor_dim: int = MAX_TENSOR_DIM) -> MsecatResult:
    """Least n ≤ n_max for which k_n admits a (B,d)-module retraction.

    The search stops (without a verdict) at the first n with
    dim(A)^(n+1) > max_tensor_dim.
    """
    A = phi.source
    if not isinstance(A, TableAlgebra):
        raise ModelError("msecat needs φ with a finite table source")
    if s is None:
        raise SectionError("msecat needs a section s of φ")
    check_section(phi, s)
    D = system_degree(A, cutoff)
    if D < 1 and A.top_degree >= 1:
        raise ValueError("cutoff too small to express any constraint")
    complete = cutoff >= A.top_degree
    steps = []
    total = sum(A.dims())
    for n in range(n_max + 1):
        if total ** (n + 1) > max_tensor_dim:
            return MsecatResult(None, n_max, cutoff, D, complete, steps, stopped=n)
        jm = join_model(phi, n, max(2, D))
        sysm = build_system(jm, s, D)
        x, obs = solve_system(sysm)
        step = MsecatStep(n, obs is None, generators=len(jm.algebra.gens),
                          equations=len(sysm.rows), unknowns=sysm.nvars)
        if obs is None:
            step.certificate = certificate_from_solution(sysm, x, complete)
            steps.append(step)
            return MsecatResult(n, n_max, cutoff, D, complete, steps)
        step.obstruction = obs
        steps.append(step)
    return MsecatResult(None, n_max, cutoff, D, complete, steps)


# ---------------------------------------------------------------------------
# certificate documents


def system_doc(jm: JoinModel, s: AlgebraMorphism, bound: int) -> dict:
    """Everything the independent checker needs to rebuild the equations."""
    A, B, J, phi = jm.source, jm.phi.target, jm.algebra, jm.phi
    Jd = {}
    for t in range(bound):
        for x in J.basis(t):
            Jd[J.name(x)] = elem_doc(J, J.d_basis(x))
    action = []
    for b in B.all_keys():
        if B.degree(b) == 0:
            continue
        sb = s.apply_basis(b)
        for t in range(bound - B.degree(b) + 1):
            for x in J.basis(t):
                if x[1]:
                    action.append([B.name(b), J.name(x), elem_doc(J, J.mul(J.base_elem(sb), {x: 1}))])
    return {
        "n": jm.n,
        "degree_bound": bound,
        "A": {"basis": basis_doc(A, bound),
              "d": {A.name(a): elem_doc(A, A.d_basis(a)) for a in A.all_keys(bound) if A.d_basis(a)},
              "product": product_doc(A, bound)},
        "B": {"basis": basis_doc(B, min(bound, B.max_degree))},
        "section": {B.name(b): elem_doc(A, s.apply_basis(b)) for b in B.all_keys(min(bound, B.max_degree))},
        "phi": {A.name(a): elem_doc(B, phi.apply_basis(a)) for a in A.all_keys(bound)},
        "J": {"basis": basis_doc(J, bound),
              "base": {J.name((a, ())): A.name(a) for a in A.all_keys(bound)},
              "d": Jd,
              "action": action},
    }


def retraction_doc(cert: RetractionCertificate) -> dict:
    doc = system_doc(cert.jm, cert.section, cert.bound)
    doc["kind"] = "retraction"
    doc["complete"] = cert.complete
    doc["normalized"] = cert.normalized
    doc["r"] = {x: {a: str(c) for a, c in img.items()}
                for t in sorted(cert.matrices) for x, img in cert.matrices[t].items()}
    doc["flags"] = dict(cert.flags)
    return doc


def obstruction_doc(obs: Obstruction) -> dict:
    sysm = obs.system
    doc = system_doc(sysm.jm, sysm.section, sysm.bound)
    doc["kind"] = "obstruction"
    doc["degree"] = obs.degree
    doc["multipliers"] = {k: str(v) for k, v in sorted(obs.multipliers.items())}
    return doc
