"""Truncated relative Sullivan models of surjections and the join model k_n.

For a surjection π: C → Q we adjoin generators W to C so that
θ: (C⊗ΛW, D) → Q, θ|C = π, θ(W) = 0 becomes a quasi-isomorphism up to the
cutoff.  Since θ is onto, that is the same as ker θ = ker π ⊕ C⊗Λ⁺W being
acyclic, so every class of H^k(ker θ) is killed by one new generator of degree
k-1 whose differential is a canonical representative of it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

from .algebra import Algebra, Elem, FreeCDGA, TableAlgebra, tensor, tensor_elem
from .homology import is_quasi_iso
from .ideal import GradedIdeal, ideal_power, kernel, quotient_algebra
from .linalg import Echelon, kernel as null_space
from .morphism import AlgebraMorphism, multiplication_morphism
from .validate import ValidationReport, check_morphism, validate_algebra


class ModelError(ValueError):
    pass


@dataclass(frozen=True)
class GeneratorRecord:
    name: str
    degree: int
    d_value: str
    reason: str

    def __str__(self):
        return f"{self.name} |{self.degree}| D = {self.d_value}  ({self.reason})"


@dataclass
class RelativeModel:
    projection: AlgebraMorphism          # π: C → Q
    algebra: FreeCDGA                    # (C⊗ΛW, D)
    theta: AlgebraMorphism               # θ: C⊗ΛW → Q
    inclusion: AlgebraMorphism           # i: C → C⊗ΛW
    kernel: GradedIdeal                  # ker π
    log: List[GeneratorRecord]
    cutoff: int                          # certified degree

    @property
    def base(self) -> TableAlgebra:
        return self.projection.source

    @property
    def generators(self) -> List[Tuple[str, int]]:
        return list(self.algebra.gens)

    def w_free_part(self, a: Elem) -> Elem:
        """Component of an element in C ⊗ 1."""
        return {k[0]: c for k, c in a.items() if not k[1]}


def _kernel_theta_span(M: FreeCDGA, I: GradedIdeal, n: int) -> List[Elem]:
    """A spanning set of (ker θ)_n = I_n ⊕ (C⊗Λ⁺W)_n."""
    out = [M.base_elem(x) for x in I.elements(n)] if n <= I.upto else []
    for k in M.basis(n):
        if k[1]:
            out.append({k: 1})
    return out


def _new_classes(M: FreeCDGA, I: GradedIdeal, n: int) -> List[Elem]:
    """Canonical representatives of a basis of H^n(ker θ)."""
    span = _kernel_theta_span(M, I, n)
    if not span:
        return []
    dimg = [M.to_vec(M.d(x)) for x in span]
    rels = null_space(dimg)
    cycles = []
    for r in rels:
        z: Elem = {}
        for i, c in r.items():
            for k, v in span[i].items():
                z[k] = z.get(k, 0) + c * v
        z = {k: c for k, c in z.items() if c}
        if z:
            cycles.append(M.to_vec(z))
    ech = Echelon()
    if n >= 1:
        for x in _kernel_theta_span(M, I, n - 1):
            ech.insert(M.to_vec(M.d(x)))
    reps = []
    for z in Echelon(cycles).basis():
        r = ech.reduce(z)
        if r:
            c = r[min(r)]
            r = {k: v / c for k, v in r.items()}
            ech.insert(r)
            reps.append(M.from_vec(r, n))
    return reps


def relative_model(pi: AlgebraMorphism, cutoff: int, prefix: str = "w") -> RelativeModel:
    """Relative Sullivan model of a surjection π: C → Q certified to ``cutoff``."""
    C, Q = pi.source, pi.target
    if not isinstance(C, TableAlgebra) or not isinstance(Q, TableAlgebra):
        raise ModelError("relative_model needs a surjection between finite algebras")
    if cutoff < 2:
        raise ModelError("cutoff must be at least 2")
    for n in range(Q.max_degree + 1):
        if pi.matrix_rank(n) != Q.dim(n):
            raise ModelError(f"projection is not surjective in degree {n}")
    I = kernel(pi)
    gens: List[Tuple[str, int]] = []
    dgen: Dict[str, Elem] = {}
    log: List[GeneratorRecord] = []
    mcut = cutoff + 2
    M = FreeCDGA(gens, dgen, mcut, base=C, name="M")
    for k in range(1, cutoff + 2):
        while True:
            reps = _new_classes(M, I, k)
            if not reps:
                break
            if k - 1 < 1:
                raise ModelError(f"H^{k}(ker θ) ≠ 0 would need a degree-0 generator")
            count = sum(1 for _, d in gens if d == k - 1)
            new = []
            for z in reps:
                count += 1
                g = f"{prefix}{k - 1}_{count}"
                new.append((g, k - 1, z))
            gens = gens + [(g, d) for g, d, _ in new]
            M_old = M
            M = M.extend([(g, d) for g, d, _ in new], {g: z for g, _, z in new})
            for g, d, z in new:
                log.append(GeneratorRecord(g, d, M_old.fmt(z), f"kills a class of H^{k}(ker θ)"))
    theta = AlgebraMorphism(M, Q, {c: pi.apply_basis(c) for c in C.all_keys()},
                            {g: {} for g, _ in gens}, name="theta")
    inc = AlgebraMorphism(C, M, {c: M.base_elem({c: 1}) for c in C.all_keys()}, name="i")
    return RelativeModel(pi, M, theta, inc, I, log, cutoff)


def check_relative_model(rel: RelativeModel, quasi_iso: bool = True) -> ValidationReport:
    """θ∘i = π, θ(W) = 0, D² = 0, normal form of Dw, and the quasi-iso verdict."""
    M, C = rel.algebra, rel.base
    rep = ValidationReport(checked_upto=rel.cutoff)
    for c in C.all_keys():
        if rel.theta(rel.inclusion.apply_basis(c)) != rel.projection.apply_basis(c):
            rep.add("theta_i", (C.name(c),), "θ∘i ≠ π")
    for g, _ in M.gens:
        if rel.theta(M.gen(g)):
            rep.add("theta_W", (g,), "θ(w) ≠ 0")
    rep.violations.extend(validate_algebra(M).violations)
    for c in C.all_keys():
        if C.degree(c) + 1 > M.max_degree:
            continue
        if M.d_basis((c, ())) != M.base_elem(C.d_basis(c)):
            rep.add("base_d", (C.name(c),), "D restricted to the base differs from d")
    for g, d in M.gens:
        dw = M.d_basis(M.gen_key(g))
        if not rel.kernel.contains(rel.w_free_part(dw)):
            rep.add("normal_form", (g,), f"W-free part of D{g} is not in the kernel")
    if quasi_iso:
        v = is_quasi_iso(rel.theta, rel.cutoff)
        for n in v.failures():
            rep.add("quasi_iso", (f"H^{n}",), "; ".join(v.log()))
    return rep


# ---------------------------------------------------------------------------
# join model


def tensor_chain(A: TableAlgebra, m: int) -> List[TableAlgebra]:
    chain = [A]
    for _ in range(m - 1):
        chain.append(tensor(chain[-1], A))
    return chain


def tensor_power_ideal(chain: List[TableAlgebra], K: GradedIdeal) -> GradedIdeal:
    """K^{⊗m} inside A^{⊗m}: spanned by tensor products of kernel vectors."""
    A = chain[0]
    kel = [x for n in K.degrees() for x in K.elements(n)]
    elems = list(kel)
    for i in range(1, len(chain)):
        elems = [tensor_elem(chain[i - 1], A, chain[i], x, y) for x in elems for y in kel]
    T = chain[-1]
    spans: Dict[int, list] = {}
    for e in elems:
        if e:
            spans.setdefault(T.elem_degree(e), []).append(T.to_vec(e))
    return GradedIdeal(T, spans)


@dataclass
class JoinModel:
    n: int
    phi: AlgebraMorphism                 # φ: A → B
    kernel: GradedIdeal                  # K = ker φ
    relative: RelativeModel              # model of π: A^{⊗n+1} → A^{⊗n+1}/K^{⊗n+1}
    mu: AlgebraMorphism                  # μ_{n+1}
    algebra: FreeCDGA                    # (A⊗ΛW, D̄)
    base_change: AlgebraMorphism         # μ⊗id: C⊗ΛW → A⊗ΛW
    k: AlgebraMorphism                   # k_n: A → A⊗ΛW
    l: AlgebraMorphism                   # l_n: A⊗ΛW → B
    p: AlgebraMorphism                   # p_n: A → A/K^{n+1}
    lam: AlgebraMorphism                 # λ_n: A⊗ΛW → A/K^{n+1}
    phibar: AlgebraMorphism              # φ̄: A/K^{n+1} → B
    power_ideal: GradedIdeal             # K^{n+1}
    cutoff: int

    @property
    def source(self) -> TableAlgebra:
        return self.phi.source

    @property
    def log(self) -> List[GeneratorRecord]:
        return self.relative.log

    def w_free_part(self, a: Elem) -> Elem:
        return {k[0]: c for k, c in a.items() if not k[1]}


def as_table(A: Algebra) -> TableAlgebra:
    if isinstance(A, TableAlgebra):
        return A
    if A.complete:
        return A.to_table()
    raise ModelError("the source algebra must be finite dimensional")


def join_model(phi: AlgebraMorphism, n: int, cutoff: int) -> JoinModel:
    """k_n: A → (A⊗ΛW_{n+1}, D̄), the pushout of μ_{n+1} and the relative model i."""
    A = phi.source
    if not isinstance(A, TableAlgebra):
        raise ModelError("join_model needs φ with a finite table source")
    if n < 0:
        raise ModelError("n must be non-negative")
    if not phi.is_surjective():
        raise ModelError("φ is not surjective")
    K = kernel(phi)
    chain = tensor_chain(A, n + 1)
    C = chain[-1]
    mu = multiplication_morphism(A, n + 1)
    if isinstance(mu.source, TableAlgebra) and mu.source.graded != C.graded:
        raise ModelError("inconsistent tensor power")
    mu = AlgebraMorphism(C, A, {c: mu.apply_basis(c) for c in C.all_keys()}, name=f"mu_{n + 1}")
    Kt = tensor_power_ideal(chain, K)
    quot = quotient_algebra(C, Kt, name="C/K^(x)")
    rel = relative_model(quot.projection, cutoff)
    M = rel.algebra
    bare = FreeCDGA(M.gens, {}, M.cutoff, base=A, name="join")
    beta0 = AlgebraMorphism(M, bare, {c: bare.base_elem(mu.apply_basis(c)) for c in C.all_keys()},
                            {g: bare.gen(g) for g, _ in M.gens})
    dbar = {g: beta0(M.d_basis(M.gen_key(g))) for g, _ in M.gens}
    J = bare.with_differential(dbar)
    beta = AlgebraMorphism(M, J, {c: J.base_elem(mu.apply_basis(c)) for c in C.all_keys()},
                           {g: J.gen(g) for g, _ in M.gens}, name="base_change")
    k = AlgebraMorphism(A, J, {a: J.base_elem({a: 1}) for a in A.all_keys()}, name=f"k_{n}")
    zero_w = {g: {} for g, _ in M.gens}
    l = AlgebraMorphism(J, phi.target, {a: phi.apply_basis(a) for a in A.all_keys()}, zero_w,
                        name=f"l_{n}")
    Kp = ideal_power(K, n + 1)
    pq = quotient_algebra(A, Kp, name=f"A/K^{n + 1}")
    p = pq.projection
    lam = AlgebraMorphism(J, pq.algebra, {a: p.apply_basis(a) for a in A.all_keys()}, zero_w,
                          name=f"lambda_{n}")
    phibar = AlgebraMorphism(pq.algebra, phi.target,
                             {i: phi.apply_basis(r) for i, r in enumerate(pq.representatives)},
                             name="phibar")
    return JoinModel(n, phi, K, rel, mu, J, beta, k, l, p, lam, phibar, Kp, cutoff)


def check_join_model(jm: JoinModel, quasi_iso: bool = True) -> ValidationReport:
    """Every invariant of the relative model and of the pushout, on bases."""
    rep = check_relative_model(jm.relative, quasi_iso=quasi_iso)
    A, J, M = jm.source, jm.algebra, jm.relative.algebra
    top = jm.cutoff
    for name, f in (("k_n", jm.k), ("l_n", jm.l), ("lambda_n", jm.lam), ("base_change", jm.base_change),
                    ("phibar", jm.phibar)):
        for v in check_morphism(f, top).violations:
            rep.add(f"{name}:{v.kind}", v.witness, v.detail)
    for a in A.all_keys():
        if A.degree(a) + 1 > J.max_degree:
            continue
        if J.d_basis((a, ())) != J.base_elem(A.d_basis(a)):
            rep.add("base_d", (A.name(a),), "D̄ restricted to A differs from d")
        if jm.l(jm.k.apply_basis(a)) != jm.phi.apply_basis(a):
            rep.add("l_k", (A.name(a),), "l_n∘k_n ≠ φ")
        if jm.lam(jm.k.apply_basis(a)) != jm.p.apply_basis(a):
            rep.add("lambda_k", (A.name(a),), "λ_n∘k_n ≠ p_n")
    for g, _ in J.gens:
        dw = J.d_basis(J.gen_key(g))
        if not jm.kernel.contains(jm.w_free_part(dw)):
            rep.add("normal_form", (g,), f"W-free part of D̄{g} is not in K")
        if jm.phibar(jm.lam(J.gen(g))):
            rep.add("lambda_W", (g,), "λ_n(w) ∉ ker φ̄")
        if jm.base_change(M.d_basis(M.gen_key(g))) != dw:
            rep.add("pushout", (g,), "base change of Dw differs from D̄w")
    return rep


# ---------------------------------------------------------------------------
# τ verification


@dataclass
class TauVerdict:
    n: int
    morphism: bool
    restricts: bool
    w_in_kernel: bool
    report: ValidationReport

    @property
    def secat_bound(self) -> bool:
        return self.morphism and self.restricts

    @property
    def relcat_bound(self) -> bool:
        return self.secat_bound and self.w_in_kernel

    def summary(self) -> str:
        parts = []
        if self.secat_bound:
            parts.append(f"secat(f0) <= {self.n} certified")
        if self.relcat_bound:
            parts.append(f"relcat(f0) <= {self.n} certified")
        return "; ".join(parts) if parts else "no bound certified"


def verify_tau(tau: AlgebraMorphism, jm: JoinModel) -> TauVerdict:
    """Check a user-supplied τ against the join model.

    τ may start at the relative model (then τ∘i = μ_{n+1} is checked) or at
    the pushout A⊗ΛW (then τ∘k_n = id_A is checked).  The last condition is
    τ(W) ⊆ K.
    """
    A = jm.source
    M, J = jm.relative.algebra, jm.algebra
    if tau.target is not A and getattr(tau.target, "graded", None) != A.graded:
        raise ModelError("τ must land in the source algebra of φ")
    if tau.source is M:
        base_map, expected = jm.relative.inclusion, jm.mu
    elif tau.source is J:
        base_map = jm.k
        expected = AlgebraMorphism(A, A, {a: {a: 1} for a in A.all_keys()})
    else:
        raise ModelError("τ must start at the relative model or at the join model")
    rep = check_morphism(tau, jm.cutoff)
    morphism_ok = rep.ok
    restricts = True
    for c in base_map.source.all_keys():
        if tau(base_map.apply_basis(c)) != expected.apply_basis(c):
            restricts = False
            rep.add("restriction", (base_map.source.name(c),), "τ does not restrict correctly")
    w_ok = True
    for g, _ in tau.source.gens:
        img = tau.gen_images[g]
        if not jm.kernel.contains(img):
            w_ok = False
            rep.add("tau_W", (g,), f"τ({g}) = {A.fmt(img)} is not in K")
    return TauVerdict(jm.n, morphism_ok, restricts, w_ok, rep)


def tau_from_vanishing_power(jm: JoinModel) -> AlgebraMorphism:
    """When K^{n+1} = 0 the map λ_n already lands in A and serves as τ."""
    if not jm.power_ideal.is_zero():
        raise ModelError(f"K^{jm.n + 1} ≠ 0, so λ_{jm.n} does not land in A")
    A = jm.source
    return AlgebraMorphism(jm.algebra, A, {a: {a: 1} for a in A.all_keys()},
                           {g: {} for g, _ in jm.algebra.gens}, name=f"tau=lambda_{jm.n}")
