"""Cup-length, zero-divisor cup-length, kernel nilpotency and TC bound reports."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional

from .algebra import Algebra, TableAlgebra, tensor
from .homology import CohomologyAlgebra, cohomology
from .ideal import GradedIdeal, NilResult, kernel, nil
from .morphism import AlgebraMorphism, multiplication2


def qstr(c) -> str:
    return str(c)


def elem_doc(A: Algebra, a) -> Dict[str, str]:
    """Element as {basis name: rational string}, in canonical key order."""
    keys = sorted(a, key=lambda k: (A.degree(k), A.index(A.degree(k))[k]))
    return {A.name(k): qstr(a[k]) for k in keys if a[k]}


def basis_doc(A: Algebra, upto: int) -> List[list]:
    return [[A.name(k), A.degree(k)] for k in A.all_keys(upto)]


def product_doc(A: Algebra, upto: int) -> List[list]:
    keys = A.all_keys(upto)
    out = []
    for i, x in enumerate(keys):
        for y in keys:
            if A.degree(x) + A.degree(y) > upto:
                continue
            p = A.mul_basis(x, y)
            if p:
                out.append([A.name(x), A.name(y), elem_doc(A, p)])
    return out


@dataclass
class NilComputation:
    """nil of an ideal together with what is needed to re-check it."""
    result: NilResult
    ideal: GradedIdeal
    source: str                          # "kernel" or "augmentation"
    phi: Optional[AlgebraMorphism] = None

    @property
    def value(self) -> int:
        return self.result.value

    @property
    def certified(self) -> bool:
        return self.result.certified

    def __str__(self):
        return str(self.result)

    def certificate(self, label: str = "") -> dict:
        I = self.ideal
        A = I.ambient
        upto = I.upto
        doc = {
            "kind": "nil",
            "label": label,
            "ambient": {
                "basis": basis_doc(A, upto),
                "complete": A.complete,
                "top": A.top_degree,
                "upto": upto,
                "product": product_doc(A, upto),
            },
            "ideal": {"source": self.source},
            "powers": [[elem_doc(A, x) for n in P.degrees() for x in P.elements(n)]
                       for P in self.result.powers],
            "value": self.value,
            "certified": self.certified,
        }
        if self.phi is not None:
            T = self.phi.target
            tt = min(upto, T.max_degree)
            doc["ideal"]["target_basis"] = basis_doc(T, tt)
            doc["ideal"]["map"] = {A.name(k): elem_doc(T, self.phi.apply_basis(k))
                                   for k in A.all_keys(upto)}
        return doc


def augmentation_ideal(H: TableAlgebra) -> GradedIdeal:
    spans = {}
    for n in range(1, H.max_degree + 1):
        spans[n] = [{i: 1} for i in range(H.dim(n))]
    return GradedIdeal(H, spans)


def cuplength(H) -> NilComputation:
    """nil of the augmentation ideal of a cohomology algebra (d = 0)."""
    truncated = False
    if isinstance(H, CohomologyAlgebra):
        truncated = H.truncated
        H = H.table
    if not isinstance(H, TableAlgebra):
        raise TypeError("cuplength needs a finite algebra")
    if not H.d_is_zero():
        raise ValueError("cuplength needs a zero differential")
    res = nil(augmentation_ideal(H))
    if truncated:
        res = NilResult(res.value, False, res.upto, res.powers)
    return NilComputation(res, augmentation_ideal(H), "augmentation")


def nil_ker(phi: AlgebraMorphism, certified_ambient: bool = True) -> NilComputation:
    """nil(ker φ).  ``certified_ambient=False`` downgrades the verdict when the
    source is itself a truncation of something larger."""
    I = kernel(phi)
    res = nil(I)
    if not certified_ambient:
        res = NilResult(res.value, False, res.upto, res.powers)
    return NilComputation(res, I, "kernel", phi)


def zcl(A: Algebra) -> NilComputation:
    """nil(ker μ_A) for μ_A: A⊗A → A."""
    return nil_ker(multiplication2(A, tensor(A, A)))


def zcl_of_cohomology(H: CohomologyAlgebra) -> NilComputation:
    """Zero-divisor cup-length of H; uncertified if H is only a truncation."""
    return nil_ker(multiplication2(H.table, tensor(H.table, H.table)),
                   certified_ambient=not H.truncated)


# ---------------------------------------------------------------------------
# bound reports


@dataclass
class Bound:
    value: int
    certified: bool
    provenance: str
    certificate: Optional[str] = None

    def text(self) -> str:
        return f"= {self.value} (certified)" if self.certified else f">= {self.value} (uncertified)"

    def to_dict(self) -> dict:
        return {"value": self.value, "certified": self.certified, "text": self.text(),
                "provenance": self.provenance, "certificate": self.certificate}


@dataclass
class BoundReport:
    invariant: str
    model: str
    cutoff: int
    lower: Bound
    upper: Bound
    formal: bool = False
    exact: bool = False
    exact_reason: Optional[str] = None
    module: Optional[dict] = None
    notes: List[str] = field(default_factory=list)

    def __post_init__(self):
        if self.lower.certified and self.upper.certified and self.lower.value > self.upper.value:
            raise AssertionError(
                f"incoherent bounds: lower {self.lower.value} > upper {self.upper.value}")
        if self.exact and self.exact_reason != "formal" and not (
                self.lower.certified and self.upper.certified):
            raise AssertionError("exactness needs both bounds certified or a formality assertion")

    @property
    def value(self) -> Optional[int]:
        return self.upper.value if self.exact else None

    def to_dict(self) -> dict:
        return {
            "invariant": self.invariant,
            "model": self.model,
            "cutoff": self.cutoff,
            "lower": self.lower.to_dict(),
            "upper": self.upper.to_dict(),
            "formal": self.formal,
            "exact": self.exact,
            "exact_reason": self.exact_reason,
            "module": self.module,
            "notes": list(self.notes),
        }

    def lines(self) -> List[str]:
        out = [
            f"model: {self.model}",
            f"cutoff: {self.cutoff}",
            f"lower  zcl(H) {self.lower.text()}  [{self.lower.provenance}]",
            f"upper  nil(ker mu) {self.upper.text()}  [{self.upper.provenance}]",
        ]
        if self.exact:
            out.append(f"TC_0 = TC_0^M = {self.upper.value} (exact: {self.exact_reason})")
        else:
            hi = str(self.upper.value) if self.upper.certified else "?"
            lo = str(self.lower.value) if self.lower.certified else f">= {self.lower.value} (uncertified)"
            out.append(f"{lo} <= TC_0 <= TC_0^M <= {hi} (not exact)")
        if self.module is not None:
            t = self.module["text"]
            out.append(f"module level: msecat(mu) {t if t.startswith('>') else '= ' + t}")
        out.extend(f"note: {n}" for n in self.notes)
        return out


LOWER_PROVENANCE = "zero-divisor cup-length of H(A): cohomology level"
UPPER_PROVENANCE = "nil of ker(mu_A): model level"


def tc_report(A: Algebra, formal: bool = False, n_max: Optional[int] = None, cutoff: int = 16,
              name: str = "", msecat_result=None):
    """Lower bound zcl(H(A)), upper bound nil(ker μ_A), and exactness.

    Exactness is claimed when both bounds are certified and equal, or when
    the user asserts formality and A has zero differential.  Returns the
    report and the two nil computations (for certificates).
    """
    if A.complete:
        H = cohomology(A, A.top_degree)
    else:
        H = cohomology(A)
    low = zcl_of_cohomology(H)
    up = zcl(A)
    lower = Bound(low.value, low.certified, LOWER_PROVENANCE)
    upper = Bound(up.value, up.certified, UPPER_PROVENANCE)
    notes = []
    exact, reason = False, None
    dzero = A.d_is_zero()
    if formal and dzero and upper.certified:
        exact, reason = True, "formal"
    elif lower.certified and upper.certified and lower.value == upper.value:
        exact, reason = True, "lower = upper"
    if formal and not dzero:
        notes.append("formality asserted but d != 0; exactness is only read off a d = 0 model")
    if not upper.certified:
        notes.append(f"A⊗A is truncated at degree {up.result.upto}; raise --cutoff to certify")
    module = None
    if msecat_result is not None:
        module = {"text": msecat_result.text(), "value": msecat_result.value,
                  "label": "module-level invariant"}
    rep = BoundReport("TC_0", name or A.label or "?", cutoff, lower, upper, formal, exact, reason,
                      module, notes)
    return rep, low, up
