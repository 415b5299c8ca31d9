"""Degree-preserving algebra maps between CDGAs."""

from __future__ import annotations

from typing import Dict, Optional

from .algebra import (Algebra, Elem, FreeCDGA, TableAlgebra, as_free, tensor, tensor_elem,
                      tensor_power)
from .linalg import rank, viadd


class AlgebraMorphism:
    """An algebra map given on generators.

    For a table source every basis element needs an image (missing ones map
    to zero, except the unit).  For a free source the images of the base
    basis elements and of the free generators determine everything.
    """

    def __init__(self, source: Algebra, target: Algebra, images: Dict = None,
                 gen_images: Dict[str, Elem] = None, name: str = "",
                 section: Optional["AlgebraMorphism"] = None):
        self.source = source
        self.target = target
        self.name = name
        self.section = section
        base = source.base if isinstance(source, FreeCDGA) else source
        self.images: Dict[object, Elem] = {}
        for k, v in (images or {}).items():
            self.images[k] = {x: c for x, c in v.items() if c}
        self.images.setdefault(base.unit_key, target.unit())
        self.gen_images: Dict[str, Elem] = {}
        if isinstance(source, FreeCDGA):
            for g in source.generator_names:
                v = (gen_images or {}).get(g, {})
                self.gen_images[g] = {x: c for x, c in v.items() if c}
        elif gen_images:
            raise ValueError("generator images given for a table source")
        self._cache: Dict[object, Elem] = {}

    def __repr__(self):
        return f"AlgebraMorphism({self.name or '?'}: {self.source!r} -> {self.target!r})"

    def apply_basis(self, key) -> Elem:
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        S, T = self.source, self.target
        if isinstance(S, FreeCDGA):
            b, e = key
            out = self.images.get(b, {})
            for i, x in e:
                gi = self.gen_images[S.gens[i][0]]
                for _ in range(x):
                    out = T.mul(out, gi)
                    if not out:
                        break
        else:
            out = self.images.get(key, {})
        self._cache[key] = out
        return out

    def __call__(self, a: Elem) -> Elem:
        out: Elem = {}
        for k, c in a.items():
            v = self.apply_basis(k)
            if v:
                viadd(out, v, c)
        return out

    def matrix_rank(self, n: int) -> int:
        T = self.target
        return rank(T.to_vec(self.apply_basis(k)) for k in self.source.basis(n))

    def is_surjective(self, upto: Optional[int] = None) -> bool:
        upto = common_degree(self.source, self.target) if upto is None else upto
        return all(self.matrix_rank(n) == self.target.dim(n) for n in range(upto + 1))


def common_degree(A: Algebra, B: Algebra) -> int:
    """Highest source degree whose images are all materialized in the target."""
    if B.complete:
        return A.max_degree
    return min(A.max_degree, B.max_degree)


def identity(A: Algebra, name: str = "id") -> AlgebraMorphism:
    if isinstance(A, FreeCDGA):
        imgs = {b: A.base_elem({b: 1}) for b in A.base.all_keys()}
        return AlgebraMorphism(A, A, imgs, {g: A.gen(g) for g in A.generator_names}, name=name)
    return AlgebraMorphism(A, A, {k: {k: 1} for k in A.all_keys()}, name=name)


def compose(psi: AlgebraMorphism, phi: AlgebraMorphism, name: str = "") -> AlgebraMorphism:
    """psi ∘ phi."""
    S = phi.source
    if isinstance(S, FreeCDGA):
        imgs = {b: psi(v) for b, v in phi.images.items()}
        gimgs = {g: psi(v) for g, v in phi.gen_images.items()}
        return AlgebraMorphism(S, psi.target, imgs, gimgs, name=name)
    imgs = {k: psi(phi.apply_basis(k)) for k in S.all_keys()}
    return AlgebraMorphism(S, psi.target, imgs, name=name)


def tensor_morphism(f: AlgebraMorphism, g: AlgebraMorphism, source: Algebra = None,
                    target: Algebra = None) -> AlgebraMorphism:
    """f⊗g : A⊗B → A'⊗B'."""
    A, B, A2, B2 = f.source, g.source, f.target, g.target
    S = source if source is not None else tensor(A, B)
    T = target if target is not None else tensor(A2, B2)
    one_a, one_b = A2.unit(), B2.unit()
    if isinstance(S, TableAlgebra):
        imgs = {}
        for (a, b), k in S.pair_index.items():
            imgs[k] = tensor_elem(A2, B2, T, f.apply_basis(a), g.apply_basis(b))
        return AlgebraMorphism(S, T, imgs)
    FA, FB = as_free(A), as_free(B)
    fa = _base_map(f, FA)
    gb = _base_map(g, FB)
    imgs = {}
    for (a, b), k in S.base.pair_index.items():
        imgs[k] = tensor_elem(A2, B2, T, fa(a), gb(b))
    gimgs = {}
    na = len(FA.gens)
    for (gname, _), (sname, _) in zip(FA.gens, S.gens[:na]):
        gimgs[sname] = tensor_elem(A2, B2, T, f.gen_images[gname], one_b)
    for (gname, _), (sname, _) in zip(FB.gens, S.gens[na:]):
        gimgs[sname] = tensor_elem(A2, B2, T, one_a, g.gen_images[gname])
    return AlgebraMorphism(S, T, imgs, gimgs)


def _base_map(f: AlgebraMorphism, F: FreeCDGA):
    if isinstance(f.source, FreeCDGA):
        return lambda b: f.images.get(b, {})
    return lambda b: f.apply_basis(b)


def multiplication2(A: Algebra, source: Algebra = None) -> AlgebraMorphism:
    """μ: A⊗A → A, a⊗b ↦ ab."""
    S = source if source is not None else tensor(A, A)
    if isinstance(S, TableAlgebra):
        imgs = {k: A.mul({a: 1}, {b: 1}) for (a, b), k in S.pair_index.items()}
        return AlgebraMorphism(S, A, imgs, name="mu")
    F = as_free(A)
    imgs = {}
    for (a, b), k in S.base.pair_index.items():
        prod = F.base.mul_basis(a, b)
        imgs[k] = F.base_elem(prod) if isinstance(A, FreeCDGA) else dict(prod)
    gimgs = {}
    n = len(F.gens)
    for (g, _), (sname, _) in zip(F.gens, S.gens[:n]):
        gimgs[sname] = A.gen(g)
    for (g, _), (sname, _) in zip(F.gens, S.gens[n:]):
        gimgs[sname] = A.gen(g)
    return AlgebraMorphism(S, A, imgs, gimgs, name="mu")


def multiplication_morphism(A: Algebra, m: int) -> AlgebraMorphism:
    """The m-fold multiplication μ_m: A^{⊗m} → A (m ≥ 1; m = 1 is the identity)."""
    if m < 1:
        raise ValueError("m must be at least 1")
    if m == 1:
        return identity(A, name="mu_1")
    mu = multiplication2(A)
    if m == 2:
        mu.name = "mu_2"
        return mu
    prev = multiplication_morphism(A, m - 1)
    S = tensor(prev.source, A)
    mid = tensor_morphism(prev, identity(A), source=S, target=mu.source)
    out = compose(mu, mid, name=f"mu_{m}")
    return out


def section_of_left_unit(A: Algebra, AA: Algebra) -> AlgebraMorphism:
    """s: A → A⊗A, a ↦ a⊗1, a section of μ."""
    one = A.unit()
    if isinstance(A, FreeCDGA):
        imgs = {b: tensor_elem(A, A, AA, A.base_elem({b: 1}), one) for b in A.base.all_keys()}
        gimgs = {g: tensor_elem(A, A, AA, A.gen(g), one) for g in A.generator_names}
        return AlgebraMorphism(A, AA, imgs, gimgs, name="s")
    imgs = {k: tensor_elem(A, A, AA, {k: 1}, one) for k in A.all_keys()}
    return AlgebraMorphism(A, AA, imgs, name="s")


__all__ = [
    "AlgebraMorphism", "identity", "compose", "tensor_morphism", "multiplication2",
    "multiplication_morphism", "section_of_left_unit", "common_degree", "tensor_power",
]
