"""Commutative differential graded algebras over Q.

Two concrete representations share one interface:

* ``TableAlgebra`` -- finite dimensional, given by structure constants and a
  differential on a graded basis.  Keys are integer positions in the basis.
* ``FreeCDGA`` -- ``(base ⊗ ΛV, D)``: free graded-commutative on generators V
  over a finite table algebra ``base`` (the point algebra by default).  Keys
  are ``(base_key, monomial)``.  With a non-trivial base this is a relative
  Sullivan algebra.  Unless every generator is odd it is infinite and gets
  materialized only up to ``cutoff``.

Elements are sparse dicts from keys to rationals (``int`` when integral,
else ``Fraction``).  Signs follow the Koszul rule
(a⊗b)(c⊗d) = (-1)^{|b||c|} ac⊗bd and d(a⊗b) = da⊗b + (-1)^{|a|} a⊗db.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .linalg import viadd

Elem = Dict[object, Fraction]


class DegreeOverflow(ValueError):
    """A result would land above the materialized degree of a truncated algebra."""

    def __init__(self, degree: int, cutoff: int):
        super().__init__(f"degree {degree} exceeds cutoff {cutoff}")
        self.degree = degree
        self.cutoff = cutoff


class ParseError(ValueError):
    pass


def _sign(p: int) -> int:
    return -1 if p & 1 else 1


def _q(c):
    """Normalize a coefficient: integral values become ``int`` (cheaper arithmetic)."""
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


class GradedBasis:
    """Named basis elements with degrees, stably sorted by degree."""

    def __init__(self, items: Iterable[Tuple[str, int]]):
        items = list(items)
        seen = set()
        for name, deg in items:
            if name in seen:
                raise ParseError(f"duplicate basis element {name!r}")
            if not isinstance(deg, int) or deg < 0:
                raise ParseError(f"basis element {name!r} has invalid degree {deg!r}")
            seen.add(name)
        order = sorted(range(len(items)), key=lambda i: items[i][1])
        self.names: Tuple[str, ...] = tuple(items[i][0] for i in order)
        self.degrees: Tuple[int, ...] = tuple(items[i][1] for i in order)
        self._pos = {n: i for i, n in enumerate(self.names)}

    def __len__(self):
        return len(self.names)

    def __eq__(self, other):
        return (isinstance(other, GradedBasis) and self.names == other.names
                and self.degrees == other.degrees)

    def __hash__(self):
        return hash((self.names, self.degrees))

    def index(self, name: str) -> int:
        try:
            return self._pos[name]
        except KeyError:
            raise ParseError(f"unknown basis element {name!r}") from None


class Algebra:
    """Interface shared by all algebra representations."""

    factors = 1
    #: None means no truncation: the whole algebra is materialized
    cutoff: Optional[int] = None

    # -- to be provided by subclasses
    def basis(self, n: int) -> tuple:
        raise NotImplementedError

    def degree(self, key) -> int:
        raise NotImplementedError

    def name(self, key) -> str:
        raise NotImplementedError

    def mul_basis(self, k1, k2) -> Elem:
        raise NotImplementedError

    def d_basis(self, key) -> Elem:
        raise NotImplementedError

    @property
    def unit_key(self):
        raise NotImplementedError

    @property
    def top_degree(self) -> Optional[int]:
        """Largest degree with a nonzero basis element, or None if infinite."""
        raise NotImplementedError

    # -- generic machinery
    @property
    def complete(self) -> bool:
        return self.top_degree is not None

    @property
    def max_degree(self) -> int:
        top = self.top_degree
        return top if top is not None else self.cutoff

    def check_degree(self, n: int) -> None:
        if self.top_degree is None and n > self.cutoff:
            raise DegreeOverflow(n, self.cutoff)

    def index(self, n: int) -> Dict[object, int]:
        cache = self.__dict__.setdefault("_index_cache", {})
        if n not in cache:
            cache[n] = {k: i for i, k in enumerate(self.basis(n))}
        return cache[n]

    def dim(self, n: int) -> int:
        return len(self.basis(n))

    def dims(self, upto: Optional[int] = None) -> List[int]:
        upto = self.max_degree if upto is None else upto
        return [self.dim(n) for n in range(upto + 1)]

    def all_keys(self, upto: Optional[int] = None) -> list:
        upto = self.max_degree if upto is None else upto
        out = []
        for n in range(upto + 1):
            out.extend(self.basis(n))
        return out

    def unit(self) -> Elem:
        return {self.unit_key: 1}

    def lookup(self, name: str):
        """Key of a named basis element or generator."""
        raise NotImplementedError

    def elem_degree(self, a: Elem) -> Optional[int]:
        """Degree of a homogeneous nonzero element; None for zero."""
        degs = {self.degree(k) for k in a}
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError(f"inhomogeneous element in degrees {sorted(degs)}")
        return degs.pop()

    def mul(self, a: Elem, b: Elem) -> Elem:
        out: Elem = {}
        for ka, ca in a.items():
            for kb, cb in b.items():
                prod = self.mul_basis(ka, kb)
                if prod:
                    viadd(out, prod, ca * cb)
        return out

    def d(self, a: Elem) -> Elem:
        out: Elem = {}
        for k, c in a.items():
            dk = self.d_basis(k)
            if dk:
                viadd(out, dk, c)
        return out

    def power(self, a: Elem, n: int) -> Elem:
        out = self.unit()
        for _ in range(n):
            out = self.mul(out, a)
        return out

    def to_vec(self, a: Elem) -> Dict[int, Fraction]:
        out = {}
        for k, c in a.items():
            if c:
                out[self.index(self.degree(k))[k]] = Fraction(c)
        return out

    def from_vec(self, v: Dict[int, Fraction], n: int) -> Elem:
        basis = self.basis(n)
        return {basis[i]: c for i, c in v.items() if c}

    def d_is_zero(self) -> bool:
        for n in range(self.max_degree + 1):
            if n + 1 > self.max_degree:
                break
            for k in self.basis(n):
                if self.d_basis(k):
                    return False
        return True

    def fmt(self, a: Elem) -> str:
        if not a:
            return "0"
        keys = sorted(a, key=lambda k: (self.degree(k), self.index(self.degree(k))[k]))
        parts = []
        for k in keys:
            c = a[k]
            nm = self.name(k)
            mag = abs(c)
            body = nm if mag == 1 else (f"{mag}*{nm}" if nm != "1" else f"{mag}")
            parts.append(("- " if c < 0 else "+ ") + body)
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]


# ---------------------------------------------------------------------------
# finite table algebras


class TableAlgebra(Algebra):
    """Finite-dimensional CDGA from structure constants.

    ``product`` maps index pairs to sparse result dicts and ``differential``
    maps an index to its sparse image.  Products with the unit are implicit;
    a pair given in only one order is completed by graded commutativity.
    """

    def __init__(self, basis: GradedBasis, product: Dict[Tuple[int, int], dict] = None,
                 differential: Dict[int, dict] = None, unit: int = 0, name: str = "",
                 factors: int = 1):
        self.graded = basis
        self.label = name
        self.factors = factors
        self._unit = unit
        n = len(basis)
        if n == 0:
            raise ParseError("empty basis")
        if basis.degrees[unit] != 0:
            raise ParseError("unit must have degree 0")
        prod: Dict[Tuple[int, int], Elem] = {}
        for (i, j), v in (product or {}).items():
            prod[(i, j)] = {k: _q(c) for k, c in v.items() if c}
        for (i, j), v in list(prod.items()):
            if (j, i) not in prod:
                s = _sign(basis.degrees[i] * basis.degrees[j])
                prod[(j, i)] = {k: s * c for k, c in v.items()}
        for i in range(n):
            prod.setdefault((unit, i), {i: 1})
            prod.setdefault((i, unit), {i: 1})
        self._prod = prod
        self._diff = {i: {k: _q(c) for k, c in v.items() if c}
                      for i, v in (differential or {}).items()}
        by_deg: Dict[int, list] = {}
        for i, deg in enumerate(basis.degrees):
            by_deg.setdefault(deg, []).append(i)
        self._by_deg = {d: tuple(v) for d, v in by_deg.items()}
        self._top = max(basis.degrees)

    @classmethod
    def from_names(cls, items: Sequence[Tuple[str, int]], products=None, differential=None,
                   unit: str = "1", name: str = "") -> "TableAlgebra":
        gb = GradedBasis(items)
        ix = gb.index
        prod = {(ix(a), ix(b)): {ix(k): c for k, c in v.items()}
                for (a, b), v in (products or {}).items()}
        diff = {ix(a): {ix(k): c for k, c in v.items()} for a, v in (differential or {}).items()}
        return cls(gb, prod, diff, unit=ix(unit), name=name)

    def __repr__(self):
        return f"TableAlgebra({self.label or '?'}, dims={self.dims()})"

    def __len__(self):
        return len(self.graded)

    @property
    def unit_key(self):
        return self._unit

    @property
    def top_degree(self):
        return self._top

    def basis(self, n):
        return self._by_deg.get(n, ())

    def degree(self, key):
        return self.graded.degrees[key]

    def name(self, key):
        return self.graded.names[key]

    def lookup(self, name):
        return self.graded.index(name)

    def mul_basis(self, k1, k2):
        return self._prod.get((k1, k2), {})

    def d_basis(self, key):
        return self._diff.get(key, {})

    def table_entries(self):
        """Stored structure constants, including implicit completions."""
        return self._prod

    def differential_entries(self):
        return self._diff


def point_algebra(name: str = "point") -> TableAlgebra:
    return TableAlgebra(GradedBasis([("1", 0)]), name=name)


# ---------------------------------------------------------------------------
# free graded-commutative algebras over a table base


class FreeCDGA(Algebra):
    """``(base ⊗ Λ(generators), D)``, materialized up to ``cutoff``.

    A monomial is a sorted tuple of ``(generator_index, exponent)`` pairs, so
    keys stay valid when generators are appended (see :meth:`extend`).
    ``differential`` maps generator names to elements of this algebra; use
    :meth:`with_differential` when the images are easiest to build with the
    algebra's own multiplication.
    """

    def __init__(self, generators: Sequence[Tuple[str, int]], differential: Dict[str, Elem] = None,
                 cutoff: Optional[int] = None, base: Optional[TableAlgebra] = None,
                 name: str = "", factors: int = 1):
        self.base = base if base is not None else point_algebra()
        self.gens: Tuple[Tuple[str, int], ...] = tuple((str(g), int(d)) for g, d in generators)
        self.label = name
        self.factors = factors
        names = [g for g, _ in self.gens]
        if len(set(names)) != len(names):
            raise ParseError("duplicate generator names")
        for g, deg in self.gens:
            if deg < 1:
                raise ParseError(f"generator {g!r} must have positive degree, got {deg}")
        self._gdeg = tuple(d for _, d in self.gens)
        self._odd = tuple(d & 1 for d in self._gdeg)
        self._gpos = {g: i for i, g in enumerate(names)}
        self._zero = ()
        #: top degree of the full (untruncated) algebra, None if infinite
        self.finite_top = self.base.top_degree + sum(self._gdeg) if all(self._odd) else None
        if self.finite_top is None and cutoff is None:
            raise ParseError("a free algebra with even generators needs a cutoff")
        if self.finite_top is not None and (cutoff is None or self.finite_top <= cutoff):
            self._top = self.finite_top
        else:
            self._top = None
        self.cutoff = cutoff
        self._dgen: List[Elem] = []
        for g, _ in self.gens:
            v = (differential or {}).get(g, {})
            self._dgen.append({k: _q(c) for k, c in v.items() if c})
        self._mono_cache: Dict[Tuple[int, int], list] = {}
        self._basis_cache: Dict[int, tuple] = {}
        self._deg_cache: Dict[tuple, int] = {}
        self._mul_cache: Dict[tuple, Elem] = {}
        self._d_cache: Dict[object, Elem] = {}
        self._dmono_cache: Dict[tuple, Elem] = {}

    def with_differential(self, differential: Dict[str, Elem]) -> "FreeCDGA":
        return FreeCDGA(self.gens, differential, self.cutoff, self.base, self.label, self.factors)

    def with_cutoff(self, cutoff: int) -> "FreeCDGA":
        return FreeCDGA(self.gens, self.generator_differentials(), cutoff, self.base,
                        self.label, self.factors)

    def extend(self, generators: Sequence[Tuple[str, int]], differential: Dict[str, Elem]) -> "FreeCDGA":
        """Adjoin generators; existing keys and cached products carry over."""
        diffs = self.generator_differentials()
        diffs.update(differential)
        out = FreeCDGA(self.gens + tuple(generators), diffs, self.cutoff, self.base,
                       self.label, self.factors)
        # products and differentials of old keys do not involve the new generators
        out._deg_cache = self._deg_cache
        out._mul_cache = self._mul_cache
        out._d_cache = self._d_cache
        out._dmono_cache = self._dmono_cache
        return out

    def __repr__(self):
        return f"FreeCDGA({self.label or '?'}, gens={list(self.gens)}, cutoff={self.cutoff})"

    @property
    def unit_key(self):
        return (self.base.unit_key, ())

    @property
    def top_degree(self):
        return self._top

    @property
    def generator_names(self) -> List[str]:
        return [g for g, _ in self.gens]

    def generator_differentials(self) -> Dict[str, Elem]:
        return {g: dict(v) for (g, _), v in zip(self.gens, self._dgen)}

    def gen_key(self, name: str):
        return (self.base.unit_key, ((self._gpos[name], 1),))

    def gen(self, name: str) -> Elem:
        return {self.gen_key(name): 1}

    def base_elem(self, b: Elem) -> Elem:
        """Embed an element of the base table algebra."""
        return {(k, ()): c for k, c in b.items()}

    def lookup(self, name):
        if name in self._gpos:
            return self.gen_key(name)
        return (self.base.lookup(name), ())

    def mono_degree(self, e) -> int:
        gd = self._gdeg
        return sum(x * gd[i] for i, x in e)

    def degree(self, key):
        hit = self._deg_cache.get(key)
        if hit is None:
            b, e = key
            hit = self._deg_cache[key] = self.base.degree(b) + self.mono_degree(e)
        return hit

    def name(self, key):
        b, e = key
        parts = []
        if b != self.base.unit_key or not e:
            parts.append(self.base.name(b))
        for i, x in e:
            g = self.gens[i][0]
            parts.append(g if x == 1 else f"{g}^{x}")
        return "*".join(parts)

    def _monos(self, i: int, deg: int) -> list:
        """Monomials in generators i.. of total degree deg."""
        key = (i, deg)
        if key in self._mono_cache:
            return self._mono_cache[key]
        if i == len(self.gens):
            out = [()] if deg == 0 else []
        else:
            d = self._gdeg[i]
            maxe = 1 if self._odd[i] else deg // d
            out = []
            for x in range(min(maxe, deg // d) + 1):
                head = ((i, x),) if x else ()
                for rest in self._monos(i + 1, deg - x * d):
                    out.append(head + rest)
        self._mono_cache[key] = out
        return out

    def monomials(self, deg: int) -> list:
        return sorted(self._monos(0, deg), key=_mono_order)

    def basis(self, n):
        if n < 0:
            return ()
        if self._top is not None and n > self._top:
            return ()
        self.check_degree(n)
        if n not in self._basis_cache:
            keys = []
            for j in range(min(n, self.base.top_degree) + 1):
                monos = self.monomials(n - j)
                if not monos:
                    continue
                for b in self.base.basis(j):
                    keys.extend((b, e) for e in monos)
            self._basis_cache[n] = tuple(sorted(keys, key=lambda k: (k[0], _mono_order(k[1]))))
        return self._basis_cache[n]

    def _mono_mul(self, m1, m2):
        if not m1:
            return 1, m2
        if not m2:
            return 1, m1
        odd = self._odd
        merged = dict(m1)
        odd1 = [i for i, _ in m1 if odd[i]]
        sign = 0
        for j, x in m2:
            if odd[j]:
                if j in merged:
                    return 0, None
                # w_j moves left past the odd generators of m1 with larger index
                sign += sum(1 for i in odd1 if i > j)
            merged[j] = merged.get(j, 0) + x
        return _sign(sign), tuple(sorted(merged.items()))

    def mul_basis(self, k1, k2):
        ck = (k1, k2)
        hit = self._mul_cache.get(ck)
        if hit is not None:
            return hit
        (b1, e1), (b2, e2) = k1, k2
        deg = self.degree(k1) + self.degree(k2)
        if self._top is None and deg > self.cutoff:
            raise DegreeOverflow(deg, self.cutoff)
        s, e = self._mono_mul(e1, e2)
        out: Elem = {}
        if s:
            if e1 and self.mono_degree(e1) & 1 and self.base.degree(b2) & 1:
                s = -s
            for b, c in self.base.mul_basis(b1, b2).items():
                out[(b, e)] = s * c
        self._mul_cache[ck] = out
        return out

    def _d_mono(self, e) -> Elem:
        hit = self._dmono_cache.get(e)
        if hit is not None:
            return hit
        if not e:
            return {}
        i, x = e[0]
        rest = ((i, x - 1),) + e[1:] if x > 1 else e[1:]
        u = self.base.unit_key
        out = self.mul(self._dgen[i], {(u, rest): 1})
        if rest:
            tail = self._d_mono(rest)
            if tail:
                viadd(out, self.mul({(u, ((i, 1),)): 1}, tail), _sign(self._gdeg[i]))
        self._dmono_cache[e] = out
        return out

    def d_basis(self, key):
        hit = self._d_cache.get(key)
        if hit is not None:
            return hit
        b, e = key
        deg = self.degree(key) + 1
        if self._top is None and deg > self.cutoff:
            raise DegreeOverflow(deg, self.cutoff)
        out: Elem = {}
        for b2, c in self.base.d_basis(b).items():
            out[(b2, e)] = c
        if e:
            dm = self._d_mono(e)
            if dm:
                viadd(out, self.mul({(b, ()): 1}, dm), _sign(self.base.degree(b)))
        self._d_cache[key] = out
        return out

    def to_table(self, upto: Optional[int] = None) -> TableAlgebra:
        """Finite table version: the whole algebra if complete, else the
        quotient by everything above degree ``upto``."""
        if upto is None:
            if self._top is None:
                raise ValueError("infinite algebra: pass a truncation degree")
            upto = self._top
        keys = self.all_keys(upto)
        pos = {k: i for i, k in enumerate(keys)}
        items = [(self.name(k), self.degree(k)) for k in keys]
        prod = {}
        for k1 in keys:
            for k2 in keys:
                if self.degree(k1) + self.degree(k2) > upto:
                    continue
                v = self.mul_basis(k1, k2)
                if v:
                    prod[(pos[k1], pos[k2])] = {pos[k]: c for k, c in v.items()}
        diff = {}
        for k in keys:
            if self.degree(k) + 1 > upto:
                continue
            v = self.d_basis(k)
            if v:
                diff[pos[k]] = {pos[x]: c for x, c in v.items()}
        return TableAlgebra(GradedBasis(items), prod, diff, unit=pos[self.unit_key],
                            name=self.label, factors=self.factors)


_LAST = 1 << 62


def _mono_order(m) -> tuple:
    """Sort key matching descending lexicographic order of dense exponent vectors."""
    return tuple((i, -x) for i, x in m) + ((_LAST, 0),)


# ---------------------------------------------------------------------------
# tensor products


def _table_tensor(A: TableAlgebra, B: TableAlgebra) -> Tuple[TableAlgebra, Dict[Tuple[int, int], int]]:
    pairs = [(i, j) for i in range(len(A)) for j in range(len(B))]
    items = [(f"{A.name(i)}@{B.name(j)}", A.degree(i) + B.degree(j)) for i, j in pairs]
    gb = GradedBasis(items)
    pos = {p: gb.index(nm) for p, (nm, _) in zip(pairs, items)}
    prod = {}
    for (a, b) in pairs:
        for (c, d) in pairs:
            s = _sign(B.degree(b) * A.degree(c))
            ac = A.mul_basis(a, c)
            if not ac:
                continue
            bd = B.mul_basis(b, d)
            if not bd:
                continue
            out = {}
            for x, cx in ac.items():
                for y, cy in bd.items():
                    out[pos[(x, y)]] = s * cx * cy
            prod[(pos[(a, b)], pos[(c, d)])] = out
    diff = {}
    for (a, b) in pairs:
        out = {}
        for x, c in A.d_basis(a).items():
            viadd(out, {pos[(x, b)]: c})
        s = _sign(A.degree(a))
        for y, c in B.d_basis(b).items():
            viadd(out, {pos[(a, y)]: s * c})
        if out:
            diff[pos[(a, b)]] = out
    T = TableAlgebra(gb, prod, diff, unit=pos[(A.unit_key, B.unit_key)],
                     name=f"{A.label}⊗{B.label}" if A.label and B.label else "",
                     factors=A.factors + B.factors)
    T.pair_index = pos
    return T, pos


def as_free(A: Algebra) -> FreeCDGA:
    if isinstance(A, FreeCDGA):
        return A
    return FreeCDGA([], {}, None, base=A, name=A.label, factors=A.factors)


def tensor(A: Algebra, B: Algebra) -> Algebra:
    """Koszul-signed tensor product, truncated at the smaller cutoff."""
    if isinstance(A, TableAlgebra) and isinstance(B, TableAlgebra):
        return _table_tensor(A, B)[0]
    FA, FB = as_free(A), as_free(B)
    base, pos = _table_tensor(FA.base, FB.base)
    gens = [(f"{g}" + "@1" * FB.factors, d) for g, d in FA.gens]
    gens += [("1@" * FA.factors + f"{g}", d) for g, d in FB.gens]
    cuts = [X.cutoff for X in (FA, FB) if X.cutoff is not None]
    cutoff = min(cuts) if cuts else None
    T = FreeCDGA(gens, {}, cutoff, base=base, factors=FA.factors + FB.factors,
                 name=f"{A.label}⊗{B.label}" if A.label and B.label else "")
    inc = TensorInclusions(FA, FB, T, pos)
    diff = {}
    for (g, _), (g2, _) in zip(FA.gens, gens):
        diff[g2] = inc.left(FA.d_basis(FA.gen_key(g)))
    for (g, _), (g2, _) in zip(FB.gens, gens[len(FA.gens):]):
        diff[g2] = inc.right(FB.d_basis(FB.gen_key(g)))
    return T.with_differential(diff)


class TensorInclusions:
    """Maps A → A⊗B and B → A⊗B, and a⊗b ↦ element, for free tensors."""

    def __init__(self, FA: FreeCDGA, FB: FreeCDGA, T: FreeCDGA, pos):
        self.FA, self.FB, self.T, self.pos = FA, FB, T, pos
        self.za = ()
        self.zb = ()
        self.shift = len(FA.gens)

    def pair(self, ka, kb) -> Elem:
        (ba, ea), (bb, eb) = ka, kb
        s = _sign(self.FA.mono_degree(ea) * self.FB.base.degree(bb))
        return {(self.pos[(ba, bb)], ea + tuple((i + self.shift, x) for i, x in eb)): s}

    def left(self, a: Elem) -> Elem:
        ub = (self.FB.base.unit_key, self.zb)
        out = {}
        for k, c in a.items():
            for k2, s in self.pair(k, ub).items():
                out[k2] = out.get(k2, 0) + s * c
        return {k: c for k, c in out.items() if c}

    def right(self, b: Elem) -> Elem:
        ua = (self.FA.base.unit_key, self.za)
        out = {}
        for k, c in b.items():
            for k2, s in self.pair(ua, k).items():
                out[k2] = out.get(k2, 0) + s * c
        return {k: c for k, c in out.items() if c}


def tensor_power(A: Algebra, m: int) -> Algebra:
    if m < 1:
        raise ValueError("tensor power needs m >= 1")
    out = A
    for _ in range(m - 1):
        out = tensor(out, A)
    return out


def tensor_elem(A: Algebra, B: Algebra, T: Algebra, a: Elem, b: Elem) -> Elem:
    """The element a⊗b of T = tensor(A, B)."""
    if isinstance(T, TableAlgebra):
        pos = T.pair_index
        out: Elem = {}
        for x, cx in a.items():
            for y, cy in b.items():
                k = pos[(x, y)]
                out[k] = out.get(k, 0) + cx * cy
        return {k: c for k, c in out.items() if c}
    FA, FB = as_free(A), as_free(B)
    inc = TensorInclusions(FA, FB, T, T.base.pair_index)
    a = a if isinstance(A, FreeCDGA) else {(k, ()): c for k, c in a.items()}
    b = b if isinstance(B, FreeCDGA) else {(k, ()): c for k, c in b.items()}
    return T.mul(inc.left(a), inc.right(b))
