"""Plain-text model documents.

A document is a sequence of declarations, one per line (``#`` starts a
comment)::

    algebra cp2 table
      basis 1:0 x:2 x2:4
      product x x = x2
    end

    algebra s2m free
      gen x 2
      gen y 3
      d y = x^2
      cutoff 16
    end

    tensor A = cp2 cp2
    morphism mu : A -> cp2 multiplication
    morphism s : cp2 -> A left-unit
    morphism phi : cp2 -> cp1
      x = x
    end
    section mu s
    meta formal true

Elements are sums of terms ``[coef*]factor*factor...`` with rational
coefficients (``3/2``) and factors ``name`` or ``name^k``; products are
evaluated in the algebra.  Unlisted products, differentials and images are
zero (the unit always maps to the unit).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .algebra import (Algebra, DegreeOverflow, FreeCDGA, GradedBasis, ParseError, TableAlgebra,
                      tensor)
from .morphism import AlgebraMorphism, multiplication2, section_of_left_unit

DEFAULT_CUTOFF = 16
META_KEYS = ("name", "formal", "simply-connected", "model", "target")


class ModelError(ValueError):
    """A diagnostic with a 1-based line and column."""

    kind = "error"

    def __init__(self, line: int, col: int, message: str):
        super().__init__(f"line {line}, col {col}: {self.kind}: {message}")
        self.line = line
        self.col = col
        self.message = message


class ModelSyntaxError(ModelError):
    kind = "syntax error"


class ModelSemanticError(ModelError):
    kind = "semantic error"


# ---------------------------------------------------------------------------
# tokens and expressions

_TOKEN = re.compile(r"(?P<num>\d+(?:/\d+)?)(?![A-Za-z_@\[\]'.\d])|(?P<name>[A-Za-z0-9_@\[\]'.]+)"
                    r"|(?P<op>->|[-+*^=:])")


_NAME = re.compile(r"[A-Za-z0-9_@\[\]'.]+")


def _tokens(text: str, line: int, col0: int) -> List[Tuple[str, str, int]]:
    out, pos = [], 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise ModelSyntaxError(line, pos + col0 + 1, f"unexpected character {text[pos]!r}")
        out.append((m.lastgroup, m.group(), pos + col0 + 1))
        pos = m.end()
    return out


def parse_element(A: Algebra, text: str, line: int = 1, col0: int = 0) -> dict:
    """Evaluate a polynomial expression in A."""
    toks = _tokens(text, line, col0)
    if not toks:
        raise ModelSyntaxError(line, col0 + 1, "expected an expression")
    total: dict = {}
    i = 0
    first = True
    while i < len(toks):
        sign = 1
        if toks[i][0] == "op" and toks[i][1] in "+-":
            sign = -1 if toks[i][1] == "-" else 1
            i += 1
        elif not first:
            raise ModelSyntaxError(line, toks[i][2], f"expected '+' or '-', found {toks[i][1]!r}")
        first = False
        term = {A.unit_key: Fraction(sign)}
        expect_factor = True
        while True:
            if i >= len(toks):
                if expect_factor:
                    raise ModelSyntaxError(line, len(text) + col0 + 1, "expected a factor")
                break
            kind, val, c = toks[i]
            if expect_factor:
                if kind == "num":
                    term = {k: v * Fraction(val) for k, v in term.items()}
                elif kind == "name":
                    try:
                        key = A.lookup(val)
                    except (ParseError, KeyError):
                        raise ModelSemanticError(line, c, f"unknown name {val!r}") from None
                    power = 1
                    if i + 1 < len(toks) and toks[i + 1][1] == "^":
                        if i + 2 >= len(toks) or toks[i + 2][0] != "num" or "/" in toks[i + 2][1]:
                            raise ModelSyntaxError(line, toks[i + 1][2], "expected an integer exponent")
                        power = int(toks[i + 2][1])
                        i += 2
                    try:
                        for _ in range(power):
                            term = A.mul(term, {key: 1})
                    except DegreeOverflow as exc:
                        raise ModelSemanticError(line, c, str(exc)) from None
                else:
                    raise ModelSyntaxError(line, c, f"expected a name or number, found {val!r}")
                expect_factor = False
                i += 1
            else:
                if kind == "op" and val == "*":
                    expect_factor = True
                    i += 1
                else:
                    break
        for k, v in term.items():
            nv = total.get(k, 0) + v
            if nv:
                total[k] = nv
            else:
                total.pop(k, None)
    try:
        A.elem_degree(total)
    except ValueError:
        raise ModelSemanticError(line, col0 + 1, "inhomogeneous expression") from None
    return total


# ---------------------------------------------------------------------------
# document


@dataclass
class AlgebraEntry:
    name: str
    kind: str                    # table | free | tensor
    algebra: Algebra
    declared_cutoff: Optional[int] = None
    factors: Tuple[str, str] = ("", "")
    line: int = 0


@dataclass
class MorphismEntry:
    name: str
    source: str
    target: str
    kind: str                    # explicit | multiplication | left-unit
    morphism: AlgebraMorphism
    section: Optional[str] = None
    line: int = 0


@dataclass
class ModelDocument:
    algebras: Dict[str, AlgebraEntry] = field(default_factory=dict)
    morphisms: Dict[str, MorphismEntry] = field(default_factory=dict)
    meta: Dict[str, str] = field(default_factory=dict)
    order: List[Tuple[str, str]] = field(default_factory=list)

    @property
    def name(self) -> str:
        return self.meta.get("name", "")

    @property
    def formal(self) -> bool:
        return self.meta.get("formal") == "true"

    @property
    def simply_connected(self) -> bool:
        return self.meta.get("simply-connected") == "true"

    def model(self) -> AlgebraEntry:
        if "model" in self.meta:
            return self.algebras[self.meta["model"]]
        if not self.algebras:
            raise ModelSemanticError(1, 1, "document declares no algebra")
        return list(self.algebras.values())[-1]

    def target(self) -> MorphismEntry:
        if "target" in self.meta:
            return self.morphisms[self.meta["target"]]
        sections = {m.section for m in self.morphisms.values() if m.section}
        for m in self.morphisms.values():
            if m.name not in sections:
                return m
        raise ModelSemanticError(1, 1, "document declares no morphism")

    def canonical(self) -> tuple:
        """Hashable value used for equality (independent of input spelling)."""
        out = []
        for kind, name in self.order:
            if kind == "algebra":
                out.append(("algebra", name) + _algebra_spec(self.algebras[name]))
            elif kind == "morphism":
                out.append(("morphism", name) + _morphism_spec(self.morphisms[name]))
        out.append(("meta", tuple(sorted(self.meta.items()))))
        return tuple(out)

    def __eq__(self, other):
        return isinstance(other, ModelDocument) and self.canonical() == other.canonical()


def _table_spec(A: TableAlgebra) -> tuple:
    basis = tuple(zip(A.graded.names, A.graded.degrees))
    prods = []
    u = A.unit_key
    for i in range(len(A)):
        for j in range(i, len(A)):
            if u in (i, j):
                continue
            v = A.mul_basis(i, j)
            if v:
                prods.append((A.name(i), A.name(j), A.fmt(v)))
    diff = tuple((A.name(i), A.fmt(A.d_basis(i))) for i in range(len(A)) if A.d_basis(i))
    return basis, A.name(u), tuple(prods), diff


def _algebra_spec(e: AlgebraEntry) -> tuple:
    A = e.algebra
    if e.kind == "table":
        return ("table",) + _table_spec(A)
    if e.kind == "free":
        diffs = tuple((g, A.fmt(v)) for g, v in A.generator_differentials().items() if v)
        return ("free", A.gens, diffs, e.declared_cutoff)
    return ("tensor",) + tuple(e.factors)


def _images(phi: AlgebraMorphism) -> tuple:
    S, T = phi.source, phi.target
    out = []
    if isinstance(S, FreeCDGA):
        for b in S.base.all_keys():
            if b == S.base.unit_key:
                continue
            v = phi.images.get(b, {})
            if v:
                out.append((S.base.name(b), T.fmt(v)))
        for g in S.generator_names:
            v = phi.gen_images[g]
            if v:
                out.append((g, T.fmt(v)))
    else:
        for k in S.all_keys():
            if k == S.unit_key:
                continue
            v = phi.apply_basis(k)
            if v:
                out.append((S.name(k), T.fmt(v)))
    return tuple(out)


def _morphism_spec(m: MorphismEntry) -> tuple:
    imgs = _images(m.morphism) if m.kind == "explicit" else ()
    return (m.source, m.target, m.kind, imgs, m.section)


# ---------------------------------------------------------------------------
# parser


def _split(raw: str) -> str:
    return raw.split("#", 1)[0].rstrip()


def _indent(raw: str) -> int:
    return len(raw) - len(raw.lstrip())


class _Parser:
    def __init__(self, text: str, cutoff: Optional[int]):
        self.lines = text.splitlines()
        self.cutoff = cutoff
        self.doc = ModelDocument()
        self.i = 0

    def error(self, cls, col, msg, line=None):
        raise cls(line if line is not None else self.i + 1, col, msg)

    def words(self, lineno: int, raw: str) -> List[Tuple[str, int]]:
        out = []
        for m in re.finditer(r"\S+", raw):
            out.append((m.group(), m.start() + 1))
        return out

    def run(self) -> ModelDocument:
        while self.i < len(self.lines):
            raw = _split(self.lines[self.i])
            if not raw.strip():
                self.i += 1
                continue
            w = self.words(self.i + 1, raw)
            head = w[0][0]
            if head == "algebra":
                self.algebra_block(w)
            elif head == "tensor":
                self.tensor_line(w)
            elif head == "morphism":
                self.morphism_decl(w)
            elif head == "section":
                self.section_line(w)
            elif head == "meta":
                self.meta_line(w, raw)
            else:
                self.error(ModelSyntaxError, w[0][1],
                           f"expected 'algebra', 'tensor', 'morphism', 'section' or 'meta', found {head!r}")
        self.finish()
        return self.doc

    # -- helpers
    def new_name(self, name: str, col: int):
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_.\-]*", name):
            self.error(ModelSyntaxError, col, f"invalid name {name!r}")
        if name in self.doc.algebras or name in self.doc.morphisms:
            self.error(ModelSemanticError, col, f"{name!r} is already declared")

    def block(self) -> List[Tuple[int, str]]:
        """Lines up to the matching 'end' (exclusive); moves past 'end'."""
        start = self.i
        self.i += 1
        body = []
        while self.i < len(self.lines):
            raw = _split(self.lines[self.i])
            if raw.strip() == "end":
                self.i += 1
                return body
            if raw.strip():
                body.append((self.i + 1, raw))
            self.i += 1
        raise ModelSyntaxError(start + 1, 1, "block is missing its 'end'")

    def algebra_ref(self, name: str, col: int) -> AlgebraEntry:
        if name not in self.doc.algebras:
            self.error(ModelSemanticError, col, f"unknown algebra {name!r}")
        return self.doc.algebras[name]

    # -- algebra blocks
    def algebra_block(self, w):
        line = self.i + 1
        if len(w) != 3 or w[2][0] not in ("table", "free"):
            self.error(ModelSyntaxError, w[-1][1], "expected 'algebra NAME table' or 'algebra NAME free'")
        name, col = w[1]
        self.new_name(name, col)
        body = self.block()
        if w[2][0] == "table":
            entry = self.table(name, body, line)
        else:
            entry = self.free(name, body, line)
        self.doc.algebras[name] = entry
        self.doc.order.append(("algebra", name))

    def table(self, name, body, line) -> AlgebraEntry:
        items, unit = [], "1"
        prods, diffs = [], []
        for ln, raw in body:
            w = self.words(ln, raw)
            head = w[0][0]
            if head == "basis":
                for tok, c in w[1:]:
                    m = re.fullmatch(r"([^:\s]+):(-?\d+)", tok)
                    if not m:
                        raise ModelSyntaxError(ln, c, f"expected NAME:DEGREE, found {tok!r}")
                    if not _NAME.fullmatch(m.group(1)) or (m.group(1).isdigit() and m.group(1) != "1"):
                        raise ModelSyntaxError(ln, c, f"invalid basis name {m.group(1)!r}")
                    items.append((m.group(1), int(m.group(2)), ln, c))
            elif head == "unit":
                if len(w) != 2:
                    raise ModelSyntaxError(ln, w[0][1], "expected 'unit NAME'")
                unit = w[1][0]
            elif head == "product":
                if len(w) < 5 or w[3][0] != "=":
                    raise ModelSyntaxError(ln, w[0][1], "expected 'product X Y = EXPR'")
                prods.append((ln, w[1], w[2], raw, w[4][1] - 1))
            elif head == "d":
                if len(w) < 4 or w[2][0] != "=":
                    raise ModelSyntaxError(ln, w[0][1], "expected 'd X = EXPR'")
                diffs.append((ln, w[1], raw, w[3][1] - 1))
            else:
                raise ModelSyntaxError(ln, w[0][1], f"unexpected {head!r} in a table algebra")
        if not items:
            raise ModelSyntaxError(line, 1, f"algebra {name!r} has no basis")
        seen = set()
        for nm, deg, ln, c in items:
            if nm in seen:
                raise ModelSyntaxError(ln, c, f"duplicate basis element {nm!r}")
            if deg < 0:
                raise ModelSyntaxError(ln, c, f"negative degree for {nm!r}")
            seen.add(nm)
        gb = GradedBasis([(nm, deg) for nm, deg, _, _ in items])
        if unit not in seen:
            raise ModelSemanticError(line, 1, f"unit {unit!r} is not a basis element")
        if gb.degrees[gb.index(unit)] != 0:
            raise ModelSemanticError(line, 1, "the unit must have degree 0")
        # a bare table to evaluate linear combinations of basis names
        flat = TableAlgebra(gb, {}, {}, unit=gb.index(unit), name=name)
        product, diff = {}, {}
        for ln, (a, ca), (b, cb), raw, c0 in prods:
            i = self.basis_key(flat, a, ln, ca)
            j = self.basis_key(flat, b, ln, cb)
            v = parse_element(flat, raw[c0:], ln, c0)
            dv = flat.elem_degree(v)
            if dv is not None and dv != gb.degrees[i] + gb.degrees[j]:
                raise ModelSemanticError(ln, c0 + 1, f"product {a}*{b} has degree {dv}, "
                                                     f"expected {gb.degrees[i] + gb.degrees[j]}")
            if (i, j) in product or (j, i) in product:
                raise ModelSemanticError(ln, ca, f"product {a}*{b} given twice")
            product[(i, j)] = v
        for ln, (a, ca), raw, c0 in diffs:
            i = self.basis_key(flat, a, ln, ca)
            v = parse_element(flat, raw[c0:], ln, c0)
            dv = flat.elem_degree(v)
            if dv is not None and dv != gb.degrees[i] + 1:
                raise ModelSemanticError(ln, c0 + 1, f"d{a} has degree {dv}, expected {gb.degrees[i] + 1}")
            diff[i] = v
        A = TableAlgebra(gb, product, diff, unit=gb.index(unit), name=name)
        return AlgebraEntry(name, "table", A, line=line)

    def basis_key(self, A, nm, ln, c):
        try:
            return A.lookup(nm)
        except ParseError:
            raise ModelSemanticError(ln, c, f"unknown basis element {nm!r}") from None

    def free(self, name, body, line) -> AlgebraEntry:
        gens, diffs, cutoff = [], [], None
        for ln, raw in body:
            w = self.words(ln, raw)
            head = w[0][0]
            if head == "gen":
                if len(w) != 3 or not re.fullmatch(r"-?\d+", w[2][0]):
                    raise ModelSyntaxError(ln, w[0][1], "expected 'gen NAME DEGREE'")
                g, c = w[1]
                if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_']*", g):
                    raise ModelSyntaxError(ln, c, f"invalid generator name {g!r}")
                if any(g == h for h, _, _ in gens):
                    raise ModelSyntaxError(ln, c, f"duplicate generator {g!r}")
                deg = int(w[2][0])
                if deg < 1:
                    raise ModelSyntaxError(ln, w[2][1], f"generator {g!r} needs a positive degree")
                gens.append((g, deg, ln))
            elif head == "d":
                if len(w) < 4 or w[2][0] != "=":
                    raise ModelSyntaxError(ln, w[0][1], "expected 'd GEN = EXPR'")
                diffs.append((ln, w[1], raw, w[3][1] - 1))
            elif head == "cutoff":
                if len(w) != 2 or not w[1][0].isdigit():
                    raise ModelSyntaxError(ln, w[0][1], "expected 'cutoff N'")
                cutoff = int(w[1][0])
            else:
                raise ModelSyntaxError(ln, w[0][1], f"unexpected {head!r} in a free algebra")
        eff = self.cutoff if self.cutoff is not None else (cutoff if cutoff is not None else DEFAULT_CUTOFF)
        bare = FreeCDGA([(g, d) for g, d, _ in gens], {}, eff, name=name)
        dgen = {}
        degs = {g: d for g, d, _ in gens}
        for ln, (g, c), raw, c0 in diffs:
            if g not in degs:
                raise ModelSemanticError(ln, c, f"unknown generator {g!r}")
            if g in dgen:
                raise ModelSemanticError(ln, c, f"d{g} given twice")
            v = parse_element(bare, raw[c0:], ln, c0)
            dv = bare.elem_degree(v)
            if dv is not None and dv != degs[g] + 1:
                raise ModelSemanticError(ln, c, f"d{g} has degree {dv}, expected {degs[g] + 1}")
            dgen[g] = v
        A = bare.with_differential(dgen)
        return AlgebraEntry(name, "free", A, declared_cutoff=cutoff, line=line)

    # -- other declarations
    def tensor_line(self, w):
        if len(w) != 5 or w[2][0] != "=":
            self.error(ModelSyntaxError, w[0][1], "expected 'tensor NAME = A B'")
        name, col = w[1]
        self.new_name(name, col)
        a = self.algebra_ref(*w[3])
        b = self.algebra_ref(*w[4])
        T = tensor(a.algebra, b.algebra)
        T.label = name
        self.doc.algebras[name] = AlgebraEntry(name, "tensor", T, factors=(a.name, b.name), line=self.i + 1)
        self.doc.order.append(("algebra", name))
        self.i += 1

    def morphism_decl(self, w):
        line = self.i + 1
        if len(w) not in (6, 7) or w[2][0] != ":" or w[4][0] != "->":
            self.error(ModelSyntaxError, w[0][1], "expected 'morphism NAME : SOURCE -> TARGET [KIND]'")
        name, col = w[1]
        self.new_name(name, col)
        src = self.algebra_ref(*w[3])
        tgt = self.algebra_ref(*w[5])
        kind = w[6][0] if len(w) == 7 else "explicit"
        if kind == "multiplication":
            if src.kind != "tensor" or src.factors != (tgt.name, tgt.name):
                self.error(ModelSemanticError, w[6][1],
                           f"multiplication needs source 'tensor {src.name} = {tgt.name} {tgt.name}'")
            phi = multiplication2(tgt.algebra, src.algebra)
            self.i += 1
        elif kind == "left-unit":
            if tgt.kind != "tensor" or tgt.factors != (src.name, src.name):
                self.error(ModelSemanticError, w[6][1],
                           f"left-unit needs target 'tensor {tgt.name} = {src.name} {src.name}'")
            phi = section_of_left_unit(src.algebra, tgt.algebra)
            self.i += 1
        elif kind == "explicit":
            body = self.block()
            phi = self.explicit(src.algebra, tgt.algebra, body)
        else:
            self.error(ModelSyntaxError, w[6][1], f"unknown morphism kind {kind!r}")
        phi.name = name
        self.doc.morphisms[name] = MorphismEntry(name, src.name, tgt.name, kind, phi, line=line)
        self.doc.order.append(("morphism", name))

    def explicit(self, S: Algebra, T: Algebra, body) -> AlgebraMorphism:
        images, gimages = {}, {}
        for ln, raw in body:
            m = re.match(r"\s*(\S+)\s*(=)", raw)
            if not m:
                raise ModelSyntaxError(ln, _indent(raw) + 1, "expected 'NAME = EXPR'")
            nm = m.group(1)
            c = m.start(1) + 1
            if isinstance(S, FreeCDGA) and nm in S.generator_names:
                key, deg, store = nm, dict(S.gens)[nm], gimages
            else:
                base = S.base if isinstance(S, FreeCDGA) else S
                try:
                    key = base.lookup(nm)
                except ParseError:
                    raise ModelSemanticError(ln, c, f"unknown source element {nm!r}") from None
                deg, store = base.degree(key), images
            if key in store:
                raise ModelSemanticError(ln, c, f"image of {nm!r} given twice")
            v = parse_element(T, raw[m.end(2):], ln, m.end(2))
            dv = T.elem_degree(v)
            if dv is not None and dv != deg:
                raise ModelSemanticError(ln, c, f"image of {nm!r} has degree {dv}, expected {deg}")
            store[key] = v
        return AlgebraMorphism(S, T, images, gimages)

    def section_line(self, w):
        if len(w) != 3:
            self.error(ModelSyntaxError, w[0][1], "expected 'section MORPHISM SECTION'")
        (m, cm), (s, cs) = w[1], w[2]
        for nm, c in ((m, cm), (s, cs)):
            if nm not in self.doc.morphisms:
                self.error(ModelSemanticError, c, f"unknown morphism {nm!r}")
        phi, sec = self.doc.morphisms[m], self.doc.morphisms[s]
        if sec.source != phi.target or sec.target != phi.source:
            self.error(ModelSemanticError, cs, f"{s} does not go from {phi.target} to {phi.source}")
        phi.section = s
        phi.morphism.section = sec.morphism
        self.i += 1

    def meta_line(self, w, raw):
        if len(w) < 3:
            self.error(ModelSyntaxError, w[0][1], "expected 'meta KEY VALUE'")
        key, c = w[1]
        if key not in META_KEYS:
            self.error(ModelSyntaxError, c, f"unknown meta key {key!r}")
        val = " ".join(x for x, _ in w[2:])
        if key in ("formal", "simply-connected") and val not in ("true", "false"):
            self.error(ModelSyntaxError, w[2][1], "expected 'true' or 'false'")
        self.doc.meta[key] = val
        self.i += 1

    def finish(self):
        d = self.doc
        if "model" in d.meta and d.meta["model"] not in d.algebras:
            raise ModelSemanticError(1, 1, f"meta model {d.meta['model']!r} is not a declared algebra")
        if "target" in d.meta and d.meta["target"] not in d.morphisms:
            raise ModelSemanticError(1, 1, f"meta target {d.meta['target']!r} is not a declared morphism")


def parse_model(text: str, cutoff: Optional[int] = None) -> ModelDocument:
    """Parse a document; ``cutoff`` overrides the cutoff of every free algebra."""
    try:
        return _Parser(text, cutoff).run()
    except ParseError as exc:
        raise ModelSemanticError(1, 1, str(exc)) from None


# ---------------------------------------------------------------------------
# serializer


def serialize_model(doc: ModelDocument) -> str:
    out: List[str] = []
    for kind, name in doc.order:
        if kind == "algebra":
            e = doc.algebras[name]
            if e.kind == "table":
                basis, unit, prods, diff = _table_spec(e.algebra)
                bad = [n for n, _ in basis if not _NAME.fullmatch(n) or (n.isdigit() and n != "1")]
                if bad:
                    raise ValueError(f"basis name {bad[0]!r} cannot be written in a model file")
                out.append(f"algebra {name} table")
                out.append("  basis " + " ".join(f"{n}:{d}" for n, d in basis))
                if unit != "1":
                    out.append(f"  unit {unit}")
                out.extend(f"  product {a} {b} = {v}" for a, b, v in prods)
                out.extend(f"  d {a} = {v}" for a, v in diff)
                out.append("end")
            elif e.kind == "free":
                A = e.algebra
                out.append(f"algebra {name} free")
                out.extend(f"  gen {g} {d}" for g, d in A.gens)
                out.extend(f"  d {g} = {A.fmt(v)}" for g, v in A.generator_differentials().items() if v)
                if e.declared_cutoff is not None:
                    out.append(f"  cutoff {e.declared_cutoff}")
                out.append("end")
            else:
                out.append(f"tensor {name} = {e.factors[0]} {e.factors[1]}")
        else:
            m = doc.morphisms[name]
            if m.kind == "explicit":
                out.append(f"morphism {name} : {m.source} -> {m.target}")
                out.extend(f"  {k} = {v}" for k, v in _images(m.morphism))
                out.append("end")
            else:
                out.append(f"morphism {name} : {m.source} -> {m.target} {m.kind}")
    for m in doc.morphisms.values():
        if m.section:
            out.append(f"section {m.name} {m.section}")
    for k in META_KEYS:
        if k in doc.meta:
            out.append(f"meta {k} {doc.meta[k]}")
    return "\n".join(out) + "\n"
