"""Independent checker for certificate documents.

This module deliberately imports nothing from the rest of the package: it
reads the raw tables written next to a report and re-verifies the claim
with its own (dense, naive) rational arithmetic.

Kinds:

* ``nil``         -- an ideal, its powers, and the claimed nilpotency
* ``retraction``  -- a module retraction r of a join model, with flags
* ``obstruction`` -- multipliers deriving 0 = 1 from the retraction equations
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List


@dataclass
class CheckReport:
    kind: str
    ok: bool = True
    failures: List[str] = field(default_factory=list)
    flags: Dict[str, bool] = field(default_factory=dict)

    def fail(self, msg: str) -> None:
        self.ok = False
        self.failures.append(msg)


def _q(s) -> Fraction:
    return Fraction(s)


def _vec(d: dict) -> Dict[str, Fraction]:
    return {k: _q(v) for k, v in d.items() if _q(v) != 0}


def _add(out: dict, k, c) -> None:
    v = out.get(k, Fraction(0)) + c
    if v:
        out[k] = v
    else:
        out.pop(k, None)


def _rank(rows: List[Dict[str, Fraction]]) -> int:
    """Plain Gaussian elimination on dict rows."""
    pivots: List[tuple] = []
    for r in rows:
        r = dict(r)
        for col, prow in pivots:
            c = r.get(col)
            if c:
                for k, v in prow.items():
                    _add(r, k, -c * v)
        if r:
            col = sorted(r)[0]
            c = r[col]
            pivots.append((col, {k: v / c for k, v in r.items()}))
    return len(pivots)


class _Alg:
    def __init__(self, basis, product=None, d=None):
        self.deg = {}
        for name, deg in basis:
            if name in self.deg:
                raise ValueError(f"duplicate basis name {name!r}")
            self.deg[name] = deg
        self.prod = {}
        for x, y, z in product or []:
            self.prod[(x, y)] = _vec(z)
        self.d = {k: _vec(v) for k, v in (d or {}).items()}

    def mul(self, a: dict, b: dict) -> dict:
        out: dict = {}
        for x, cx in a.items():
            for y, cy in b.items():
                for z, cz in self.prod.get((x, y), {}).items():
                    _add(out, z, cx * cy * cz)
        return out

    def diff(self, a: dict) -> dict:
        out: dict = {}
        for x, c in a.items():
            for z, cz in self.d.get(x, {}).items():
                _add(out, z, c * cz)
        return out

    def in_degree(self, n: int) -> List[str]:
        return [k for k, d in self.deg.items() if d == n]


def _degree_of(alg: _Alg, v: dict):
    degs = {alg.deg[k] for k in v}
    return degs.pop() if len(degs) == 1 else None


# ---------------------------------------------------------------------------
# nil


def check_nil(doc: dict) -> CheckReport:
    rep = CheckReport("nil")
    amb = doc["ambient"]
    A = _Alg(amb["basis"], amb["product"])
    upto = amb["upto"]
    powers = [[_vec(v) for v in P] for P in doc["powers"]]
    value = doc["value"]
    if len(powers) != value + 1:
        rep.fail(f"expected {value + 1} powers, got {len(powers)}")
        return rep
    I = powers[0]
    for v in I:
        if _degree_of(A, v) is None:
            rep.fail("inhomogeneous ideal vector")
            return rep
    # the first power is the claimed ideal
    src = doc["ideal"]["source"]
    if src == "kernel":
        T = _Alg(doc["ideal"]["target_basis"])
        mp = {k: _vec(v) for k, v in doc["ideal"]["map"].items()}

        def image(v):
            out: dict = {}
            for k, c in v.items():
                for z, cz in mp.get(k, {}).items():
                    _add(out, z, c * cz)
            return out

        for k, v in mp.items():
            if k not in A.deg or any(z not in T.deg for z in v):
                rep.fail(f"map entry {k!r} uses names outside the bases")
        for v in I:
            if image(v):
                rep.fail("ideal vector not in the kernel")
        for n in range(upto + 1):
            src_keys = A.in_degree(n)
            if not src_keys:
                continue
            r_map = _rank([mp.get(k, {}) for k in src_keys])
            mine = [v for v in I if _degree_of(A, v) == n]
            if _rank(mine) != len(src_keys) - r_map:
                rep.fail(f"ideal is not the whole kernel in degree {n}")
    elif src == "augmentation":
        for n in range(upto + 1):
            mine = [v for v in I if _degree_of(A, v) == n]
            want = len(A.in_degree(n)) if n > 0 else 0
            if _rank(mine) != want:
                rep.fail(f"not the augmentation ideal in degree {n}")
    else:
        rep.fail(f"unknown ideal source {src!r}")
    # each power is spanned by products of the previous one with I
    for j in range(1, len(powers)):
        prods = []
        for x in powers[j - 1]:
            for y in I:
                if _degree_of(A, x) + _degree_of(A, y) <= upto:
                    p = A.mul(x, y)
                    if p:
                        prods.append(p)
        P = powers[j]
        rp, rq, rb = _rank(prods), _rank(P), _rank(prods + P)
        if not (rp == rq == rb):
            rep.fail(f"power {j + 1} does not match products (ranks {rp}, {rq}, {rb})")
    if value > 0 and not powers[value - 1]:
        rep.fail(f"power {value} is zero")
    if powers[value]:
        rep.fail(f"power {value + 1} is not zero")
    if doc["certified"]:
        if not (amb["complete"] and amb["top"] is not None and amb["top"] <= upto):
            rep.fail("vanishing claimed certified but the ambient is truncated")
    return rep


# ---------------------------------------------------------------------------
# retraction systems


class _System:
    def __init__(self, doc: dict):
        self.D = doc["degree_bound"]
        self.A = _Alg(doc["A"]["basis"], doc["A"]["product"], doc["A"]["d"])
        self.B = _Alg(doc["B"]["basis"])
        self.s = {k: _vec(v) for k, v in doc["section"].items()}
        self.phi = {k: _vec(v) for k, v in doc["phi"].items()}
        jb = doc["J"]
        self.Jdeg = {}
        for name, deg in jb["basis"]:
            if name in self.Jdeg:
                raise ValueError(f"duplicate basis name {name!r}")
            self.Jdeg[name] = deg
        self.base = dict(jb["base"])               # J name -> A name, for A ⊂ J
        self.Jd = {k: _vec(v) for k, v in jb["d"].items()}
        self.action = [(b, x, _vec(v)) for b, x, v in jb["action"]]

    def free(self, x: str) -> bool:
        return x not in self.base

    def split(self, v: dict):
        """(part in A⊗Λ⁺W, part in A as an A-element)."""
        w, a = {}, {}
        for k, c in v.items():
            if self.free(k):
                w[k] = c
            else:
                _add(a, self.base[k], c)
        return w, a

    def equations(self):
        """label -> (row over (x, a) unknowns, rhs), rebuilt from scratch."""
        A = self.A
        eqs = {}

        def build(prefix, x, e, image, left):
            w, const = self.split(image)
            for a in A.in_degree(e):
                row: dict = {}
                for y, c in w.items():
                    if self.Jdeg[y] == e:
                        _add(row, (y, a), c)
                for a2 in A.in_degree(self.Jdeg[x]):
                    coef = left(a2).get(a, 0)
                    if coef:
                        _add(row, (x, a2), -coef)
                eqs[f"{prefix}|{a}"] = (row, -const.get(a, Fraction(0)))

        for x, dx in self.Jd.items():
            if self.free(x) and self.Jdeg[x] < self.D:
                build(f"d|{x}", x, self.Jdeg[x] + 1, dx, lambda a2: A.diff({a2: Fraction(1)}))
        for b, x, act in self.action:
            sb = self.s.get(b, {})
            e = self.Jdeg[x] + self.B.deg[b]
            build(f"mod|{b}|{x}", x, e, act, lambda a2, sb=sb: A.mul(sb, {a2: Fraction(1)}))
        return eqs


def check_obstruction(doc: dict) -> CheckReport:
    rep = CheckReport("obstruction")
    S = _System(doc)
    eqs = S.equations()
    y = {k: _q(v) for k, v in doc["multipliers"].items()}
    total_row: dict = {}
    total_rhs = Fraction(0)
    for label, c in y.items():
        if label not in eqs:
            rep.fail(f"unknown equation {label!r}")
            continue
        parts = label.split("|")
        a = parts[-1]
        if S.A.deg[a] > doc["degree"]:
            rep.fail(f"equation {label!r} lies above the claimed degree")
        row, rhs = eqs[label]
        for k, v in row.items():
            _add(total_row, k, c * v)
        total_rhs += c * rhs
    if total_row:
        rep.fail("multipliers do not cancel the unknowns")
    if total_rhs != 1:
        rep.fail(f"multipliers give 0 = {total_rhs}, not 0 = 1")
    return rep


def check_retraction(doc: dict) -> CheckReport:
    rep = CheckReport("retraction")
    S = _System(doc)
    A = S.A
    r = {k: _vec(v) for k, v in doc["r"].items()}

    def R(v: dict) -> dict:
        out: dict = {}
        for k, c in v.items():
            if S.Jdeg[k] > S.D:
                continue
            for a, q in r.get(k, {}).items():
                _add(out, a, c * q)
        return out

    degree_ok = all(A.deg[a] == S.Jdeg[x] for x, img in r.items() for a in img)
    ident = all(r.get(x, {}) == {a: 1} for x, a in S.base.items())
    commutes = True
    for x, dx in S.Jd.items():
        if S.Jdeg[x] < S.D and R(dx) != A.diff(r.get(x, {})):
            commutes = False
            rep.failures.append(f"r∘D differs from d∘r at {x}")
    module = True
    for b, x, act in S.action:
        if R(act) != A.mul(S.s.get(b, {}), r.get(x, {})):
            module = False
            rep.failures.append(f"module linearity fails at ({b}, {x})")

    def phi(v):
        out: dict = {}
        for k, c in v.items():
            for z, cz in S.phi.get(k, {}).items():
                _add(out, z, c * cz)
        return out

    in_k = all(not phi(r.get(x, {})) for x in S.Jdeg if S.free(x))
    rep.flags = {"restricts_to_identity": ident and degree_ok, "commutes_with_d": commutes,
                 "module_map": module, "lands_in_K": in_k}
    if not (rep.flags["restricts_to_identity"] and commutes and module):
        rep.ok = False
        if not degree_ok:
            rep.failures.append("r does not preserve degrees")
        if not ident:
            rep.failures.append("r is not the identity on A")
    claimed = doc.get("flags", {})
    for k, v in rep.flags.items():
        if k in claimed and claimed[k] != v:
            rep.fail(f"flag {k} claimed {claimed[k]} but checks as {v}")
    if doc.get("normalized") and not in_k:
        rep.fail("normalized retraction does not land in K on Λ⁺W")
    return rep


CHECKERS = {"nil": check_nil, "retraction": check_retraction, "obstruction": check_obstruction}


def check(doc: dict) -> CheckReport:
    kind = doc.get("kind")
    if kind not in CHECKERS:
        rep = CheckReport(str(kind))
        rep.fail(f"unknown certificate kind {kind!r}")
        return rep
    try:
        return CHECKERS[kind](doc)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        rep = CheckReport(kind)
        rep.fail(f"malformed certificate: {exc!r}")
        return rep


def check_file(path) -> CheckReport:
    with open(path, encoding="utf-8") as fh:
        return check(json.load(fh))
