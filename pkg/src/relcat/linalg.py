"""Sparse exact linear algebra over Q.

Vectors are plain dicts mapping an integer coordinate to a nonzero
``Fraction``.  Everything is kept in fully reduced row-echelon form so that
spans have a canonical basis.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Tuple

Vec = Dict[int, Fraction]


def vadd(u: dict, v: dict, c=1) -> dict:
    """Return u + c*v (inputs untouched)."""
    out = dict(u)
    for k, x in v.items():
        y = out.get(k, 0) + c * x
        if y:
            out[k] = y
        else:
            out.pop(k, None)
    return out


def viadd(u: dict, v: dict, c=1) -> None:
    for k, x in v.items():
        y = u.get(k, 0) + c * x
        if y:
            u[k] = y
        else:
            del u[k]


def vscale(v: dict, c) -> dict:
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


def vclean(v: dict) -> dict:
    return {k: Fraction(x) for k, x in v.items() if x}


class Echelon:
    """Incrementally maintained reduced row-echelon basis of a subspace.

    The pivot of a row is its smallest coordinate.  With ``track=True`` every
    row also remembers which combination of the inserted vectors produced it,
    which is what kernels and infeasibility certificates are read from.
    """

    def __init__(self, vectors: Iterable[dict] = (), track: bool = False):
        self.rows: Dict[int, Vec] = {}
        self.track = track
        self.combos: Dict[int, Vec] = {}
        self._col: Dict[int, set] = {}
        self.inserted = 0
        for v in vectors:
            self.insert(v)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def __len__(self):
        return len(self.rows)

    def pivots(self) -> List[int]:
        return sorted(self.rows)

    def basis(self) -> List[Vec]:
        return [dict(self.rows[p]) for p in sorted(self.rows)]

    def _reduce(self, v: dict, combo: Optional[dict]) -> Vec:
        r = {k: Fraction(x) for k, x in v.items() if x}
        hits = [p for p in r if p in self.rows]
        for p in hits:
            c = r.get(p)
            if not c:
                continue
            viadd(r, self.rows[p], -c)
            if combo is not None:
                viadd(combo, self.combos[p], -c)
        return r

    def reduce(self, v: dict) -> Vec:
        return self._reduce(v, None)

    def contains(self, v: dict) -> bool:
        return not self._reduce(v, None)

    def insert(self, v: dict) -> Tuple[bool, Optional[Vec]]:
        """Insert v; return (independent, relation).

        When tracking and v is dependent, ``relation`` expresses zero as a
        combination of inserted vectors with coefficient 1 on v itself.
        """
        idx = self.inserted
        self.inserted += 1
        combo = {idx: Fraction(1)} if self.track else None
        r = self._reduce(v, combo)
        if not r:
            return False, combo
        q = min(r)
        c = r[q]
        if c != 1:
            r = {k: x / c for k, x in r.items()}
            if combo is not None:
                combo = {k: x / c for k, x in combo.items()}
        for p in list(self._col.get(q, ())):
            row = self.rows[p]
            e = row.get(q)
            if not e:
                continue
            for k in row:
                self._col[k].discard(p)
            viadd(row, r, -e)
            for k in row:
                self._col.setdefault(k, set()).add(p)
            if combo is not None:
                viadd(self.combos[p], combo, -e)
        self.rows[q] = r
        for k in r:
            self._col.setdefault(k, set()).add(q)
        if combo is not None:
            self.combos[q] = combo
        return True, None

    def express(self, v: dict) -> Optional[Vec]:
        """Coefficients of v over the inserted vectors, or None if v is not in the span."""
        if not self.track:
            raise ValueError("express() needs a tracking echelon")
        combo: Vec = {}
        r = self._reduce(v, combo)
        if r:
            return None
        return {k: -x for k, x in combo.items()}


def rref(vectors: Iterable[dict]) -> List[Vec]:
    return Echelon(vectors).basis()


def rank(vectors: Iterable[dict]) -> int:
    return Echelon(vectors).rank


def kernel(images: List[dict]) -> List[Vec]:
    """Basis (in RREF) of {c : sum_i c_i images[i] = 0}."""
    e = Echelon(track=True)
    rels = []
    for v in images:
        ok, rel = e.insert(v)
        if not ok:
            rels.append(rel)
    return rref(rels)


class Infeasible(Exception):
    def __init__(self, multipliers: Vec):
        super().__init__("inconsistent linear system")
        self.multipliers = multipliers


def solve(rows: List[dict], rhs: List, nvars: int) -> Vec:
    """Solve ``rows * x = rhs`` for x in Q^nvars, free variables set to zero.

    Raises ``Infeasible`` carrying multipliers y with y^T rows = 0 and
    y^T rhs = 1.
    """
    sentinel = nvars
    e = Echelon(track=True)
    for row, b in zip(rows, rhs):
        aug = dict(row)
        if b:
            aug[sentinel] = Fraction(b)
        ok, rel = e.insert(aug)
    bad = e.rows.get(sentinel)
    if bad is not None:
        # the row reads 0 = 1; its combination is the Farkas vector
        raise Infeasible(dict(e.combos[sentinel]))
    x: Vec = {}
    for p, row in e.rows.items():
        val = row.get(sentinel, 0)
        if val:
            x[p] = val
    return x
