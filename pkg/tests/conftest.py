import random
from importlib import resources

import pytest

from relcat.algebra import FreeCDGA, TableAlgebra, tensor
from relcat.modelfile import parse_model
from relcat.morphism import multiplication2, section_of_left_unit


def corpus_text(name):
    return resources.files("relcat").joinpath("corpus", f"{name}.model").read_text(encoding="utf-8")


def corpus(name, cutoff=None):
    return parse_model(corpus_text(name), cutoff=cutoff)


def trunc_poly(name, deg, n):
    nm = lambda k: "1" if k == 0 else ("x" if k == 1 else f"x{k}")
    items = [(nm(k), deg * k) for k in range(n + 1)]
    prods = {(nm(i), nm(j)): {nm(i + j): 1}
             for i in range(1, n + 1) for j in range(1, n + 1) if i + j <= n}
    return TableAlgebra.from_names(items, prods, name=name)


def sphere(deg):
    if deg % 2:
        return TableAlgebra.from_names([("1", 0), ("y", deg)], name=f"S{deg}")
    return trunc_poly(f"S{deg}", deg, 1)


def cp(n):
    return trunc_poly(f"CP{n}", 2, n)


def diagonal(H):
    """(μ: H⊗H → H, s: H → H⊗H, a ↦ a⊗1)."""
    HH = tensor(H, H)
    return multiplication2(H, HH), section_of_left_unit(H, HH)


def random_free(rng: random.Random, max_dim: int = 8):
    """Truncated free graded-commutative algebra with a random differential.

    Generators come in increasing degree.  Some are closed (d = 0); every
    other generator is sent to a random combination of monomials in the
    closed generators, which are cocycles, so d² = 0 and Leibniz hold by
    construction.  The result is truncated to a table of dimension ≤ max_dim.
    Most draws are retried until the truncated differential is nonzero.
    """
    want_d = rng.random() < 0.7
    for _ in range(20):
        T = _random_free_once(rng, max_dim)
        if not want_d or not T.d_is_zero():
            break
    return T


def _random_free_once(rng: random.Random, max_dim: int):
    ngen = rng.randint(2, 4)
    gens = []
    for i in range(ngen):
        gens.append((f"g{i}", rng.randint(1, 4)))
    gens.sort(key=lambda g: g[1])
    gens = [(f"g{i}", d) for i, (_, d) in enumerate(gens)]
    cutoff = rng.randint(2, 12)
    F = FreeCDGA(gens, {}, cutoff)
    deg = dict(gens)
    closed = []
    diffs = {}
    for g, d in gens:
        if not closed or rng.random() < 0.3:
            closed.append(g)
            continue
        Z = FreeCDGA([(c, deg[c]) for c in closed], {}, cutoff)
        options = list(Z.basis(d + 1)) if d + 1 <= cutoff else []
        img = {}
        for _, mono in options:
            if rng.random() < 0.7:
                term = F.unit()
                for i, e in mono:
                    term = F.mul(term, F.power(F.gen(closed[i]), e))
                for k, c in term.items():
                    img[k] = img.get(k, 0) + rng.choice([-2, -1, 1, 1, 2, 3]) * c
        img = {k: c for k, c in img.items() if c}
        if img:
            diffs[g] = img
        else:
            closed.append(g)
    Fd = F.with_differential(diffs)
    upto = min(cutoff, Fd.max_degree)
    while sum(Fd.dims(upto)) > max_dim:
        upto -= 1
    return Fd.to_table(upto)


@pytest.fixture
def s3():
    return sphere(3)


@pytest.fixture
def s2():
    return sphere(2)


# one line per acceptance criterion, printed at the end of the run
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
