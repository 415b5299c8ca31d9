import json
from fractions import Fraction

import pytest
import sympy

from conftest import corpus, cp, diagonal, sphere
from relcat.certificates import check
from relcat.morphism import AlgebraMorphism, identity
from relcat.msecat import (SectionError, build_system, msecat, normalize_retraction,
                           obstruction_doc, retraction_doc, solve_system, system_degree)
from relcat.sullivan import join_model

# obstruction degrees per n, produced by the solver and confirmed by the sympy
# re-solve below; frozen as regression values
OBSTRUCTIONS = {"S3": {0: 3}, "S2": {0: 2, 1: 4}}
VALUES = {"S3": 1, "S2": 2}


def models():
    return {"S3": diagonal(sphere(3)), "S2": diagonal(sphere(2))}


def system_for(name, n, cutoff=12):
    mu, s = models()[name]
    D = system_degree(mu.source, cutoff)
    jm = join_model(mu, n, max(2, D))
    return build_system(jm, s, D)


def sympy_feasible(sysm, max_degree=None):
    """Rank test with sympy, columns and rows in reversed order."""
    idx = [i for i in range(len(sysm.rows)) if max_degree is None or sysm.degrees[i] <= max_degree]
    idx.reverse()
    n = sysm.nvars
    if not idx:
        return True
    M = sympy.Matrix([[sympy.Rational(sysm.rows[i].get(j, 0)) for j in reversed(range(n))] for i in idx])
    b = sympy.Matrix([sympy.Rational(sysm.rhs[i]) for i in idx])
    if n == 0:
        return all(x == 0 for x in b)
    return M.rank() == M.row_join(b).rank()


@pytest.mark.parametrize("name", ["S3", "S2"])
@pytest.mark.parametrize("cutoff", [12, 16])
def test_msecat_values(name, cutoff):
    mu, s = models()[name]
    res = msecat(mu, s, n_max=4, cutoff=cutoff)
    assert res.value == VALUES[name]
    assert res.complete
    assert res.text() == str(VALUES[name])
    obs = {st.n: st.obstruction.degree for st in res.steps if not st.feasible}
    assert obs == OBSTRUCTIONS[name]


@pytest.mark.parametrize("name", ["S3", "S2"])
def test_second_elimination_order_agrees(name):
    for n in range(VALUES[name] + 2):
        sysm = system_for(name, n)
        x, obs = solve_system(sysm)
        assert sympy_feasible(sysm) == (obs is None)
        if obs is None:
            for row, b in zip(sysm.rows, sysm.rhs):
                assert sum(c * x.get(j, 0) for j, c in row.items()) == b
        else:
            # the obstruction degree is the least degree where the truncated system fails
            assert not sympy_feasible(sysm, obs.degree)
            assert sympy_feasible(sysm, obs.degree - 1)


@pytest.mark.parametrize("name", ["S3", "S2"])
def test_certificates_pass_checker(name):
    mu, s = models()[name]
    res = msecat(mu, s, n_max=4, cutoff=12)
    for st in res.steps:
        doc = retraction_doc(st.certificate) if st.feasible else obstruction_doc(st.obstruction)
        doc = json.loads(json.dumps(doc))
        rep = check(doc)
        assert rep.ok, rep.failures
        if st.feasible:
            assert all(rep.flags.values()) or not rep.flags["lands_in_K"]


@pytest.mark.parametrize("name", ["S3", "S2"])
def test_normalization(name):
    mu, s = models()[name]
    res = msecat(mu, s, n_max=4, cutoff=12)
    cert = res.steps[-1].certificate
    norm = normalize_retraction(cert)
    assert norm.relative
    assert all(norm.flags.values())
    again = normalize_retraction(norm)
    assert again.matrices == norm.matrices
    rep = check(json.loads(json.dumps(retraction_doc(norm))))
    assert rep.ok and all(rep.flags.values())


@pytest.mark.parametrize("name", ["S3", "S2"])
def test_monotone_in_n(name):
    first = VALUES[name]
    for n in range(first, first + 2):
        _, obs = solve_system(system_for(name, n))
        assert obs is None


def test_infeasibility_persists_with_larger_cutoff():
    for name in ("S3", "S2"):
        for n, deg in OBSTRUCTIONS[name].items():
            for cutoff in (12, 16, 20):
                _, obs = solve_system(system_for(name, n, cutoff))
                assert obs is not None and obs.degree == deg


def test_zero_kernel():
    A = cp(2)
    res = msecat(identity(A), identity(A), n_max=2, cutoff=8)
    assert res.value == 0
    cert = res.steps[0].certificate
    assert normalize_retraction(cert).matrices == cert.matrices
    assert cert.relative


def test_missing_or_bad_section():
    mu, _ = diagonal(sphere(3))
    with pytest.raises(SectionError):
        msecat(mu, None)
    H = mu.target
    zero_s = AlgebraMorphism(H, mu.source, {})
    with pytest.raises(SectionError):
        msecat(mu, zero_s)


def test_cutoff_too_small():
    mu, s = diagonal(sphere(3))
    with pytest.raises(ValueError):
        msecat(mu, s, cutoff=0)


def test_size_guard_stops_honestly():
    mu, s = diagonal(cp(2))
    res = msecat(mu, s, n_max=4, cutoff=8, max_tensor_dim=81)
    assert res.value is None
    assert res.stopped == 2
    assert "stopped at n = 2" in res.text()
    assert [st.obstruction.degree for st in res.steps] == [2, 4]


def test_truncated_cutoff_marks_uncertified():
    mu, s = diagonal(sphere(3))
    res = msecat(mu, s, n_max=2, cutoff=4)
    assert not res.complete
    if res.value is not None:
        assert "uncertified" in res.text()


def test_tampered_certificates_rejected():
    mu, s = models()["S3"]
    res = msecat(mu, s, n_max=2, cutoff=12)
    obs = json.loads(json.dumps(obstruction_doc(res.steps[0].obstruction)))
    key = next(iter(obs["multipliers"]))
    obs["multipliers"][key] = str(Fraction(obs["multipliers"][key]) * 2)
    assert not check(obs).ok
    ret = json.loads(json.dumps(retraction_doc(res.steps[1].certificate)))
    ret["r"]["1@y"] = {"1@y": "2"}
    assert not check(ret).ok
    ret2 = json.loads(json.dumps(retraction_doc(res.steps[1].certificate)))
    ret2["flags"]["lands_in_K"] = not ret2["flags"]["lands_in_K"]
    assert not check(ret2).ok


def test_corpus_section_morphisms():
    doc = corpus("s3-diagonal")
    m = doc.target()
    res = msecat(m.morphism, m.morphism.section, n_max=2, cutoff=12)
    assert res.value == 1
