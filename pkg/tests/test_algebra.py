import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from conftest import cp, random_free, sphere, trunc_poly
from relcat.algebra import (DegreeOverflow, FreeCDGA, GradedBasis, ParseError, TableAlgebra,
                            point_algebra, tensor, tensor_power)
from relcat.morphism import (compose, identity, multiplication2, multiplication_morphism,
                             section_of_left_unit)
from relcat.validate import check_morphism, validate_algebra


def e(A, name, c=1):
    return {A.lookup(name): c}


def test_odd_square_vanishes():
    F = FreeCDGA([("y", 3)], {})
    y = F.gen("y")
    assert F.mul(y, y) == {}


def test_truncated_table_relation():
    A = trunc_poly("S2", 2, 1)
    assert A.mul(e(A, "x"), e(A, "x")) == {}


def test_free_even_powers():
    F = FreeCDGA([("x", 2)], {}, 8)
    x = F.gen("x")
    assert F.fmt(F.mul(x, F.power(x, 2))) == "x^3"
    assert F.dims(8) == [1, 0, 1, 0, 1, 0, 1, 0, 1]
    with pytest.raises(DegreeOverflow):
        F.basis(10)


def test_koszul_signs_odd_and_even():
    H = sphere(3)
    HH = tensor(H, H)
    assert HH.mul(e(HH, "1@y"), e(HH, "y@1")) == e(HH, "y@y", -1)
    assert HH.mul(e(HH, "y@1"), e(HH, "1@y")) == e(HH, "y@y")
    H2 = sphere(2)
    HH2 = tensor(H2, H2)
    assert HH2.mul(e(HH2, "1@x"), e(HH2, "x@1")) == e(HH2, "x@x")


def test_free_tensor_differential():
    F = FreeCDGA([("x", 2), ("y", 3)], {}, 8)
    F = F.with_differential({"y": F.mul(F.gen("x"), F.gen("x"))})
    T = tensor(F, F)
    dy = T.d(T.gen("y@1"))
    assert T.fmt(dy) == "x@1^2"
    assert validate_algebra(T).ok


def test_validate_valid_models():
    F = FreeCDGA([("y", 3)], {})
    assert validate_algebra(F).ok
    G = FreeCDGA([("x", 2), ("y", 3)], {}, 10)
    G = G.with_differential({"y": G.mul(G.gen("x"), G.gen("x"))})
    assert validate_algebra(G).ok
    assert G.d(G.d(G.gen("y"))) == {}


def test_validate_reports_commutativity_witness():
    gb = GradedBasis([("1", 0), ("x", 3), ("y", 3), ("z", 6)])
    # x*y = z and y*x = z breaks (-1)^{9} antisymmetry
    A = TableAlgebra(gb, {(1, 2): {3: 1}, (2, 1): {3: 1}})
    rep = validate_algebra(A)
    assert not rep.ok
    assert any(v.kind == "commutativity" and set(v.witness) == {"x", "y"} for v in rep.violations)


def test_validate_reports_leibniz_and_d2():
    gb = GradedBasis([("1", 0), ("a", 1), ("b", 2), ("c", 3)])
    A = TableAlgebra(gb, {}, {1: {2: 1}, 2: {3: 1}})
    rep = validate_algebra(A)
    assert "d^2" in rep.kinds()


def test_table_rejects_bad_unit_and_degrees():
    with pytest.raises(ParseError):
        TableAlgebra(GradedBasis([("u", 1)]))
    with pytest.raises(ParseError):
        FreeCDGA([("z", 0)], {})
    with pytest.raises(ParseError):
        FreeCDGA([("x", 2)], {})


def test_coefficients_are_exact():
    A = trunc_poly("CP2", 2, 2)
    x = e(A, "x", Fraction(1, 3))
    sq = A.mul(x, x)
    assert sq == e(A, "x2", Fraction(1, 9))
    c = sq[A.lookup("x2")]
    assert c.denominator == 9 and c.numerator == 1


def test_point_algebra_multiplication():
    P = point_algebra()
    mu = multiplication2(P)
    assert check_morphism(mu).ok
    assert mu.apply_basis(mu.source.unit_key) == P.unit()


def test_mu_on_s2():
    H = sphere(2)
    mu = multiplication2(H)
    HH = mu.source
    z = {HH.lookup("1@x"): 1, HH.lookup("x@1"): -1}
    assert mu(z) == {}
    assert mu(e(HH, "x@x")) == {}


@pytest.mark.parametrize("m", [1, 2, 3])
def test_multiplication_morphism_is_cdga_map(m):
    for H in (sphere(3), sphere(2), cp(2)):
        mu = multiplication_morphism(H, m)
        assert check_morphism(mu).ok
        assert sum(mu.source.dims()) == len(H) ** m


def test_section_is_section():
    for H in (sphere(3), cp(2)):
        mu = multiplication2(H)
        s = section_of_left_unit(H, mu.source)
        assert check_morphism(s).ok
        ms = compose(mu, s)
        for k in H.all_keys():
            assert ms.apply_basis(k) == {k: 1}


def test_tensor_power_dims():
    H = cp(2)
    P = tensor_power(H, 3)
    assert sum(P.dims()) == 27
    assert P.top_degree == 12


# ---------------------------------------------------------------------------
# properties


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(0, 10**6))
def test_kunneth_dims(s1, s2):
    A = random_free(random.Random(s1), max_dim=6)
    B = random_free(random.Random(s2), max_dim=6)
    T = tensor(A, B)
    want = [0] * (A.top_degree + B.top_degree + 1)
    for i, a in enumerate(A.dims()):
        for j, b in enumerate(B.dims()):
            want[i + j] += a * b
    assert T.dims() == want
    assert validate_algebra(T).ok


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_tensor_product_matches_oracle(seed):
    A = random_free(random.Random(seed), max_dim=5)
    T = tensor(A, A)
    D = oracles.tensor(oracles.from_relcat(A), oracles.from_relcat(A))
    names = D.names
    for i, a in enumerate(names):
        for j, b in enumerate(names):
            got = T.mul_basis(T.lookup(a), T.lookup(b))
            got = {T.name(k): Fraction(c) for k, c in got.items()}
            want = {names[k]: c for k, c in D.mul({i: 1}, {j: 1}).items()}
            assert got == want


gen_degree = st.integers(1, 4)


@settings(max_examples=60, deadline=None)
@given(st.lists(gen_degree, min_size=1, max_size=3), st.integers(0, 10**6))
def test_free_algebra_axioms(degs, seed):
    rng = random.Random(seed)
    F = FreeCDGA([(f"g{i}", d) for i, d in enumerate(degs)], {}, 7)
    keys = F.all_keys()
    low = F.all_keys(2)

    def rand_elem():
        return {k: rng.choice([-1, 1, 2]) for k in rng.sample(low, min(3, len(low)))}

    a, b, c = rand_elem(), rand_elem(), rand_elem()
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    for k1 in keys:
        for k2 in keys:
            if F.degree(k1) + F.degree(k2) > 7:
                continue
            sign = -1 if F.degree(k1) * F.degree(k2) % 2 else 1
            back = F.mul_basis(k2, k1)
            assert F.mul_basis(k1, k2) == {k: sign * v for k, v in back.items()}


def test_extend_keeps_keys():
    F = FreeCDGA([("x", 2)], {}, 8)
    G = F.extend([("y", 3)], {"y": F.mul(F.gen("x"), F.gen("x"))})
    x = G.gen("x")
    assert F.gen("x") == x
    assert G.fmt(G.d(G.gen("y"))) == "x^2"
    assert validate_algebra(G).ok


def test_identity_morphism_is_valid():
    A = cp(3)
    assert check_morphism(identity(A)).ok
