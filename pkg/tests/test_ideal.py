import pytest

import oracles
from conftest import corpus, cp, sphere
from relcat.algebra import GradedBasis, TableAlgebra, tensor, tensor_elem
from relcat.ideal import (GradedIdeal, IdealError, ideal_generated, ideal_power, ideal_product,
                          kernel, nil, quotient_algebra, zero_ideal)
from relcat.linalg import vadd
from relcat.morphism import identity, multiplication2


def named(A, vec_or_elem):
    return {A.name(k): c for k, c in vec_or_elem.items()}


def test_kernel_mu_s3():
    H = sphere(3)
    mu = multiplication2(H)
    K = kernel(mu)
    AA = mu.source
    assert K.dims() == [0, 0, 0, 1, 0, 0, 1]
    (v,) = K.elements(3)
    c = v[AA.lookup("1@y")]
    assert named(AA, {k: x / c for k, x in v.items()}) == {"1@y": 1, "y@1": -1}
    assert K.elements(6) == [{AA.lookup("y@y"): 1}]
    assert not K.closure_violations()


def test_kernel_restriction_cp2_cp1():
    phi = corpus("cp2-cp1").target().morphism
    K = kernel(phi)
    A = phi.source
    assert K.dims() == [0, 0, 0, 0, 1]
    assert K.elements(4) == [{A.lookup("x2"): 1}]


def test_kernel_identity_is_zero():
    assert kernel(identity(cp(3))).is_zero()


def test_powers_s2():
    H = sphere(2)
    mu = multiplication2(H)
    AA = mu.source
    K = kernel(mu)
    K2 = ideal_power(K, 2)
    assert K2.contains({AA.lookup("x@x"): -2})
    assert not K2.is_zero()
    assert ideal_power(K, 3).is_zero()
    z = {AA.lookup("1@x"): 1, AA.lookup("x@1"): -1}
    assert AA.mul(z, z) == {AA.lookup("x@x"): -2}


def test_powers_cp2():
    H = cp(2)
    mu = multiplication2(H)
    AA = mu.source
    K = kernel(mu)
    K4 = ideal_power(K, 4)
    assert K4.contains({AA.lookup("x2@x2"): -6})
    assert K4.dims()[8] == 1
    assert ideal_power(K, 5).is_zero()
    z = {AA.lookup("1@x"): 1, AA.lookup("x@1"): -1}
    assert AA.power(z, 4) == {AA.lookup("x2@x2"): 6}


def test_zero_ideal_powers_and_nil():
    A = cp(2)
    Z = zero_ideal(A)
    assert ideal_power(Z, 5).is_zero()
    assert nil(Z).value == 0


def test_nil_values():
    for H, want in ((sphere(3), 1), (sphere(2), 2), (cp(2), 4)):
        r = nil(kernel(multiplication2(H)))
        assert r.value == want and r.certified


def test_nil_refuses_degree_zero():
    A = cp(1)
    with pytest.raises(IdealError):
        nil(GradedIdeal(A, {0: [{0: 1}]}))


def test_ideal_power_needs_positive_exponent():
    with pytest.raises(ValueError):
        ideal_power(zero_ideal(cp(1)), 0)


def test_quotient_cp2_by_x2():
    A = cp(2)
    I = ideal_generated(A, [{A.lookup("x2"): 1}])
    q = quotient_algebra(A, I)
    assert q.algebra.dims() == [1, 0, 1]
    x = q.algebra.lookup("x")
    assert q.algebra.mul({x: 1}, {x: 1}) == {}
    assert q.projection.apply_basis(A.lookup("x2")) == {}


def test_quotient_by_zero_is_identity():
    A = cp(2)
    q = quotient_algebra(A, zero_ideal(A))
    assert q.algebra is A
    for k in A.all_keys():
        assert q.projection.apply_basis(k) == {k: 1}


def test_quotient_s3_square_of_kernel():
    H = sphere(3)
    mu = multiplication2(H)
    AA = mu.source
    K2 = ideal_power(kernel(mu), 2)
    q = quotient_algebra(AA, K2)
    want = [a - b for a, b in zip(AA.dims(), K2.dims())]
    assert q.algebra.dims() == want == [1, 0, 0, 2, 0, 0, 1]


def test_quotient_needs_differential_ideal():
    A = TableAlgebra(GradedBasis([("1", 0), ("u", 3), ("v", 4)]), {}, {1: {2: 1}})
    I = GradedIdeal(A, {3: [{0: 1}]})
    with pytest.raises(IdealError):
        quotient_algebra(A, I)


def test_closure_violation_reported():
    A = cp(2)
    not_ideal = GradedIdeal(A, {2: [{0: 1}]})
    assert not_ideal.closure_violations()


def test_product_of_ideals_matches_oracle():
    H = cp(3)
    mu = multiplication2(H)
    K = kernel(mu)
    P = ideal_product(K, K)
    D = oracles.tensor(oracles.cp(3), oracles.cp(3))
    ker = oracles.mu_kernel(oracles.cp(3), D)
    prods = [D.mul(a, b) for a in ker for b in ker]
    prods = [p for p in prods if p]
    for n in range(P.upto + 1):
        mine = [p for p in prods if {D.degs[k] for k in p} == {n}]
        assert P.dim(n) == oracles.rank(mine, list(range(len(D))))


def test_kernel_of_mu_is_generated_by_differences():
    for H in (sphere(3), cp(2), tensor(sphere(2), sphere(3))):
        mu = multiplication2(H)
        AA = mu.source
        gens = []
        for a in H.all_keys():
            if H.degree(a) == 0:
                continue
            left = tensor_elem(H, H, AA, {a: 1}, H.unit())
            right = tensor_elem(H, H, AA, H.unit(), {a: 1})
            gens.append(vadd(left, right, -1))
        G = ideal_generated(AA, gens)
        assert G.same_as(kernel(mu))
