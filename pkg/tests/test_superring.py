import random
from math import comb

import pytest

from superdelta.partitions import all_permutations, compose, identity_perm
from superdelta.superring import (
    SuperMonomial,
    SuperPoly,
    TriDegree,
    apply_perm,
    component_dimension,
    compositions,
    enumerate_monomials,
    gen_p,
    gen_ptilde,
    ideal_generators,
    mono_mul,
    mono_str,
)


def theta(n, *indices):
    return SuperMonomial((0,) * n, (0,) * n, tuple(indices))


def random_poly(rng, n, nterms=3, maxdeg=2):
    terms = {}
    for _ in range(nterms):
        xexp = tuple(rng.randrange(maxdeg + 1) for _ in range(n))
        yexp = tuple(rng.randrange(maxdeg + 1) for _ in range(n))
        th = tuple(sorted(rng.sample(range(1, n + 1), rng.randrange(n + 1))))
        terms[SuperMonomial(xexp, yexp, th)] = rng.randrange(-4, 5) or 1
    return SuperPoly(n, terms)


def test_mono_mul_theta_signs():
    assert mono_mul(theta(2, 1), theta(2, 2)) == (1, theta(2, 1, 2))
    assert mono_mul(theta(2, 2), theta(2, 1)) == (-1, theta(2, 1, 2))
    assert mono_mul(theta(2, 1), theta(2, 1)) is None


def test_mono_mul_adds_exponents():
    u = SuperMonomial((1, 0), (0, 2), (1,))
    v = SuperMonomial((0, 3), (1, 0), (2,))
    sign, w = mono_mul(u, v)
    assert sign == 1
    assert w == SuperMonomial((1, 3), (1, 2), (1, 2))


def test_apply_perm_examples():
    swap = (2, 1)
    f = SuperPoly.from_monomial(2, theta(2, 1, 2))
    assert apply_perm(swap, f) == f.scaled(-1)
    g = SuperPoly.from_monomial(2, SuperMonomial((1, 0), (0, 1), ()))  # x1*y2
    assert apply_perm(swap, g) == SuperPoly.from_monomial(
        2, SuperMonomial((0, 1), (1, 0), ())
    )


def test_generators_invariant_under_all_permutations():
    for n in range(1, 5):
        for _name, _deg, gen in ideal_generators(n):
            for sigma in all_permutations(n):
                assert apply_perm(sigma, gen) == gen


def test_generator_contents():
    assert str(gen_p(2, 1, 1)) == "x2*y2 + x1*y1"
    p = gen_ptilde(2, 0, 0)
    assert set(p.terms) == {theta(2, 1), theta(2, 2)}
    g = gen_p(3, 0, 2)
    assert set(g.terms) == {
        SuperMonomial((0, 0, 0), (2, 0, 0), ()),
        SuperMonomial((0, 0, 0), (0, 2, 0), ()),
        SuperMonomial((0, 0, 0), (0, 0, 2), ()),
    }


def test_generator_ranges():
    with pytest.raises(ValueError):
        gen_p(2, 0, 0)
    with pytest.raises(ValueError):
        gen_p(2, 2, 1)
    with pytest.raises(ValueError):
        gen_ptilde(2, 1, 1)
    gen_ptilde(2, 1, 0)


def test_generator_counts():
    for n in range(1, 6):
        gens = ideal_generators(n)
        p_count = sum(1 for name, _, _ in gens if name.startswith("p["))
        pt_count = sum(1 for name, _, _ in gens if name.startswith("pt["))
        assert p_count == (n + 1) * (n + 2) // 2 - 1
        assert pt_count == n * (n + 1) // 2


def test_enumerate_monomials_counts():
    for n in range(1, 5):
        for d in [(0, 0, 0), (1, 0, 1), (2, 1, 0), (1, 1, 2), (0, 3, 1)]:
            deg = TriDegree(*d)
            monos = enumerate_monomials(n, deg)
            a, b, c = d
            expected = (
                comb(a + n - 1, n - 1) * comb(b + n - 1, n - 1) * comb(n, c)
                if c <= n
                else 0
            )
            assert len(monos) == expected == component_dimension(n, deg)
            assert len(set(monos)) == len(monos)
            for m in monos:
                assert m.tri_degree() == deg


def test_enumerate_monomials_examples():
    monos = enumerate_monomials(2, TriDegree(1, 0, 1))
    assert set(monos) == {
        SuperMonomial((1, 0), (0, 0), (1,)),
        SuperMonomial((1, 0), (0, 0), (2,)),
        SuperMonomial((0, 1), (0, 0), (1,)),
        SuperMonomial((0, 1), (0, 0), (2,)),
    }
    assert enumerate_monomials(2, TriDegree(0, 0, 2)) == (theta(2, 1, 2),)
    assert enumerate_monomials(3, TriDegree(0, 0, 4)) == ()


def test_compositions_cover():
    assert list(compositions(2, 2)) == [(2, 0), (1, 1), (0, 2)]
    assert list(compositions(0, 0)) == [()]
    assert list(compositions(3, 1)) == [(3,)]


def test_multiplication_associative_and_supercommutative():
    rng = random.Random(20240)
    for n in (2, 3, 4):
        for _ in range(8):
            f, g, h = (random_poly(rng, n) for _ in range(3))
            assert (f * g) * h == f * (g * h)
    # supercommutativity on homogeneous theta degrees
    for n in (2, 3):
        for cf in range(n + 1):
            for cg in range(n + 1):
                f = SuperPoly(n, {m: 1 for m in enumerate_monomials(n, TriDegree(1, 0, cf))})
                g = SuperPoly(n, {m: 2 for m in enumerate_monomials(n, TriDegree(0, 1, cg))})
                sign = -1 if (cf * cg) % 2 else 1
                assert f * g == (g * f).scaled(sign)


def test_apply_perm_is_ring_homomorphism():
    rng = random.Random(99)
    for n in (2, 3, 4):
        perms = list(all_permutations(n))
        for _ in range(6):
            f, g = random_poly(rng, n), random_poly(rng, n)
            sigma = rng.choice(perms)
            tau = rng.choice(perms)
            assert apply_perm(sigma, f * g) == apply_perm(sigma, f) * apply_perm(sigma, g)
            assert apply_perm(compose(sigma, tau), f) == apply_perm(
                sigma, apply_perm(tau, f)
            )
            assert apply_perm(identity_perm(n), f) == f


def test_degree_and_str():
    m = SuperMonomial((2, 0), (0, 1), (1, 2))
    assert mono_str(m) == "x1^2*y2*t12"
    f = SuperPoly.from_monomial(2, m, 3)
    assert f.tri_degree() == TriDegree(2, 1, 2)
    mixed = f + SuperPoly.from_monomial(2, theta(2, 1))
    with pytest.raises(ValueError):
        mixed.tri_degree()
