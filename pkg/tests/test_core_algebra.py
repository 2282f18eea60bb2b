"""Word products, shift/transfer operators and the module structure."""

import random
from fractions import Fraction

import pytest

from twograph import (
    Degree,
    GradedElement,
    LevelMismatchError,
    ModuleVector,
    SpecMismatchError,
    check_covariance,
    flip_graph,
    identity_suite,
    random_two_graph,
    shift,
    transfer,
    twin_graph,
)


def words(graph, level):
    paths = graph.enumerate_paths(level)
    return [(mu, nu) for mu in paths for nu in paths]


# -- the word product -------------------------------------------------------------


def test_multiply_matching_inner_words():
    g = flip_graph(2, 2)
    x = GradedElement.word(g.blue_path(0), g.blue_path(0))
    y = GradedElement.word(g.blue_path(0), g.blue_path(1))
    assert x * y == y


def test_multiply_mismatch_is_zero():
    g = flip_graph(2, 2)
    x = GradedElement.word(g.blue_path(0), g.blue_path(0))
    y = GradedElement.word(g.blue_path(1), g.blue_path(1))
    assert (x * y).is_zero()


def test_multiply_prefix_absorption():
    g = twin_graph(2)
    x = GradedElement.word(g.blue_path(0), g.red_path(0))
    y = GradedElement.word(g.path("r0 b1"), g.blue_path(1))
    assert x * y == GradedElement.word(g.path("b0 b1"), g.blue_path(1))


def test_multiply_incomparable_degrees_uses_common_extensions():
    # s_f^* s_e is a genuine sum, not zero: the transfer semigroup law
    # below depends on it
    g = flip_graph(2, 2)
    x = GradedElement.word(g.empty_path(), g.red_path(0))
    y = GradedElement.word(g.blue_path(0), g.empty_path())
    product = x * y
    assert not product.is_zero()
    assert product == GradedElement.word(g.blue_path(0), g.red_path(0))


def test_multiply_rejects_other_graph():
    x = GradedElement.one(flip_graph(2, 2))
    y = GradedElement.one(twin_graph(2))
    with pytest.raises(SpecMismatchError):
        x * y


def test_scalars_and_linearity():
    g = flip_graph(2, 2)
    x = GradedElement.word(g.blue_path(0), g.blue_path(1))
    y = 2 * x - x
    assert y == x
    assert (Fraction(1, 2) * x + Fraction(1, 2) * x) == x
    assert not any(c == 0 for c in (x - x).terms.values())


# -- adjoint -----------------------------------------------------------------------


def test_adjoint_swaps_words():
    g = flip_graph(2, 2)
    x = GradedElement.word(g.blue_path(0), g.red_path(1))
    assert x.adjoint() == GradedElement.word(g.red_path(1), g.blue_path(0))


def test_adjoint_involution_and_zero():
    g = flip_graph(2, 2)
    zero = GradedElement.zero(g)
    assert zero.adjoint().is_zero()
    x = GradedElement.word(g.path("b0 r1"), g.blue_path(1), Fraction(3, 7))
    assert x.adjoint().adjoint() == x


def test_adjoint_antimultiplicative():
    rng = random.Random(13)
    g = random_two_graph(2, 2, rng)
    sample = words(g, Degree(1, 0)) + words(g, Degree(0, 1)) + words(g, Degree(1, 1))
    for _ in range(30):
        (m1, n1), (m2, n2) = rng.choice(sample), rng.choice(sample)
        x = GradedElement.word(m1, n1)
        y = GradedElement.word(m2, n2)
        assert (x * y).adjoint() == y.adjoint() * x.adjoint()


# -- shift endomorphisms ------------------------------------------------------------


def test_shift_is_unital_after_expansion():
    g = twin_graph(2)
    one = GradedElement.one(g)
    for n in ((1, 0), (0, 1), (1, 1), (2, 1)):
        assert shift(n, one) == one


def test_shift_zero_degree_is_identity():
    g = flip_graph(2, 2)
    x = GradedElement.word(g.blue_path(0), g.path("b1 r0"), Fraction(2, 3))
    assert shift((0, 0), x) == x


def test_shift_explicit_expansion():
    g = flip_graph(2, 2)
    x = GradedElement.word(g.blue_path(0), g.blue_path(0))
    expected = GradedElement(
        g,
        {
            (g.path("b0 b0"), g.path("b0 b0")): 1,
            (g.path("b1 b0"), g.path("b1 b0")): 1,
        },
    )
    got = shift((1, 0), x)
    assert got.terms == expected.terms


# -- transfer operators ---------------------------------------------------------------


def test_transfer_of_identity():
    g = twin_graph(2)
    one = GradedElement.one(g)
    for n in ((1, 0), (0, 1), (1, 1), (2, 2)):
        assert transfer(n, one) == one


def test_transfer_single_word():
    g = flip_graph(2, 2)
    x = GradedElement.word(g.blue_path(0), g.blue_path(0))
    assert transfer((1, 0), x) == Fraction(1, 2)


def test_transfer_zero_degree_is_identity():
    g = flip_graph(2, 2)
    x = GradedElement.word(g.path("b0 r1"), g.path("b1 r0"))
    assert transfer((0, 0), x) == x


def test_transfer_identity_sampled():
    rng = random.Random(19)
    g = random_two_graph(2, 2, rng)
    sample = words(g, Degree(1, 0)) + words(g, Degree(1, 1))
    for n in ((1, 0), (0, 1), (1, 1)):
        for _ in range(12):
            (m1, n1), (m2, n2) = rng.choice(sample), rng.choice(sample)
            a = GradedElement.word(m1, n1)
            b = GradedElement.word(m2, n2)
            assert transfer(n, shift(n, a) * b) == a * transfer(n, b)


def test_transfer_semigroup_mixed_degrees():
    # the (1,0)/(0,1) mix exercises incomparable-degree products
    g = flip_graph(2, 2)
    a = GradedElement.word(g.blue_path(0), g.blue_path(0))
    assert transfer((1, 0), transfer((0, 1), a)) == transfer((1, 1), a)
    assert transfer((0, 1), transfer((1, 0), a)) == transfer((1, 1), a)


def test_shift_multiplicative_in_degree():
    rng = random.Random(37)
    g = random_two_graph(2, 2, rng)
    for mu, nu in words(g, Degree(1, 0))[:4]:
        a = GradedElement.word(mu, nu)
        for m in ((1, 0), (0, 1)):
            for n in ((0, 1), (1, 1)):
                lhs = shift(m, shift(n, a))
                rhs = shift(Degree(*m) + Degree(*n), a)
                assert lhs == rhs


def test_transfer_commutes_with_adjoint():
    rng = random.Random(39)
    g = random_two_graph(2, 3, rng)
    sample = words(g, Degree(1, 1))
    for _ in range(10):
        mu, nu = rng.choice(sample)
        a = GradedElement.word(mu, nu, Fraction(5, 3))
        for n in ((1, 0), (0, 1)):
            assert transfer(n, a).adjoint() == transfer(n, a.adjoint())


def test_transfer_section_of_shift():
    rng = random.Random(23)
    g = random_two_graph(3, 2, rng)
    for (mu, nu) in words(g, Degree(1, 1))[:9]:
        a = GradedElement.word(mu, nu)
        for n in ((1, 0), (0, 1), (1, 1)):
            assert transfer(n, shift(n, a)) == a


# -- equality modulo expansion ----------------------------------------------------------


def test_identity_equals_its_expansion():
    g = flip_graph(2, 2)
    one = GradedElement.one(g)
    expansion = GradedElement(
        g, {(p, p): 1 for p in g.enumerate_paths((1, 1))}
    )
    assert one == expansion
    assert expansion == one


def test_partial_expansion_is_not_the_identity():
    g = flip_graph(2, 2)
    partial = GradedElement(
        g, {(p, p): 1 for p in g.enumerate_paths((1, 1))[:3]}
    )
    assert partial != GradedElement.one(g)


def test_expansion_equality_on_unbalanced_words():
    g = twin_graph(2)
    mu, nu = g.blue_path(0), g.path("b0 r1")
    x = GradedElement.word(mu, nu)
    expanded = GradedElement(
        g,
        {(mu * lam, nu * lam): 1 for lam in g.enumerate_paths((0, 1))},
    )
    assert x == expanded


# -- module vectors -----------------------------------------------------------------------


def test_inner_product_orthonormal():
    g = twin_graph(2)
    for level in ((1, 0), (1, 1)):
        paths = g.enumerate_paths(level)
        for mu in paths:
            for nu in paths:
                left = ModuleVector.basis(g, level, mu, nu)
                for al in paths:
                    for be in paths:
                        right = ModuleVector.basis(g, level, al, be)
                        expected = 1 if (mu, nu) == (al, be) else 0
                        assert left.inner(right) == expected


def test_inner_product_level_zero():
    g = flip_graph(2, 2)
    unit = ModuleVector.unit(g)
    assert unit.inner(unit) == 1


def test_inner_product_rejects_level_mismatch():
    g = flip_graph(2, 2)
    x = ModuleVector.basis(g, (1, 0), g.blue_path(0), g.blue_path(1))
    with pytest.raises(LevelMismatchError):
        x.inner(ModuleVector.unit(g))


def test_module_product_of_basis_vectors():
    rng = random.Random(29)
    g = random_two_graph(2, 2, rng)
    for m, n in (((1, 0), (0, 1)), ((1, 1), (1, 0)), ((0, 1), (0, 1))):
        for mu, nu in words(g, Degree(*m))[:4]:
            for al, be in words(g, Degree(*n))[:4]:
                left = ModuleVector.basis(g, m, mu, nu)
                right = ModuleVector.basis(g, n, al, be)
                expected = ModuleVector.basis(
                    g, Degree(*m) + Degree(*n), mu * al, nu * be
                )
                assert left * right == expected


def test_module_product_unit():
    g = twin_graph(2)
    x = ModuleVector.basis(g, (1, 1), g.path("b0 r1"), g.path("b1 r0"))
    assert x * ModuleVector.unit(g) == x
    assert ModuleVector.unit(g) * x == x


# -- covariance of the left action ------------------------------------------------------------


def test_covariance_all_pairs_level_one_one():
    g = twin_graph(2)
    for mu in g.enumerate_paths((1, 1)):
        for nu in g.enumerate_paths((1, 1)):
            assert check_covariance(mu, nu)


def test_covariance_survivor_term():
    # applying the word to a basis vector with matching first word
    # swaps it in; everything else dies
    g = flip_graph(2, 2)
    level = Degree(1, 0)
    mu, nu = g.blue_path(0), g.blue_path(1)
    word = GradedElement.word(mu, nu)
    for be in g.enumerate_paths(level):
        hit = ModuleVector.basis(g, level, nu, be)
        assert hit.left_mul(word) == ModuleVector.basis(g, level, mu, be)
        for al in g.enumerate_paths(level):
            if al == nu:
                continue
            miss = ModuleVector.basis(g, level, al, be)
            assert miss.left_mul(word) == ModuleVector(
                level, GradedElement.zero(g)
            )


def test_covariance_scalar_level():
    g = flip_graph(2, 2)
    empty = g.empty_path()
    assert check_covariance(empty, empty)


def test_covariance_rejects_unequal_degrees():
    g = flip_graph(2, 2)
    with pytest.raises(LevelMismatchError):
        check_covariance(g.blue_path(0), g.red_path(0))


# -- the full suite ------------------------------------------------------------------------------


def test_identity_suite_random_graph():
    rng = random.Random(31)
    g = random_two_graph(rng.randint(2, 3), rng.randint(2, 3), rng)
    checks = identity_suite(g, max_degree=(1, 1), seed=5)
    failed = [c for c in checks if not c.passed]
    assert not failed, failed
    names = {c.name for c in checks}
    assert "transfer-identity-generators" in names
    assert "cuntz-commutation" in names


def test_identity_suite_non_square_counts():
    checks = identity_suite(flip_graph(2, 3), max_degree=(1, 1), seed=2)
    failed = [c for c in checks if not c.passed]
    assert not failed, failed
    by_name = {c.name: c for c in checks}
    # doubled family has 4 blue and 9 red edges
    assert by_name["cuntz-commutation"].cases == 36


def test_identity_suite_deterministic_case_counts():
    g = flip_graph(2, 2)
    first = identity_suite(g, max_degree=(1, 1), seed=0)
    second = identity_suite(g, max_degree=(1, 1), seed=0)
    assert [(c.name, c.cases, c.passed) for c in first] == [
        (c.name, c.cases, c.passed) for c in second
    ]
