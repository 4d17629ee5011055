"""Exact polynomial arithmetic: ring axioms, degrees, rendering."""

import random

from knotoids.laurent import (
    AffinePoly,
    ArrowMonomial,
    ArrowPoly,
    LaurentA,
    loop_value,
    writhe_normalize,
)


def random_laurent(rng, cls=LaurentA):
    return cls({rng.randint(-6, 6): rng.randint(-9, 9) for _ in range(rng.randint(0, 5))})


def test_additive_cancellation():
    assert (LaurentA({2: 1}) + LaurentA({2: -1})).is_zero()


def test_loop_value_square():
    d = loop_value()
    assert d * d == LaurentA({4: 1, 0: 2, -4: 1})


def test_ring_axioms_random():
    rng = random.Random(11)
    for _ in range(200):
        a, b, c = (random_laurent(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        assert (a + (-a)).is_zero()
        assert a * b == b * a


def test_writhe_normalize_units():
    assert writhe_normalize(LaurentA({3: -1}), 1) == LaurentA.one()
    assert writhe_normalize(LaurentA({-3: -1}), -1) == LaurentA.one()


def test_writhe_normalize_additive():
    rng = random.Random(12)
    for _ in range(100):
        p = random_laurent(rng)
        a, b = rng.randint(-4, 4), rng.randint(-4, 4)
        assert writhe_normalize(p, a + b) == writhe_normalize(writhe_normalize(p, a), b)


def test_max_degree():
    assert AffinePoly({2: 1, 1: 2, -1: 2, -2: 1, 0: -6}).max_degree() == 2
    assert AffinePoly.zero().max_degree() == 0
    assert AffinePoly({1: 1, -1: 1, 0: -2}).max_degree() == 1


def test_is_symmetric():
    assert AffinePoly({2: 1, 1: 2, -1: 2, -2: 1, 0: -6}).is_symmetric()
    assert not AffinePoly({2: 1, 0: -1}).is_symmetric()
    assert AffinePoly.zero().is_symmetric()


def test_symmetry_matches_substitution():
    rng = random.Random(13)
    for _ in range(100):
        p = random_laurent(rng, AffinePoly)
        assert p.is_symmetric() == (p == p.substitute_inverse())


def test_arrow_monomial_degrees():
    m = ArrowMonomial.build((2, 2, 2), (1,))
    assert m.k_degree() == 6
    assert m.lambda_degree() == 1
    assert ArrowMonomial().k_degree() == 0
    assert ArrowMonomial().lambda_degree() == 0


def test_arrow_poly_degrees_printed_example():
    poly = ArrowPoly(
        {
            ArrowMonomial(): LaurentA({6: 1}),
            ArrowMonomial.build((), (1,)): LaurentA({-4: -1, 4: 1}),
            ArrowMonomial.build((), (2,)): LaurentA({-2: -1, 2: 1}),
        }
    )
    assert poly.k_degree() == 0
    assert poly.lambda_degree() == 2


def test_arrow_poly_merge():
    lam = ArrowPoly({ArrowMonomial.build((), (1,)): LaurentA.one()})
    k = ArrowPoly({ArrowMonomial.build((1,), ()): LaurentA.one()})
    product = lam * k
    assert list(product.terms) == [ArrowMonomial(((1, 1),), (1,))]


def test_arrow_lambda_to_k_swap():
    poly = ArrowPoly(
        {
            ArrowMonomial.build((), (1,)): LaurentA.one(),
            ArrowMonomial.build((1,), ()): -LaurentA.one(),
        }
    )
    assert poly.substitute_lambda_with_k().is_zero()


def test_render_formats():
    assert AffinePoly({2: 1, 1: 2, -1: 2, -2: 1, 0: -6}).render() == "t^2+2t+2t^-1+t^-2-6"
    assert LaurentA({2: 1, 0: 1, -4: -1}).render() == "A^2+1-A^-4"
    assert LaurentA.zero().render() == "0"
    assert LaurentA({3: -1}).render() == "-A^3"
    assert ArrowPoly.one().render() == "1"


def test_json_rendering():
    p = LaurentA({2: 1, -4: -1})
    assert p.to_json() == {"-4": -1, "2": 1}
    arrow = ArrowPoly({ArrowMonomial.build((), (2,)): p})
    assert arrow.to_json() == [{"k": {}, "l": [2], "coeff": {"-4": -1, "2": 1}}]
