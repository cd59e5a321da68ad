"""Codes over Z/dZ: distributions, equivalence, classification, bounds."""

import random
from fractions import Fraction

import pytest

from latquot.codes import (
    Code,
    WeightDistribution,
    c8,
    c9,
    c10,
    c11,
    canonical_form,
    classify_binary,
    code_qb_bound,
    dump_code_text,
    equivalent,
    g12,
    min_weight_support,
    parse_code_text,
    repetition,
    weight_distribution,
)
from latquot.errors import CodeTooLight, ParseError, ResourceExceeded


def test_code_validation():
    with pytest.raises(ValueError):
        Code(d=2, n=3, k=2, gen=((1, 1, 0),))
    with pytest.raises(ValueError):
        Code(d=2, n=2, k=3, gen=((1, 0), (0, 1), (1, 1)))
    # duplicate rows span a group of order 2, not 4
    with pytest.raises(ValueError):
        Code(d=2, n=3, k=2, gen=((1, 1, 0), (1, 1, 0)))
    # a row of even entries has order 2 modulo 4
    with pytest.raises(ValueError):
        Code(d=4, n=2, k=1, gen=((2, 0),))


def test_words():
    assert set(Code(d=2, n=3, k=1, gen=((1, 1, 0),)).words()) == {
        (0, 0, 0),
        (1, 1, 0),
    }
    assert set(Code(d=4, n=2, k=1, gen=((1, 2),)).words()) == {
        (0, 0),
        (1, 2),
        (2, 0),
        (3, 2),
    }


def test_masks():
    assert c8().masks() == (0b00011111, 0b11111000)
    with pytest.raises(ValueError):
        Code(d=3, n=2, k=1, gen=((1, 1),)).masks()


def test_weight_distribution_formatting():
    dist = WeightDistribution.from_dict({6: 1, 5: 2})
    assert str(dist) == "5^2·6"
    assert dist.total == 3
    assert dist.as_dict() == {5: 2, 6: 1}


def test_distributions_of_the_named_codes():
    expected = {
        "c8": (c8, "5^2·6"),
        "c9": (c9, "6^3"),
        "c10": (c10, "6·7^2"),
        "c11": (c11, "6^6·8"),
        "g12": (g12, "6^12·8^3"),
    }
    for make, dist in expected.values():
        assert str(weight_distribution(make())) == dist


def test_min_weight_support():
    assert min_weight_support(c8()) == (5, 8, True)
    assert min_weight_support(repetition(5)) == (5, 5, True)
    assert min_weight_support(Code(d=2, n=4, k=1, gen=((1, 1, 1, 0),))) == (
        3,
        3,
        False,
    )


def test_equivalence_under_column_shuffles():
    rand = random.Random(51)
    base = c11()
    for _ in range(10):
        perm = list(range(base.n))
        rand.shuffle(perm)
        shuffled = Code(
            d=2,
            n=base.n,
            k=base.k,
            gen=tuple(tuple(row[p] for p in perm) for row in base.gen),
        )
        assert canonical_form(shuffled) == canonical_form(base)
        assert equivalent(shuffled, base)


def test_equivalence_under_row_operations():
    a = c9()
    b = Code(
        d=2,
        n=9,
        k=2,
        gen=(a.gen[0], tuple((x + y) % 2 for x, y in zip(a.gen[0], a.gen[1]))),
    )
    assert equivalent(a, b)


def test_inequivalent_codes_with_equal_parameters():
    first, second = classify_binary(7, 2, 4)
    assert not equivalent(first, second)
    assert {str(weight_distribution(c)) for c in (first, second)} == {
        "4^2·6",
        "4·5^2",
    }


def test_classification_counts_and_distributions():
    cases = {
        (6, 2, 4): ["4^3"],
        (8, 2, 5): ["5^2·6"],
        (9, 2, 5): ["5^2·8", "5·6·7", "6^3"],
        (10, 2, 5): ["5^2·10", "5·6·9", "5·7·8", "6^2·8", "6·7^2"],
    }
    for (n, k, w), dists in cases.items():
        reps = classify_binary(n, k, w)
        assert sorted(str(weight_distribution(r)) for r in reps) == dists
        for rep in reps:
            assert min_weight_support(rep)[2]


def test_classification_respects_the_budget():
    with pytest.raises(ResourceExceeded):
        classify_binary(10, 2, 5, budget=10)
    with pytest.raises(ValueError):
        classify_binary(13, 2, 5)


def test_basis_product_bounds():
    assert code_qb_bound(c8()) == Fraction(25, 16)
    assert code_qb_bound(c9()) == Fraction(9, 4)
    assert code_qb_bound(c10()) == Fraction(21, 8)
    assert code_qb_bound(c11()) == Fraction(27, 8)
    assert code_qb_bound(g12()) == Fraction(81, 16)
    with pytest.raises(CodeTooLight):
        code_qb_bound(repetition(3))


def test_text_round_trip():
    for code in (c8(), c11(), Code(d=4, n=3, k=1, gen=((1, 2, 3),))):
        again = parse_code_text(dump_code_text(code))
        assert again == code


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_code_text("")
    with pytest.raises(ParseError):
        parse_code_text("2 4\n1111\n")
    with pytest.raises(ParseError):
        parse_code_text("2 4 2\n1111\n")
    with pytest.raises(ParseError):
        parse_code_text("2 4 1\n111\n")
