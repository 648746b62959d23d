"""Stuffle and shuffle products of bi-brackets and the brackets deformed to respect them."""

import itertools
from fractions import Fraction

import pytest

from bibracket.arith import TruncatedQSeries
from bibracket.brackets import eval_bibracket, eval_lincomb
from bibracket.double_shuffle import (
    construction_F,
    construction_F_lincomb,
    eval_shuffle_bracket,
    eval_stuffle_bracket,
    length_one_shuffle,
    length_one_stuffle,
    mb_k1_reduction,
    mb_k1_via_product,
    shuffle_bracket,
    shuffle_bracket_numeric,
    shuffle_depth_three_combination,
    shuffle_mul,
    stuffle_bracket,
    stuffle_bracket_family,
    stuffle_mul,
)
from bibracket.exceptions import InvalidIndexError
from bibracket.relations import bracket_generators, express_in_basis
from bibracket.words import (
    BiWord,
    LinComb,
    bi_words,
    stuffle,
    xy_lincomb_to_z,
    xy_shuffle,
    z_to_xy,
    z_words,
)

PAIRS = [((2,), (2,)), ((2,), (3,)), ((3,), (2, 1)), ((2, 1), (2,))]


def test_stuffle_of_two_brackets(word):
    """Test [2] st [3] = [2,3] + [3,2] + [5] - 1/12 [3]."""
    expected = LinComb(
        {word([2, 3]): 1, word([3, 2]): 1, word([5]): 1, word([3]): Fraction(-1, 12)}
    )
    assert stuffle_mul(word([2]), word([3])) == expected


def test_shuffle_of_two_brackets(word):
    """Test [2] sh [3] = [2,3] + 3[3,2] + 6[4,1] - 3[4] + 3 mb{4}{1}."""
    expected = LinComb(
        {
            word([2, 3]): 1,
            word([3, 2]): 3,
            word([4, 1]): 6,
            word([4]): -3,
            word([4], [1]): 3,
        }
    )
    assert shuffle_mul(word([2]), word([3])) == expected


def test_both_products_give_the_series_product(word):
    """Test stuffle and shuffle expansions evaluate to the product of the factors."""
    for u, v in [([2], [3]), ([1], [1]), ([2, 1], [1]), ([3], [2])]:
        left, right = word(u), word(v)
        target = eval_bibracket(left, 18) * eval_bibracket(right, 18)
        assert eval_lincomb(stuffle_mul(left, right), 18) == target
        assert eval_lincomb(shuffle_mul(left, right), 18) == target


def test_products_of_bi_brackets(word):
    """Test the products with lower indices evaluate correctly."""
    left, right = word([2], [1]), word([1], [1])
    target = eval_bibracket(left, 18) * eval_bibracket(right, 18)
    assert eval_lincomb(stuffle_mul(left, right), 18) == target
    assert eval_lincomb(shuffle_mul(left, right), 18) == target


def test_length_one_closed_forms(word):
    """Test the closed length-one products against the general expansions."""
    for s1 in range(1, 4):
        for s2 in range(1, 4):
            for r1 in range(2):
                for r2 in range(2):
                    u, v = word([s1], [r1]), word([s2], [r2])
                    assert length_one_stuffle(s1, r1, s2, r2) == stuffle_mul(u, v)
                    assert length_one_shuffle(s1, r1, s2, r2) == shuffle_mul(u, v)


def test_double_shuffle_difference_vanishes(word):
    """Test u st v - u sh v evaluates to zero."""
    difference = stuffle_mul(word([3]), word([5])) - shuffle_mul(word([3]), word([5]))
    assert difference
    assert eval_lincomb(difference, 20).is_zero()


def test_stuffle_bracket_of_one_letter(word):
    """Test [s]^* = [s]."""
    assert stuffle_bracket((3,)) == LinComb.of(word([3]))
    assert stuffle_bracket(()) == LinComb.of(word([]))


def test_stuffle_bracket_is_a_stuffle_homomorphism():
    """Test [u * v]^* = [u]^* [v]^* on q-expansions."""
    for u, v in [((1,), (2,)), ((2, 1), (1,)), ((2,), (3,)), ((1, 1), (2,))]:
        product = eval_stuffle_bracket(LinComb.of(u), 16) * eval_stuffle_bracket(
            LinComb.of(v), 16
        )
        assert eval_stuffle_bracket(stuffle(u, v), 16) == product, (u, v)


def test_shuffle_bracket_is_a_shuffle_homomorphism():
    """Test [u sh v]^sh = [u]^sh [v]^sh on q-expansions."""
    for u, v in PAIRS:
        shuffled = xy_lincomb_to_z(xy_shuffle(z_to_xy(u), z_to_xy(v)))
        product = eval_shuffle_bracket(LinComb.of(u), 16) * eval_shuffle_bracket(
            LinComb.of(v), 16
        )
        assert eval_shuffle_bracket(shuffled, 16) == product, (u, v)


def test_shuffle_bracket_of_one_letter(word):
    """Test [s]^sh = [s]."""
    assert shuffle_bracket((4,)) == LinComb.of(word([4]))


def test_shuffle_bracket_paths_agree():
    """Test the symbolic and the tri-bracket constructions give the same series."""
    for k in range(1, 5):
        for w in z_words(k):
            symbolic = eval_lincomb(shuffle_bracket(w), 14)
            assert symbolic == shuffle_bracket_numeric(w, 14), w


def test_shuffle_bracket_debug_check(debug_mode):
    """Test the debug cross-check passes on a word with trailing ones."""
    assert shuffle_bracket((2, 1, 1))


def test_mb_k1_reductions(word):
    """Test both bracket expressions of mb{k}{1}."""
    for k in range(1, 7):
        target = eval_bibracket(word([k], [1]), 20)
        reduced = mb_k1_reduction(k)
        assert all(w.is_bracket() for w in reduced)
        assert eval_lincomb(reduced, 20) == target, k
        assert eval_lincomb(mb_k1_via_product(k), 20) == target, k


def test_mb_k1_needs_positive_k():
    """Test k = 0 is rejected."""
    with pytest.raises(InvalidIndexError):
        mb_k1_reduction(0)
    with pytest.raises(InvalidIndexError):
        mb_k1_via_product(0)


def test_depth_three_combination_lies_in_brackets():
    """Test 2[2,2,1]^sh + 2[2,1,2]^sh - mb{2,2}{1,0} is a combination of brackets."""
    combo = shuffle_depth_three_combination(2, 2)
    generators = [g for _, g in bracket_generators(5)]
    result = express_in_basis(combo, generators, precision=40)
    assert result is not None
    assert result.stable
    assert eval_lincomb(combo - result.combination, 40).is_zero()


def test_depth_three_combination_needs_s2_at_least_two():
    """Test s2 = 1 is rejected."""
    with pytest.raises(InvalidIndexError):
        shuffle_depth_three_combination(2, 1)


def test_construction_starts_at_zero():
    """Test F_w(1) = 0 for nonempty w and F_w(2) = f(w, 1)."""
    family = stuffle_bracket_family(12)
    one = TruncatedQSeries.one(12)
    assert construction_F(family, (2,), 1, one).is_zero()
    assert construction_F(family, (), 3, one) == one
    assert construction_F(family, (2, 1), 2, one) == family((2, 1), 1)


def test_construction_is_a_stuffle_homomorphism():
    """Test F_(u * v)(M) = F_u(M) F_v(M)."""
    family = stuffle_bracket_family(12)
    one = TruncatedQSeries.one(12)
    for u, v in [((2,), (1,)), ((2, 1), (3,))]:
        product = construction_F(family, u, 4, one) * construction_F(family, v, 4, one)
        assert construction_F_lincomb(family, stuffle(u, v), 4, one) == product, (u, v)


def test_construction_needs_positive_m():
    """Test M = 0 is rejected."""
    family = stuffle_bracket_family(8)
    with pytest.raises(InvalidIndexError):
        construction_F(family, (2,), 0, TruncatedQSeries.one(8))


@pytest.mark.parametrize("s1, s2", [(2, 2), (3, 2), (2, 3)])
def test_lower_weight_one_in_brackets(s1, s2):
    """Test mb{s1,s2}{1,0} is a combination of brackets of length <= 3."""
    target = LinComb.of(BiWord.from_indices([s1, s2], [1, 0]))
    generators = [g for _, g in bracket_generators(s1 + s2 + 1, max_depth=3)]
    result = express_in_basis(target, generators, precision=60)
    assert result is not None
    assert result.stable


@pytest.mark.parametrize(
    "indices, expected",
    [
        ((2, 1), {(2, 1): 1, (2,): Fraction(-1, 4)}),
        ((2, 2), {(2, 2): 1, (2,): Fraction(-1, 12)}),
        (
            (2, 1, 1),
            {
                (2, 1, 1): 1,
                (2, 1): Fraction(-3, 4),
                (2,): Fraction(11, 144),
                (3,): Fraction(-1, 24),
            },
        ),
    ],
)
def test_stuffle_bracket_examples(word, indices, expected):
    """Test explicit stuffle brackets in terms of brackets."""
    assert stuffle_bracket(indices) == LinComb({word(list(s)): c for s, c in expected.items()})


def test_stuffle_bracket_product_of_one_and_two_one():
    """Test [1][2,1]^* = [1,2,1]^* + 2[2,1,1]^* + [3,1]^* + [2,2]^*."""
    expansion = LinComb({(1, 2, 1): 1, (2, 1, 1): 2, (3, 1): 1, (2, 2): 1})
    assert stuffle((1,), (2, 1)) == expansion
    product = eval_bibracket(BiWord.from_indices([1]), 20) * eval_stuffle_bracket(
        LinComb.of((2, 1)), 20
    )
    assert eval_stuffle_bracket(expansion, 20) == product


def explicit_shuffle_bracket(indices):
    """[s_1, ..., s_l]^sh for l <= 4 written out term by term."""

    def b(upper, lower=None, c=1):
        return LinComb.of(BiWord.from_indices(upper, lower), c)

    def when(*parts):
        return all(p == 1 for p in parts)

    half, quarter, sixth = Fraction(1, 2), Fraction(1, 4), Fraction(1, 6)
    combo = b(indices)
    if len(indices) == 2:
        s1, s2 = indices
        if when(s2):
            combo += (b([s1], [1]) - b([s1])).scale(half)
    elif len(indices) == 3:
        s1, s2, s3 = indices
        if when(s3):
            combo += (b([s1, s2], [0, 1]) - b([s1, s2])).scale(half)
        if when(s2):
            combo += (b([s1, s3], [1, 0]) - b([s1, s3], [0, 1]) - b([s1, s3])).scale(half)
        if when(s2, s3):
            combo += (b([s1], [2]) - b([s1], [1], 3 * half) + b([s1])).scale(sixth)
    elif len(indices) == 4:
        s1, s2, s3, s4 = indices
        if when(s4):
            combo += (b([s1, s2, s3], [0, 0, 1]) - b([s1, s2, s3])).scale(half)
        if when(s3):
            terms = b([s1, s2, s4], [0, 1, 0]) - b([s1, s2, s4], [0, 0, 1]) - b([s1, s2, s4])
            combo += terms.scale(half)
        if when(s2):
            terms = b([s1, s3, s4], [1, 0, 0]) - b([s1, s3, s4], [0, 1, 0]) - b([s1, s3, s4])
            combo += terms.scale(half)
        if when(s2, s4):
            terms = b([s1, s3], [1, 1]) - b([s1, s3], [0, 2], 2) - b([s1, s3], [1, 0]) + b([s1, s3])
            combo += terms.scale(quarter)
        if when(s3, s4):
            terms = b([s1, s2], [0, 2]) - b([s1, s2], [0, 1], 3 * half) + b([s1, s2])
            combo += terms.scale(sixth)
        if when(s2, s3):
            terms = (
                b([s1, s4], [0, 2])
                - b([s1, s4], [1, 1])
                + b([s1, s4], [0, 1], 3 * half)
                + b([s1, s4], [2, 0])
                - b([s1, s4], [1, 0], 3 * half)
                + b([s1, s4])
            )
            combo += terms.scale(sixth)
        if when(s2, s3, s4):
            terms = b([s1], [3]) - b([s1], [2], 2) + b([s1], [1], Fraction(11, 6)) - b([s1])
            combo += terms.scale(Fraction(1, 24))
    return combo


SHUFFLE_INDICES = (
    [w for n in (2, 3) for w in itertools.product((1, 2, 3), repeat=n)]
    + list(itertools.product((1, 2), repeat=4))
    + [(3, 1, 1, 1), (3, 2, 1, 1), (2, 3, 1, 1), (3, 1, 2, 1)]
)


@pytest.mark.parametrize("indices", SHUFFLE_INDICES)
def test_shuffle_bracket_explicit_forms(indices):
    """Test shuffle brackets of length two to four against their written-out expansions."""
    assert shuffle_bracket(indices) == explicit_shuffle_bracket(indices)


@pytest.mark.slow
def test_products_of_bi_brackets_up_to_weight_eight():
    """Test both products for every pair of bi-words of combined weight <= 8."""
    words = {k: bi_words(k) for k in range(1, 8)}
    for a in range(1, 8):
        for b in range(a, 9 - a):
            for i, u in enumerate(words[a]):
                for v in words[b][i if a == b else 0 :]:
                    target = eval_bibracket(u, 40) * eval_bibracket(v, 40)
                    assert eval_lincomb(stuffle_mul(u, v), 40) == target, (u, v)
                    assert eval_lincomb(shuffle_mul(u, v), 40) == target, (u, v)


def z_word_pairs(max_weight):
    """Pairs of z-words of combined weight <= max_weight."""
    for a in range(1, max_weight):
        for b in range(1, max_weight - a + 1):
            for u in z_words(a):
                for v in z_words(b):
                    yield u, v


@pytest.mark.slow
def test_bracket_homomorphisms_up_to_weight_seven():
    """Test [u * v]^* = [u]^*[v]^* and [u sh v]^sh = [u]^sh[v]^sh up to weight 7."""
    for u, v in z_word_pairs(7):
        left, right = LinComb.of(u), LinComb.of(v)
        product = eval_stuffle_bracket(left, 40) * eval_stuffle_bracket(right, 40)
        assert eval_stuffle_bracket(stuffle(u, v), 40) == product, (u, v)
        shuffled = xy_lincomb_to_z(xy_shuffle(z_to_xy(u), z_to_xy(v)))
        product = eval_shuffle_bracket(left, 40) * eval_shuffle_bracket(right, 40)
        assert eval_shuffle_bracket(shuffled, 40) == product, (u, v)


@pytest.mark.slow
def test_shuffle_bracket_paths_agree_up_to_weight_seven():
    """Test the symbolic and the tri-bracket constructions for every z-word of weight <= 7."""
    for k in range(1, 8):
        for w in z_words(k):
            symbolic = eval_lincomb(shuffle_bracket(w), 20)
            assert symbolic == shuffle_bracket_numeric(w, 20), w


def test_construction_length_two(word):
    """Test F_(s1,s2)(M) = sum f_(s1,s2)(m) + sum_(m1 < m2) f_s1(m1) f_s2(m2)."""
    family = stuffle_bracket_family(30)
    one = TruncatedQSeries.one(30)
    zero = one - one
    for s1, s2 in [(2, 1), (1, 3), (2, 2)]:
        for M in range(1, 6):
            expected = zero
            for m2 in range(1, M):
                expected = expected + family((s1, s2), m2)
                for m1 in range(1, m2):
                    expected = expected + family((s1,), m1) * family((s2,), m2)
            assert construction_F(family, (s1, s2), M, one) == expected, (s1, s2, M)
            product = construction_F(family, (s1,), M, one) * construction_F(
                family, (s2,), M, one
            )
            combined = LinComb({(s1, s2): 1, (s2, s1): 1, (s1 + s2,): 1})
            assert construction_F_lincomb(family, combined, M, one) == product


@pytest.mark.slow
def test_construction_is_a_stuffle_homomorphism_up_to_weight_five():
    """Test F_(u * v)(M) = F_u(M) F_v(M) for combined weight <= 5 and M <= 5."""
    family = stuffle_bracket_family(30)
    one = TruncatedQSeries.one(30)
    for u, v in z_word_pairs(5):
        for M in range(1, 6):
            product = construction_F(family, u, M, one) * construction_F(family, v, M, one)
            assert construction_F_lincomb(family, stuffle(u, v), M, one) == product, (u, v, M)
