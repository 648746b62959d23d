"""Word algebra tests: letters, quasi-shuffles, Hoffman maps and the text syntax."""

from fractions import Fraction
from itertools import product

import pytest

from bibracket.exceptions import InvalidIndexError, NotInZAlphabetError, WordSyntaxError
from bibracket.words import (
    BI_STUFFLE,
    SHUFFLE,
    Z_STUFFLE,
    BiLetter,
    BiWord,
    LinComb,
    bi_words,
    compositions,
    deconcat_coproduct,
    diamond_bi,
    diamond_extend,
    ds,
    embed_z_word,
    format_lincomb,
    format_word,
    hoffman_exp,
    hoffman_exp_lincomb,
    hoffman_log,
    hoffman_log_lincomb,
    iterated_coproduct,
    parse_indices,
    parse_lincomb,
    parse_word,
    quasi_shuffle,
    quasi_shuffle_lincomb,
    reverse_word,
    stuffle,
    word_weight,
    xy_shuffle,
    xy_to_z,
    z_to_xy,
    z_words,
)


def z(*indices):
    return embed_z_word(indices)


def letter(s, r=0):
    return LinComb.of(BiWord((BiLetter(s, r),)))


def test_biletter_validation():
    """Test bi-letters need s >= 1 and r >= 0."""
    with pytest.raises(InvalidIndexError):
        BiLetter(0, 0)
    with pytest.raises(InvalidIndexError):
        BiLetter(1, -1)


def test_biword_gradings(word):
    """Test weight, upper and lower weight and depth."""
    w = word([3, 2], [1, 0])
    assert (w.weight, w.upper_weight, w.lower_weight, w.depth) == (6, 5, 1, 2)
    assert not w.is_bracket()
    assert word([3, 2]).is_bracket()
    assert isinstance(w[1:], BiWord)


def test_lincomb_drops_zero_terms(word):
    """Test zero coefficients are never stored and equality is term-wise."""
    a = LinComb({word([2]): 1, word([3]): 0})
    assert len(a) == 1
    assert a - a == 0
    assert a + a == a.scale(2)
    assert a.scale(0) == LinComb()


def test_diamond_two_three():
    """Test z_(2,0) <> z_(3,0) = z_(5,0) - 1/12 z_(3,0)."""
    assert diamond_bi(BiLetter(2), BiLetter(3)) == letter(5) - letter(3).scale(Fraction(1, 12))


def test_diamond_one_one():
    """Test z_(1,0) <> z_(1,0) = z_(2,0) - z_(1,0)."""
    assert diamond_bi(BiLetter(1), BiLetter(1)) == letter(2) - letter(1)


def test_diamond_lower_binomial():
    """Test the lower indices add up with a binomial prefactor."""
    result = diamond_bi(BiLetter(1, 1), BiLetter(1, 1))
    # binom(2, 1) (z_(2,2) - z_(1,2))
    assert result == letter(2, 2).scale(2) - letter(1, 2).scale(2)


def test_diamond_associative():
    """Test the bi-letter product is associative on letters of small weight."""
    letters = [BiLetter(s, r) for s in range(1, 4) for r in range(0, 2)]
    for a, b, c in product(letters, repeat=3):
        la, lb, lc = (LinComb.of(BiWord((x,))) for x in (a, b, c))
        left = diamond_extend(diamond_extend(la, lb, BI_STUFFLE), lc, BI_STUFFLE)
        right = diamond_extend(la, diamond_extend(lb, lc, BI_STUFFLE), BI_STUFFLE)
        assert left == right, (a, b, c)


def test_bi_stuffle_two_three():
    """Test [2] * [3] = [2,3] + [3,2] + [5] - 1/12 [3] on words."""
    expected = LinComb(
        {z(2, 3): 1, z(3, 2): 1, z(5): 1, z(3): Fraction(-1, 12)}
    )
    assert quasi_shuffle(z(2), z(3), BI_STUFFLE) == expected


def test_quasi_shuffle_base_cases():
    """Test the shuffle and stuffle on single letters."""
    assert quasi_shuffle((2,), (3,), SHUFFLE) == LinComb({(2, 3): 1, (3, 2): 1})
    assert stuffle((2,), (3,)) == LinComb({(2, 3): 1, (3, 2): 1, (5,): 1})
    assert stuffle((), (4, 1)) == LinComb.of((4, 1))


def test_quasi_shuffle_commutative_associative():
    """Test commutativity and associativity of all diamonds on small words."""
    words = [w for k in range(1, 4) for w in z_words(k)]
    for u, v in product(words, repeat=2):
        assert stuffle(u, v) == stuffle(v, u)
    for u, v, w in product(words[:5], repeat=3):
        for diamond in (Z_STUFFLE, SHUFFLE):
            left = quasi_shuffle_lincomb(quasi_shuffle(u, v, diamond), LinComb.of(w), diamond)
            right = quasi_shuffle_lincomb(LinComb.of(u), quasi_shuffle(v, w, diamond), diamond)
            assert left == right
    bw = [z(1), z(2), z(1, 1), BiWord.from_indices([1], [1])]
    for u, v, w in product(bw, repeat=3):
        left = quasi_shuffle_lincomb(quasi_shuffle(u, v, BI_STUFFLE), LinComb.of(w), BI_STUFFLE)
        right = quasi_shuffle_lincomb(LinComb.of(u), quasi_shuffle(v, w, BI_STUFFLE), BI_STUFFLE)
        assert left == right


def test_quasi_shuffle_preserves_weight():
    """Test the stuffle is graded and the bi-stuffle filtered by weight."""
    for u, v in product(bi_words(2), bi_words(3)):
        product_terms = quasi_shuffle(u, v, BI_STUFFLE)
        assert all(w.weight <= 5 for w in product_terms)
        assert any(w.weight == 5 for w in product_terms)
    assert all(sum(w) == 5 for w in stuffle((2, 1), (1, 1)))


def test_xy_shuffle():
    """Test xy sh xy = 2 xyxy + 4 xxyy and the interleaving count."""
    assert xy_shuffle("xy", "xy") == LinComb({"xyxy": 2, "xxyy": 4})
    assert xy_shuffle("", "xyy") == LinComb.of("xyy")
    total = sum(xy_shuffle("xxy", "yx").coefficient(w) for w in xy_shuffle("xxy", "yx"))
    assert total == 10


def test_xy_conversions():
    """Test z_j = x^(j-1) y and the reversed convention z_j = y x^(j-1)."""
    assert z_to_xy((3, 1)) == "xxyy"
    assert xy_to_z("xxyy") == (3, 1)
    assert z_to_xy((3, 1), reverse=True) == "yxxy"
    assert xy_to_z("yxxy", reverse=True) == (3, 1)
    with pytest.raises(NotInZAlphabetError):
        xy_to_z("xyx")
    with pytest.raises(NotInZAlphabetError):
        xy_to_z("xy", reverse=True)


def test_hoffman_log_two_letters():
    """Test log of z_a z_b = z_a z_b - 1/2 z_(a+b)."""
    assert hoffman_log((2, 3), Z_STUFFLE) == LinComb({(2, 3): 1, (5,): Fraction(-1, 2)})
    assert hoffman_exp((4,), Z_STUFFLE) == LinComb.of((4,))


def test_hoffman_inverse_pair():
    """Test exp o log = id = log o exp on z-words of weight <= 6."""
    for k in range(1, 7):
        for w in z_words(k):
            one = LinComb.of(w)
            assert hoffman_exp_lincomb(hoffman_log(w, Z_STUFFLE), Z_STUFFLE) == one
            assert hoffman_log_lincomb(hoffman_exp(w, Z_STUFFLE), Z_STUFFLE) == one


def test_hoffman_exp_is_isomorphism():
    """Test exp(u sh v) = exp(u) * exp(v) for the stuffle and the bi-stuffle."""
    pairs = [((2,), (1, 3)), ((1, 1), (2,)), ((2, 1), (1, 2))]
    for u, v in pairs:
        shuffled = quasi_shuffle(u, v, SHUFFLE)
        left = hoffman_exp_lincomb(shuffled, Z_STUFFLE)
        right = quasi_shuffle_lincomb(
            hoffman_exp(u, Z_STUFFLE), hoffman_exp(v, Z_STUFFLE), Z_STUFFLE
        )
        assert left == right
    u, v = z(2), z(1, 1)
    left = hoffman_exp_lincomb(quasi_shuffle(u, v, SHUFFLE), BI_STUFFLE)
    right = quasi_shuffle_lincomb(
        hoffman_exp(u, BI_STUFFLE), hoffman_exp(v, BI_STUFFLE), BI_STUFFLE
    )
    assert left == right


def test_deconcat_coproduct():
    """Test all splittings of a word, and coassociativity."""
    assert deconcat_coproduct((2, 5)) == [((), (2, 5)), ((2,), (5,)), ((2, 5), ())]
    assert deconcat_coproduct(()) == [((), ())]
    for w in [(1,), (1, 2), (3, 1, 2), (1, 1, 2, 2)]:
        left = sorted(
            (a, b, c) for a, rest in deconcat_coproduct(w) for b, c in deconcat_coproduct(rest)
        )
        right = sorted(
            (a, b, c) for head, c in deconcat_coproduct(w) for a, b in deconcat_coproduct(head)
        )
        assert left == right == sorted(iterated_coproduct(w))


def test_ds_examples():
    """Test ds(z_2, z_2) = 4 z_3 z_1 - z_4, the unit and symmetry."""
    assert ds((2,), (2,)) == LinComb({(3, 1): 4, (4,): -1})
    assert ds("xy", "xy") == ds((2,), (2,))
    assert ds((2,), ()) == 0
    assert ds((2, 1), (3,)) == ds((3,), (2, 1))


def test_ds_reversal():
    """Test ds in the reversed convention is the reversal of ds."""
    for u, v in [((2,), (3,)), ((2, 1), (2,)), ((3,), (1, 2))]:
        reversed_ds = ds(reverse_word(u), reverse_word(v), reverse=True)
        assert reversed_ds == ds(u, v).map_words(reverse_word)


def test_enumerators():
    """Test compositions, z-words and bi-words in canonical order."""
    assert list(compositions(3)) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    assert z_words(4, min_first=2) == [(4,), (2, 2), (3, 1), (2, 1, 1)]
    assert len(z_words(6, min_first=2)) == 2 ** 4
    # bi-words of weight 2: [2], [1|1], [1,1]
    assert [format_word(w) for w in bi_words(2)] == ["[1 | 1]", "[2]", "[1,1]"]
    assert word_weight("xyy") == 3


def test_word_syntax_round_trip(word):
    """Test parse and print are inverse on words and combinations."""
    assert parse_word("[3,2,2]") == word([3, 2, 2])
    assert parse_word("[3,2,2 | 0,0,0]") == word([3, 2, 2])
    assert parse_word("[2,1 | 1,0]") == word([2, 1], [1, 0])
    for text in ["-1/40 * [2] + [4]", "3 * [2,1 | 1,0] + [5]", "1/2 - [1]", "0"]:
        assert format_lincomb(parse_lincomb(text)) == text


def test_word_syntax_errors():
    """Test malformed text raises WordSyntaxError."""
    for text in ["[2,", "2,1]", "[2 | 1,0]", "[0]", "[2] + "]:
        with pytest.raises(WordSyntaxError):
            parse_lincomb(text)
    assert parse_indices("2,1,1") == parse_indices("[2,1,1]") == (2, 1, 1)
    with pytest.raises(WordSyntaxError):
        parse_indices("2,0")


def test_zero_denominator_is_a_syntax_error():
    """Test a coefficient with denominator 0 raises WordSyntaxError."""
    for text in ["1/0 * [2]", "[2] - 3/00", "1/0"]:
        with pytest.raises(WordSyntaxError, match="zero denominator"):
            parse_lincomb(text)
    assert parse_lincomb("0/3 * [2]") == parse_lincomb("0")
