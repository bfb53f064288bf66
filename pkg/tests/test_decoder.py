import pytest

from ncalg.errors import DecodeError
from constants.brackets import BracketedWord, T1Pow, XPow, boxed, symbolic_leading_monomial
from constants.decoder import decode
from constants.generators import enumerate_generators


@pytest.mark.parametrize(
    "word, m, expected",
    [
        ("YYXX", 1, "{T1}"),
        ("YYXYXX", 1, "{T1^2}"),
        ("YYYXXX", 1, "{{T1}}"),
        ("YYXXX", 2, "{T1}"),
        ("YYXXYXXX", 2, "{T1 X T1}"),
        ("YYYXXXXX", 2, "{{T1}}"),
    ],
)
def test_decode_examples(word, m, expected):
    assert str(decode(word, m)) == expected


def test_decode_keeps_x_runs_inside_boxes():
    assert decode("YYXXYXXXX", 3) == boxed(T1Pow(1), XPow(1), T1Pow(1))
    assert decode("YYXXXYXXXX", 3) == boxed(T1Pow(1), XPow(2), T1Pow(1))


@pytest.mark.parametrize("word", ["YX", "XY", "YYYXX", "YXX", "", "YYXXYX", "YXYYXX"])
def test_rejects_non_generator_words(word):
    with pytest.raises(DecodeError, match="not a generator leading monomial"):
        decode(word, 1)


def test_rejects_bad_alphabet_and_m():
    with pytest.raises(ValueError):
        decode("YYZX", 1)
    with pytest.raises(DecodeError):
        decode("YYXX", 0)


@pytest.mark.parametrize("m, weight_max", [(1, 10), (2, 12), (3, 13)])
def test_every_boxed_generator_round_trips(m, weight_max):
    f = [0] * m + [1]
    table = enumerate_generators(m, f, weight_max)
    boxed_entries = [e for e in table.entries if e.bracketed.is_boxed()]
    assert boxed_entries
    for entry in boxed_entries:
        assert decode(entry.lm, m) == entry.bracketed
        assert symbolic_leading_monomial(entry.bracketed, m) == entry.lm


def test_unboxed_words_are_not_decoded():
    assert symbolic_leading_monomial(BracketedWord.of(T1Pow(2)), 1) == "YXYX"
    with pytest.raises(DecodeError):
        decode("YXYX", 1)
