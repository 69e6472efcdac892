import json

import pytest
from hypothesis import given

from conftest import words_over
from invword.errors import ParseError
from invword.words import (
    EPSILON,
    Alphabet,
    Letter,
    Word,
    alphabet,
    formal_inverse,
    idempotent_word,
    is_idempotent_word,
    parse_word,
    prefixes,
    reduce,
    word,
)


class TestLetter:
    def test_inverse_flips_sign(self):
        assert Letter("a").inverse() == Letter("a", -1)
        assert Letter("a", -1).inverse() == Letter("a")

    @pytest.mark.parametrize("bad", ["", "a b", "x^y", "a-1", "a'", 'q"', "a,b", "é"])
    def test_rejects_bad_names(self, bad):
        with pytest.raises(ValueError):
            Letter(bad)

    def test_rejects_bad_sign(self):
        with pytest.raises(ValueError):
            Letter("a", 0)

    def test_str(self):
        assert str(Letter("a")) == "a"
        assert str(Letter("foo", -1)) == "foo^-1"


class TestParsing:
    def test_spaced_tokens(self):
        w = parse_word("a z A Z")
        assert [l.sign for l in w] == [1, 1, -1, -1]

    def test_caret_syntax(self):
        assert parse_word("a^-1 t^-1") == Word((Letter("a", -1), Letter("t", -1)))

    def test_contiguous_needs_single_char_alphabet(self):
        az = alphabet("a z")
        assert parse_word("azAZ", az) == parse_word("a z A Z")
        # without an alphabet a bare multi-char token is one name
        assert parse_word("az") == Word((Letter("az"),))

    def test_empty_and_one(self):
        assert parse_word("") == EPSILON
        assert parse_word("1") == EPSILON

    def test_unknown_generator(self):
        with pytest.raises(ParseError):
            parse_word("b", alphabet("a z"))

    def test_multichar_names(self):
        al = alphabet(["foo", "bar"])
        w = parse_word("foo bar^-1", al)
        assert str(w) == "foo bar^-1"

    def test_word_helper(self):
        assert word("a", "A") == parse_word("a A")

    def test_json_roundtrip(self):
        w = parse_word("a Z t")
        assert Word.from_json(json.loads(json.dumps(w.to_json()))) == w
        assert Word.from_json("a Z t") == w
        with pytest.raises(ParseError):
            Word.from_json([{"nope": 1}])


class TestAlphabet:
    def test_order_is_declaration_order(self):
        al = alphabet("z a t")
        assert al.names == ("z", "a", "t")
        assert al.index("a") == 1
        assert al.letter_key(Letter("z")) == 0
        assert al.letter_key(Letter("z", -1)) == 1
        assert al.letter_key(Letter("a")) == 2

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError):
            Alphabet(("a", "a"))

    def test_contains_and_len(self):
        al = alphabet("a z")
        assert "a" in al and "q" not in al and len(al) == 2


class TestReduce:
    def test_single_cancellation(self, pw):
        assert reduce(pw("a A z")) == pw("z")

    def test_identity_case(self):
        assert reduce(EPSILON) == EPSILON

    def test_already_reduced(self, pw):
        w = pw("a z a Z A z A Z")
        assert reduce(w) == w

    @given(words_over("az"))
    def test_idempotent_and_shrinking(self, w):
        r = reduce(w)
        assert reduce(r) == r
        assert len(r) <= len(w)
        for x, y in zip(r, r[1:]):
            assert not (x.name == y.name and x.sign == -y.sign)

    @given(words_over("azt"))
    def test_commutes_with_formal_inverse(self, w):
        assert formal_inverse(reduce(w)) == reduce(formal_inverse(w))


class TestFormalInverse:
    def test_two_letter_case(self, pw):
        assert formal_inverse(pw("a z")) == pw("Z A")

    def test_empty(self):
        assert formal_inverse(EPSILON) == EPSILON

    def test_inverse_letter(self, pw):
        assert formal_inverse(pw("A")) == pw("a")

    @given(words_over("az"))
    def test_involution(self, w):
        assert formal_inverse(formal_inverse(w)) == w


class TestPrefixes:
    def test_examples(self, pw):
        assert prefixes(pw("a b")) == [EPSILON, pw("a"), pw("a b")]
        assert prefixes(EPSILON) == [EPSILON]
        # prefixes are taken on the raw word, not its reduction
        assert prefixes(pw("a A")) == [EPSILON, pw("a"), pw("a A")]

    @given(words_over("az", max_size=12))
    def test_count_and_nesting(self, w):
        ps = prefixes(w)
        assert len(ps) == len(w) + 1
        for shorter, longer in zip(ps, ps[1:]):
            assert longer.letters[: len(shorter)] == shorter.letters


class TestIdempotentWords:
    def test_examples(self, pw):
        assert is_idempotent_word(pw("a A"))
        assert not is_idempotent_word(pw("a"))
        assert is_idempotent_word(pw("a A z Z"))

    def test_builder_examples(self, pw):
        assert idempotent_word([pw("a")]) == pw("a A")
        assert idempotent_word([pw("a"), pw("z")]) == pw("a A z Z")
        assert idempotent_word([pw("t a T")]) == pw("t a T t A T")

    def test_empty_list_rejected(self):
        with pytest.raises(ValueError):
            idempotent_word([])

    @given(words_over("az", max_size=6), words_over("az", max_size=6))
    def test_output_is_idempotent(self, u, v):
        assert is_idempotent_word(idempotent_word([u, v]))


class TestWordOps:
    def test_mul_pow_slice(self, pw):
        w = pw("a z")
        assert w * w == pw("a z a z")
        assert w**3 == pw("a z a z a z")
        assert w**-1 == pw("Z A")
        assert w[0] == Letter("a")
        assert w[1:] == pw("z")

    def test_str_forms(self, pw):
        assert str(EPSILON) == "1"
        assert str(pw("a Z")) == "a Z"
        al = alphabet(["foo"])
        assert str(parse_word("foo^-1", al)) == "foo^-1"
