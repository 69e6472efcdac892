import pytest
from hypothesis import strategies as st

from invword.words import Letter, Word


def letters_over(names):
    return st.builds(
        Letter, st.sampled_from(list(names)), st.sampled_from([1, -1])
    )


def words_over(names, max_size=20):
    return st.builds(
        Word, st.lists(letters_over(names), max_size=max_size).map(tuple)
    )


@pytest.fixture
def pw():
    from invword.words import parse_word

    return parse_word
