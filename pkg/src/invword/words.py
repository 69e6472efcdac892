"""Alphabets and words over a symmetrised generating set.

A word is a finite sequence of letters; each letter pairs a generator
name with a sign, so the generating set is implicitly closed under
formal inverses.  Everything here is immutable, hashable and pure, and
words are *raw* sequences: nothing cancels unless you call
:func:`reduce`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import ParseError

_RESERVED = set("^-'\",")


def _valid_name(name: str) -> bool:
    if not name or not name.isascii():
        return False
    return not any(ch.isspace() or ch in _RESERVED for ch in name)


@dataclass(frozen=True)
class Letter:
    """A generator name together with a sign (+1 or -1)."""

    name: str
    sign: int = 1

    def __post_init__(self) -> None:
        if not _valid_name(self.name):
            raise ValueError(f"bad letter name {self.name!r}")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")

    def inverse(self) -> "Letter":
        return Letter(self.name, -self.sign)

    def __str__(self) -> str:
        return self.name if self.sign == 1 else f"{self.name}^-1"


@dataclass(frozen=True)
class Word:
    """An immutable sequence of letters.

    >>> w = parse_word("a A z")
    >>> len(w), str(w)
    (3, 'a A z')
    >>> str(w * w.inverse())
    'a A z Z a A'
    """

    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", tuple(self.letters))

    # -- sequence protocol -------------------------------------------------
    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __getitem__(self, item):
        if isinstance(item, slice):
            return Word(self.letters[item])
        return self.letters[item]

    def __bool__(self) -> bool:
        return bool(self.letters)

    # -- free-monoid operations --------------------------------------------
    def __mul__(self, other: "Word | Letter") -> "Word":
        if isinstance(other, Letter):
            return Word(self.letters + (other,))
        return Word(self.letters + other.letters)

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return self.inverse() ** (-n)
        return Word(self.letters * n)

    def inverse(self) -> "Word":
        """Reverse the word and flip every sign."""
        return Word(tuple(l.inverse() for l in reversed(self.letters)))

    @property
    def is_empty(self) -> bool:
        return not self.letters

    def names(self) -> set[str]:
        """The set of generator names occurring in the word."""
        return {l.name for l in self.letters}

    # -- text and JSON -----------------------------------------------------
    def __str__(self) -> str:
        if not self.letters:
            return "1"
        if all(len(l.name) == 1 and l.name.islower() for l in self.letters):
            return " ".join(
                l.name if l.sign == 1 else l.name.upper() for l in self.letters
            )
        return " ".join(str(l) for l in self.letters)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def to_json(self) -> list[dict]:
        return [{"name": l.name, "sign": l.sign} for l in self.letters]

    @classmethod
    def from_json(cls, data) -> "Word":
        if isinstance(data, str):
            return parse_word(data)
        try:
            return cls(tuple(Letter(d["name"], d["sign"]) for d in data))
        except (TypeError, KeyError, ValueError) as exc:
            raise ParseError(f"bad word JSON: {data!r}") from exc


EPSILON = Word(())


def word(*items: str) -> Word:
    """Convenience constructor: ``word("a", "a^-1", "z")``."""
    return Word(tuple(_parse_token(tok, None) for tok in items))


@dataclass(frozen=True)
class Alphabet:
    """A finite ordered set of generator names.

    Declaration order is the canonical order used for every
    deterministic tie-break downstream (vertex numbering, normal-form
    comparisons, generator listings).
    """

    names: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "names", tuple(self.names))
        seen = set()
        for n in self.names:
            if not _valid_name(n):
                raise ValueError(f"bad generator name {n!r}")
            if n in seen:
                raise ValueError(f"duplicate generator name {n!r}")
            seen.add(n)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {n: i for i, n in enumerate(self.names)}

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def __len__(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"{name!r} is not in the alphabet") from None

    @property
    def is_single_char(self) -> bool:
        return all(len(n) == 1 and n.islower() for n in self.names)

    def letter_key(self, letter: Letter) -> int:
        """Total order on signed letters: a < a^-1 < b < b^-1 < ..."""
        return 2 * self.index(letter.name) + (0 if letter.sign == 1 else 1)

    def word_key(self, w: Word) -> tuple:
        return (len(w), tuple(self.letter_key(l) for l in w))

    def check_word(self, w: Word) -> None:
        for l in w:
            if l.name not in self._index:
                raise ParseError(f"letter {l.name!r} not in alphabet {self.names}")

    def to_json(self) -> list[str]:
        return list(self.names)

    @classmethod
    def from_json(cls, data) -> "Alphabet":
        try:
            return cls(tuple(data))
        except (TypeError, ValueError) as exc:
            raise ParseError(f"bad alphabet JSON: {data!r}") from exc


def alphabet(names: Iterable[str] | str) -> Alphabet:
    """Build an alphabet from an iterable of names or a comma list."""
    if isinstance(names, str):
        names = [n for n in names.replace(",", " ").split() if n]
    return Alphabet(tuple(names))


def _parse_token(tok: str, alpha: Alphabet | None) -> Letter:
    if tok.endswith("^-1"):
        base = tok[:-3]
        if not base:
            raise ParseError(f"bad token {tok!r}")
        if alpha is not None and base not in alpha:
            raise ParseError(f"unknown generator {base!r}")
        return Letter(base, -1)
    if len(tok) == 1 and tok.isupper():
        base = tok.lower()
        if alpha is None or base in alpha:
            return Letter(base, -1)
        raise ParseError(f"unknown generator {base!r}")
    if alpha is not None and tok not in alpha:
        raise ParseError(f"unknown generator {tok!r}")
    return Letter(tok, 1)


def parse_word(text: str, alpha: Alphabet | None = None) -> Word:
    """Parse the terse word syntax.

    Tokens are whitespace-separated; ``x^-1`` is the inverse of ``x``
    and ``X`` abbreviates ``x^-1`` for one-character names.  When every
    name of *alpha* is a single lowercase character, a single unspaced
    token such as ``"azAZ"`` is split character by character.  ``""``
    and ``"1"`` both denote the empty word.

    >>> str(parse_word("a z A Z"))
    'a z A Z'
    >>> parse_word("azAZ", alphabet("a z")) == parse_word("a z A Z")
    True
    >>> str(parse_word("t a^-1 t^-1"))
    't A T'
    """
    text = text.strip()
    if not text or (text == "1" and (alpha is None or "1" not in alpha)):
        return EPSILON
    tokens = text.split()
    if (
        len(tokens) == 1
        and len(tokens[0]) > 1
        and "^" not in tokens[0]
        and alpha is not None
        and alpha.is_single_char
        and all(c.lower() in alpha for c in tokens[0])
    ):
        tokens = list(tokens[0])
    w = Word(tuple(_parse_token(t, alpha) for t in tokens))
    if alpha is not None:
        alpha.check_word(w)
    return w


# -- core operations -------------------------------------------------------


def reduce(w: Word) -> Word:
    """Freely reduce *w* by cancelling adjacent mutually inverse letters.

    The result contains no adjacent pair ``x x^-1`` and the operation
    is idempotent.

    >>> str(reduce(parse_word("a A z")))
    'z'
    >>> reduce(EPSILON)
    Word('1')
    """
    stack: list[Letter] = []
    for l in w:
        if stack and stack[-1].name == l.name and stack[-1].sign == -l.sign:
            stack.pop()
        else:
            stack.append(l)
    return Word(tuple(stack))


def formal_inverse(w: Word) -> Word:
    """Reverse *w* and flip every sign; an involution.

    >>> str(formal_inverse(parse_word("a z")))
    'Z A'
    """
    return w.inverse()


def prefixes(w: Word) -> list[Word]:
    """All prefixes of *w*, shortest first, including the empty word and
    *w* itself.  Prefixes are taken on the raw word, not its reduction.

    >>> [str(p) for p in prefixes(parse_word("a A"))]
    ['1', 'a', 'a A']
    """
    return [Word(w.letters[:i]) for i in range(len(w) + 1)]


def is_idempotent_word(w: Word) -> bool:
    """True when *w* freely reduces to the empty word."""
    return reduce(w).is_empty


def idempotent_word(us: Sequence[Word]) -> Word:
    """Concatenate ``u u^-1`` over the given nonempty list of words.

    >>> str(idempotent_word([parse_word("a"), parse_word("z")]))
    'a A z Z'
    """
    if not us:
        raise ValueError("idempotent_word needs at least one word")
    out: list[Letter] = []
    for u in us:
        out.extend(u.letters)
        out.extend(u.inverse().letters)
    return Word(tuple(out))
