"""Words in the half-twist generators sigma_0 .. sigma_5 of the six-punctured sphere.

A tangle is presented by a word in the half Dehn twists.  Words compose like
functions: in ``s5 s3 s1`` the rightmost letter acts first, so the word sends a
curve c to s5(s3(s1(c))).  Only free reduction on the generator alphabet is
ever applied here (adjacent letters with the same index merge, zero exponents
drop); no braid relations.  Whether two words present the same tangle is a
semantic question answered by the classifier, never by rewriting.

``normalize_to_b5`` removes every s0/s5 letter by the flip moves: scanning
crossings outermost-first (leftmost letter first), an s0^{+-1} crossing is
traded for (s2 s3 s2 s4 s3 s2)^{+-1} while every letter inward of it has its
index negated mod 6, and an s5^{+-1} crossing for (s1 s2 s1 s3 s2 s1)^{+-1}
with the inward index map j -> 4-j mod 6.  The pending index maps compose to
a single affine map j -> +-j + c mod 6, which is carried along the scan, so
the rewrite is linear in the number of crossings.

Moving a homeomorphism to fix puncture 1 is not needed as an operation:
inputs are already words in the sigma generators, which fix puncture 1's role
by construction.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError

__all__ = [
    "GeneratorLetter",
    "BraidWord",
    "parse_word",
    "format_word",
    "compose",
    "invert",
    "normalize_to_b5",
]

_TOKEN = re.compile(r"^s(\d)(?:\^(-?\d+))?$")

# Flip replacements for an s0 / s5 crossing (exponent +1; invert for -1).
_FLIP_BLOCK = {0: (2, 3, 2, 4, 3, 2), 5: (1, 2, 1, 3, 2, 1)}
# Index maps applied to everything inward of the flipped crossing,
# as affine maps j -> sign*j + offset (mod 6).
_FLIP_MAP = {0: (-1, 0), 5: (-1, 4)}


@dataclass(frozen=True)
class GeneratorLetter:
    """One syllable sigma_index^exponent with index in 0..5, exponent != 0."""

    index: int
    exponent: int

    def __post_init__(self) -> None:
        if self.index not in range(6):
            raise ParseError(f"generator index {self.index} out of range 0..5")
        if self.exponent == 0:
            raise ParseError("generator exponent must be nonzero")

    def inverse(self) -> "GeneratorLetter":
        return GeneratorLetter(self.index, -self.exponent)


def _reduce(letters) -> tuple[GeneratorLetter, ...]:
    # Stack-based free reduction; popping may expose a new mergeable pair.
    out: list[GeneratorLetter] = []
    for letter in letters:
        if letter.exponent == 0:
            continue
        if out and out[-1].index == letter.index:
            total = out[-1].exponent + letter.exponent
            out.pop()
            if total:
                out.append(GeneratorLetter(letter.index, total))
        else:
            out.append(letter)
    return tuple(out)


@dataclass(frozen=True)
class BraidWord:
    """A freely reduced word; ``letters[0]`` is applied last."""

    letters: tuple[GeneratorLetter, ...] = ()

    @staticmethod
    def of(*pairs: tuple[int, int]) -> "BraidWord":
        """Build a word from (index, exponent) pairs, leftmost first."""
        return BraidWord(_reduce(GeneratorLetter(i, e) for i, e in pairs))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_word(self)

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def max_index(self) -> int:
        return max((letter.index for letter in self.letters), default=0)


def parse_word(text: str) -> BraidWord:
    """Parse whitespace-separated tokens ``s<k>`` or ``s<k>^<e>``.

    The empty string is the identity word.
    """
    letters = []
    for token in text.split():
        m = _TOKEN.match(token)
        if m is None:
            raise ParseError(f"malformed token {token!r}")
        index = int(m.group(1))
        if index > 5:
            raise ParseError(f"generator index {index} out of range 0..5 in {token!r}")
        exponent = 1 if m.group(2) is None else int(m.group(2))
        if exponent == 0:
            raise ParseError(f"zero exponent in {token!r}")
        letters.append(GeneratorLetter(index, exponent))
    return BraidWord(_reduce(letters))


def format_word(word: BraidWord) -> str:
    """Round-trip printer for the token grammar."""
    return " ".join(
        f"s{letter.index}" if letter.exponent == 1 else f"s{letter.index}^{letter.exponent}"
        for letter in word.letters
    )


def compose(*words: BraidWord) -> BraidWord:
    """Concatenate words left to right: compose(u, v) acts as u after v."""
    letters = []
    for word in words:
        letters.extend(word.letters)
    return BraidWord(_reduce(letters))


def invert(word: BraidWord) -> BraidWord:
    """Reverse the letters and negate the exponents."""
    return BraidWord(tuple(letter.inverse() for letter in reversed(word.letters)))


def _compose_affine(outer: tuple[int, int], inner: tuple[int, int]) -> tuple[int, int]:
    # outer(inner(j)) for maps j -> s*j + c mod 6; signs are +-1
    s1, c1 = outer
    s2, c2 = inner
    return s1 * s2, (s1 * c2 + c1) % 6


def normalize_to_b5(word: BraidWord) -> BraidWord:
    """Rewrite the word so every index lies in 1..4, preserving the tangle.

    Scans letters outermost-first (left to right).  A letter whose mapped
    index is 0 or 5 is flipped crossing by crossing; each flip emits its
    replacement block and composes the inward index map into the running
    affine map.  Both flip maps fix their own index, so a letter with
    |exponent| > 1 simply emits that many blocks.
    """
    out: list[GeneratorLetter] = []
    sign, offset = 1, 0
    for letter in word.letters:
        j = (sign * letter.index + offset) % 6
        if j in _FLIP_MAP:
            block = _FLIP_BLOCK[j]
            unit = 1 if letter.exponent > 0 else -1
            for _ in range(abs(letter.exponent)):
                if unit > 0:
                    out.extend(GeneratorLetter(i, 1) for i in block)
                else:
                    out.extend(GeneratorLetter(i, -1) for i in reversed(block))
                sign, offset = _compose_affine(_FLIP_MAP[j], (sign, offset))
        else:
            out.append(GeneratorLetter(j, letter.exponent))
    return BraidWord(_reduce(out))
