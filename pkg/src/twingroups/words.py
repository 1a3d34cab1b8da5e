"""Words over the involutive generators of twin groups.

A letter is a nonzero int: ``i > 0`` is the planar generator ``s_i``,
``-i`` is the crossing generator ``r_i`` used by the virtual extension.
The sign marks the family, not inversion; every generator is an
involution, so the inverse of any word is its reversal.

Words are immutable tuples and all operations are pure.  Two generators
``s_i`` and ``s_j`` commute exactly when ``|i - j| >= 2``, and these
commutations together with the involutions are the only relations, which
makes the word problem solvable by deletion of duplicated letters
("reduce") followed by sorting of commuting neighbours ("normal_form").
"""

import re
from dataclasses import dataclass

Word = tuple[int, ...]

EMPTY: Word = ()


@dataclass(frozen=True)
class GroupSpec:
    """Ambient rank for interpreting words: generators s_1 .. s_{n-1}."""

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"rank must be at least 2, got {self.n}")

    @staticmethod
    def commutes(i: int, j: int) -> bool:
        return abs(i - j) >= 2

    def validate(self, word: Word) -> None:
        """Reject letters outside s_1 .. s_{n-1} (r-letters included)."""
        for letter in word:
            if letter < 1 or letter >= self.n:
                raise ValueError(
                    f"letter {_letter_str(letter)} out of range for rank {self.n}"
                )


def reduce(word: Word, spec: GroupSpec) -> Word:
    """Shorten a word to a geodesic representative of the same element.

    Repeatedly deletes the leftmost pair of equal letters separated only
    by letters commuting with them.  For a right-angled Coxeter group
    this terminates in a word of minimal length.

    >>> reduce((1, 1), GroupSpec(3))
    ()
    >>> reduce((1, 3, 1), GroupSpec(4))
    (3,)
    >>> reduce((1, 2, 1, 2, 1, 2), GroupSpec(3))
    (1, 2, 1, 2, 1, 2)
    """
    spec.validate(word)
    letters = list(word)
    changed = True
    while changed:
        changed = False
        for i in range(len(letters)):
            a = letters[i]
            for j in range(i + 1, len(letters)):
                if letters[j] == a:
                    del letters[j]
                    del letters[i]
                    changed = True
                    break
                if not GroupSpec.commutes(letters[j], a):
                    break
            if changed:
                break
    return tuple(letters)


def normal_form(word: Word, spec: GroupSpec) -> Word:
    """Canonical form: the lexicographically least geodesic for the element.

    After full reduction, bubbles commuting neighbours into sorted order.
    Two words represent the same element iff their normal forms are
    identical tuples.

    >>> normal_form((3, 1), GroupSpec(4))
    (1, 3)
    >>> normal_form((2, 1, 2), GroupSpec(3))
    (2, 1, 2)
    >>> normal_form((1, 3, 1, 3), GroupSpec(4))
    ()
    """
    letters = list(reduce(word, spec))
    changed = True
    while changed:
        changed = False
        for k in range(len(letters) - 1):
            a, b = letters[k], letters[k + 1]
            if b < a and GroupSpec.commutes(a, b):
                letters[k], letters[k + 1] = b, a
                changed = True
    return tuple(letters)


def equal(u: Word, v: Word, spec: GroupSpec) -> bool:
    """Decide equality in the twin group of rank ``spec.n``."""
    return normal_form(u, spec) == normal_form(v, spec)


def is_reduced(word: Word, spec: GroupSpec) -> bool:
    """Scan for a forbidden pattern: equal letters split by commuting ones."""
    spec.validate(word)
    for i, a in enumerate(word):
        for j in range(i + 1, len(word)):
            if word[j] == a:
                return False
            if not spec.commutes(word[j], a):
                break
    return True


def invert(word: Word) -> Word:
    """Inverse of a word of involutions: its reversal."""
    return word[::-1]


def conjugate(word: Word, g: Word) -> Word:
    """Right conjugate g^-1 * word * g, returned unreduced."""
    return invert(g) + word + g


def pow_word(word: Word, k: int) -> Word:
    """k-th power; negative exponents go through the reversal inverse."""
    if k < 0:
        return invert(word) * (-k)
    return word * k


def ascending_run(lo: int, hi: int) -> Word:
    """The word s_lo s_{lo+1} ... s_hi (empty if lo > hi)."""
    return tuple(range(lo, hi + 1))


def descending_run(hi: int, lo: int) -> Word:
    """The word s_hi s_{hi-1} ... s_lo (empty if hi < lo)."""
    return tuple(range(hi, lo - 1, -1))


# --- word grammar -----------------------------------------------------------
#
# Tokens `s<INT>` and `r<INT>`, grouping `( ... )^<INT>`; `^-1` reverses the
# group (all generators are involutions, so reversal is inversion).

_TOKEN = re.compile(r"([sr])(\d+)|(\()|(\))(?:\s*\^\s*(-?\d+))?|(\S)")


def parse_word(text: str) -> Word:
    """Parse the shared word grammar, e.g. ``"(s1 s2)^3 s3"``.

    >>> parse_word("(s1 s2)^3 s3")
    (1, 2, 1, 2, 1, 2, 3)
    >>> parse_word("(s1 s2)^-1")
    (2, 1)
    >>> parse_word("r2 s1")
    (-2, 1)
    >>> parse_word("")
    ()
    """
    stack: list[list[int]] = [[]]
    for match in _TOKEN.finditer(text):
        family, index, lparen, rparen, exponent, junk = match.groups()
        if junk is not None:
            raise ValueError(f"unexpected character {junk!r} in word {text!r}")
        if family is not None:
            i = int(index)
            if i < 1:
                raise ValueError(f"bad generator index in {text!r}")
            stack[-1].append(i if family == "s" else -i)
        elif lparen is not None:
            stack.append([])
        else:
            if len(stack) < 2:
                raise ValueError(f"unbalanced ')' in word {text!r}")
            group = tuple(stack.pop())
            stack[-1].extend(pow_word(group, int(exponent) if exponent else 1))
    if len(stack) != 1:
        raise ValueError(f"unbalanced '(' in word {text!r}")
    return tuple(stack[0])


def _letter_str(letter: int) -> str:
    return f"s{letter}" if letter > 0 else f"r{-letter}"


def format_word(word: Word) -> str:
    """Render a word in the shared grammar; the empty word prints as ''."""
    return " ".join(_letter_str(letter) for letter in word)
