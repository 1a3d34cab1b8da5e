"""Structure maps of the twin group T_n.

Permutations are one-line tuples over 1..n (``perm[i]`` is the image of
``i + 1``) and compose left to right: ``compose(p, q)`` applies ``p``
first.  With that convention the strand map sending s_i to the
transposition (i, i+1) is a homomorphism on words read left to right.
"""

from . import words
from .words import EMPTY, GroupSpec, Word

Perm = tuple[int, ...]


def identity_perm(n: int) -> Perm:
    return tuple(range(1, n + 1))


def transposition(i: int, n: int) -> Perm:
    """The transposition (i, i+1) in one-line notation."""
    if not 1 <= i < n:
        raise ValueError(f"transposition index {i} out of range for n={n}")
    images = list(range(1, n + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return tuple(images)


def compose(p: Perm, q: Perm) -> Perm:
    """Apply p first, then q."""
    return tuple(q[p[k] - 1] for k in range(len(p)))


def perm_image(word: Word, n: int) -> Perm:
    """Image of a word under the strand map to the symmetric group."""
    GroupSpec(n).validate(word)
    perm = identity_perm(n)
    for letter in word:
        perm = compose(perm, transposition(letter, n))
    return perm


def is_pure(word: Word, n: int) -> bool:
    """Whether the word lies in the pure twin group (trivial strand map)."""
    return perm_image(word, n) == identity_perm(n)


def verify_identity(lhs: Word, rhs: Word, n: int) -> bool:
    """Whether two words agree as elements of T_n."""
    return words.equal(lhs, rhs, GroupSpec(n))


def abelian_image(word: Word, n: int) -> tuple[int, ...]:
    """Exponent sum of each generator mod 2; zero vector iff the word
    lies in the commutator subgroup."""
    GroupSpec(n).validate(word)
    parity = [0] * (n - 1)
    for letter in word:
        parity[letter - 1] ^= 1
    return tuple(parity)


def normal_forms(n: int, max_len: int):
    """Yield every canonical normal form of length <= max_len, shortest
    first, the empty word included.

    Prefixes of normal forms are normal forms, so forms of length L + 1
    are found by extending forms of length L by one letter.
    """
    spec = GroupSpec(n)
    layer: list[Word] = [EMPTY]
    yield EMPTY
    for _ in range(max_len):
        extended = []
        for stem in layer:
            for letter in range(1, n):
                candidate = stem + (letter,)
                if words.normal_form(candidate, spec) == candidate:
                    extended.append(candidate)
                    yield candidate
        layer = extended


def center_search(n: int, max_len: int) -> list[Word]:
    """All nontrivial normal forms of length <= max_len that commute with
    every generator.  Expected empty for n >= 3."""
    if n < 3:
        raise ValueError("center search needs rank at least 3")
    spec = GroupSpec(n)
    central = []
    for w in normal_forms(n, max_len):
        if w == EMPTY:
            continue
        if all(
            words.equal(w + (g,), (g,) + w, spec) for g in range(1, n)
        ):
            central.append(w)
    return central


def lcs_identity_t3(i: int) -> bool:
    """Check [(s1 s2)^(2^(i-1)), s1] = (s1 s2)^(-2^i) in T_3, the word
    identity behind the lower central series of T_3."""
    if i < 1:
        raise ValueError("term index must be at least 1")
    p = words.pow_word((1, 2), 2 ** (i - 1))
    commutator = words.invert(p) + (1,) + p + (1,)
    return verify_identity(commutator, words.pow_word((1, 2), -(2**i)), 3)
