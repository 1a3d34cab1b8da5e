"""The conjugation action of T_4 on its rank-7 free kernel.

Free words over the basis b_1 .. b_7 are tuples of signed indices.  An
automorphism is the 7-tuple of images of the basis, and composition is
diagrammatic: ``compose(f, g)`` applies ``f`` first, so that with
right conjugation x^g = g^-1 x g the map sending a twin word to the
induced conjugation automorphism is a homomorphism.

The three generator actions are stored as data but not trusted: the
equivariance check below recomputes every table entry through the
subgroup-presentation pipeline, and a mismatch raises.
"""

from dataclasses import dataclass
from functools import lru_cache

from . import schreier, twin, words
from .words import GroupSpec, Word, conjugate, invert, pow_word

FreeWord = tuple[int, ...]

#: the seven basis words: four conjugates of (s1 s2)^3, three of (s2 s3)^3
PT4_BASIS: list[Word] = [
    pow_word((1, 2), 3),
    conjugate(pow_word((1, 2), 3), (3,)),
    conjugate(pow_word((1, 2), 3), (3, 2)),
    conjugate(pow_word((1, 2), 3), (3, 2, 1)),
    pow_word((2, 3), 3),
    conjugate(pow_word((2, 3), 3), (1,)),
    conjugate(pow_word((2, 3), 3), (1, 2)),
]

RANK = 7


def free_reduce(word: FreeWord) -> FreeWord:
    """Cancel adjacent inverse pairs until none remain."""
    out: list[int] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def free_invert(word: FreeWord) -> FreeWord:
    return tuple(-x for x in reversed(word))


@dataclass(frozen=True)
class FreeAut:
    """Automorphism of the rank-7 free group, given by basis images."""

    images: tuple[FreeWord, ...]

    def __post_init__(self):
        if len(self.images) != RANK:
            raise ValueError("an automorphism needs 7 basis images")


def identity_aut() -> FreeAut:
    return FreeAut(tuple((i,) for i in range(1, RANK + 1)))


def apply_aut(f: FreeAut, word: FreeWord) -> FreeWord:
    out: list[int] = []
    for x in word:
        image = f.images[abs(x) - 1]
        out.extend(image if x > 0 else free_invert(image))
    return free_reduce(tuple(out))


def compose(f: FreeAut, g: FreeAut) -> FreeAut:
    """First f, then g."""
    return FreeAut(tuple(apply_aut(g, img) for img in f.images))


def is_involution(f: FreeAut) -> bool:
    return compose(f, f) == identity_aut()


_GENERATOR_TABLES: dict[int, tuple[FreeWord, ...]] = {
    1: ((-1,), (-2,), (4,), (3,), (6,), (5,), (1, -7, -1)),
    2: ((-1,), (3,), (2,), (-1, -4, 1), (-5,), (7,), (6,)),
    3: ((2,), (1,), (-5, -3, 5), (-6, -4, 6), (-5,), (-6,), (-2, -6, -4, 1, 7, 3, 5)),
}


def generator_aut(i: int) -> FreeAut:
    if i not in _GENERATOR_TABLES:
        raise ValueError(f"no generator action for s{i}; the rank is 4")
    return FreeAut(_GENERATOR_TABLES[i])


def phi4(word: Word) -> FreeAut:
    """The automorphism induced by a rank-4 twin word."""
    GroupSpec(4).validate(word)
    out = identity_aut()
    for letter in word:
        out = compose(out, generator_aut(letter))
    return out


@lru_cache(maxsize=None)
def _symbol_to_free() -> dict[str, FreeWord]:
    """Every rewriting symbol of the rank-4 pipeline, as a basis word.

    Runs the subgroup presentation through the tracked simplification,
    matches the survivors against the basis, and certifies each entry by
    expanding it back and comparing in T_4.
    """
    pres = schreier.subgroup_presentation(4)
    result = schreier.simplify_tracked(pres)
    basis_exprs = schreier.match_basis(result, PT4_BASIS, 4)
    spec = GroupSpec(4)
    table: dict[str, FreeWord] = {}
    for name in pres.generators:
        out: list[int] = []
        for survivor, e in result.expressions[name]:
            part = tuple(i * s for i, s in basis_exprs[survivor])
            out.extend(part if e == 1 else free_invert(part))
        free = free_reduce(tuple(out))
        expansion = expand_free(free)
        if not words.equal(expansion, pres.meanings[name], spec):
            raise RuntimeError(f"basis expression for {name} fails to expand")
        table[name] = free
    return table


def expand_free(word: FreeWord) -> Word:
    """Rewrite a basis word as a word of T_4."""
    out: list[int] = []
    for x in word:
        b = PT4_BASIS[abs(x) - 1]
        out.extend(b if x > 0 else invert(b))
    return tuple(out)


def express_pure(word: Word) -> FreeWord:
    """Express a kernel word of T_4 in the basis b_1 .. b_7."""
    if not twin.is_pure(word, 4):
        raise ValueError("only kernel words have a basis expression")
    table = _symbol_to_free()
    out: list[int] = []
    for name, _ in schreier.rewrite_tau(word, 4):
        out.extend(table[name])
    return free_reduce(tuple(out))


def check_equivariance() -> list[str]:
    """Recompute every generator-table entry from the pipeline.

    For each basis letter b_i and each generator g, the expression of
    the conjugate b_i^g must be the stored image of b_i under the action
    of g.  Returns the list of mismatches (empty means certified).
    """
    failures = []
    for g in (1, 2, 3):
        aut = generator_aut(g)
        for i in range(1, RANK + 1):
            derived = express_pure(conjugate(PT4_BASIS[i - 1], (g,)))
            stored = free_reduce(aut.images[i - 1])
            if derived != stored:
                failures.append(f"b{i}^s{g}: derived {derived}, stored {stored}")
    return failures


# --- action on the mod-2 quotient -------------------------------------------

Matrix = tuple[tuple[int, ...], ...]


def quotient_action(f: FreeAut) -> Matrix:
    """Induced linear map on exponent vectors mod 2; row i is the image
    of the i-th basis class."""
    rows = []
    for image in f.images:
        row = [0] * RANK
        for x in image:
            row[abs(x) - 1] ^= 1
        rows.append(tuple(row))
    return tuple(rows)


def restrict_block(matrix: Matrix, k: int = 4) -> Matrix:
    """Upper-left k x k block; raises unless the block spans an
    invariant subspace."""
    for row in matrix[:k]:
        if any(row[k:]):
            raise ValueError("the leading block is not invariant")
    return tuple(row[:k] for row in matrix[:k])


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    size = len(a)
    return tuple(
        tuple(
            sum(a[i][k] * b[k][j] for k in range(size)) % 2 for j in range(size)
        )
        for i in range(size)
    )


def quotient_group_order() -> int:
    """Order of the group generated by the three restricted quotient
    actions on the leading four basis classes."""
    gens = [restrict_block(quotient_action(generator_aut(i))) for i in (1, 2, 3)]
    identity = tuple(
        tuple(1 if i == j else 0 for j in range(4)) for i in range(4)
    )
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                prod = _mat_mul(m, g)
                if prod not in seen:
                    seen.add(prod)
                    nxt.append(prod)
        frontier = nxt
    return len(seen)


_FREE_TOKEN = {"b%d" % i: i for i in range(1, RANK + 1)}
_FREE_TOKEN.update({"b%d^-1" % i: -i for i in range(1, RANK + 1)})


def parse_free(text: str) -> FreeWord:
    """Parse the free-word grammar: tokens b<INT> and b<INT>^-1."""
    out = []
    for token in text.split():
        if token not in _FREE_TOKEN:
            raise ValueError(f"bad free-group token {token!r}")
        out.append(_FREE_TOKEN[token])
    return tuple(out)


def format_free(word: FreeWord) -> str:
    return " ".join(f"b{x}" if x > 0 else f"b{-x}^-1" for x in word)


def faithfulness_search(max_len: int) -> Word | None:
    """First nontrivial normal form of T_4 (length <= max_len) acting
    trivially on all seven basis letters, or None."""
    if max_len < 1:
        raise ValueError("search length must be at least 1")
    identity = identity_aut()
    for w in twin.normal_forms(4, max_len):
        if w and phi4(w) == identity:
            return w
    return None
