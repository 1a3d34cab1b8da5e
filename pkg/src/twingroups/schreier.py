"""Coset transversal and subgroup presentations for pure twin groups.

The transversal element with index tuple ``(i_1, ..., i_{n-1})``,
``0 <= i_k <= k``, decodes to the word ``m(1, i_1) m(2, i_2) ...`` where
``m(k, i) = s_k s_{k-1} ... s_{i+1}`` (empty when ``i = k``).  These n!
words map bijectively onto the symmetric group, which makes the
representative of a coset a permutation lookup.

From the transversal the classical rewriting machinery produces
generators ``S(lam, a) = (lam a) (rep(lam a))^-1`` and relators
``tau(lam r lam^-1)`` for the kernel of the strand map, and
``tietze_simplify`` eliminates redundant generators while logging, for
every eliminated symbol, its expression in the survivors.
"""

import itertools
import json
from dataclasses import dataclass, field
from functools import lru_cache

from . import twin, words
from .words import EMPTY, GroupSpec, Word, descending_run, invert

TransversalElem = tuple[int, ...]

SignedWord = tuple[tuple[str, int], ...]


def m_word(k: int, i: int) -> Word:
    """The descending block s_k s_{k-1} ... s_{i+1}; empty when i = k."""
    if not 0 <= i <= k:
        raise ValueError(f"block index {i} out of range for m({k}, .)")
    return descending_run(k, i + 1)


def decode(elem: TransversalElem) -> Word:
    """Expand an index tuple to its transversal word."""
    out: list[int] = []
    for k, i in enumerate(elem, start=1):
        out.extend(m_word(k, i))
    return tuple(out)


def transversal(n: int) -> list[TransversalElem]:
    """All n! index tuples in lexicographic order."""
    if n < 2:
        raise ValueError("transversal needs rank at least 2")
    return list(itertools.product(*(range(k + 1) for k in range(1, n))))


@lru_cache(maxsize=None)
def _elem_by_perm(n: int) -> dict[tuple[int, ...], TransversalElem]:
    table = {}
    for elem in transversal(n):
        perm = twin.perm_image(decode(elem), n)
        if perm in table:
            raise RuntimeError(f"transversal for n={n} is not a bijection")
        table[perm] = elem
    return table


def coset_rep(word: Word, n: int) -> TransversalElem:
    """The unique transversal element in the same coset of the kernel."""
    return _elem_by_perm(n)[twin.perm_image(word, n)]


def rep_word(word: Word, n: int) -> Word:
    return decode(coset_rep(word, n))


def schreier_generator(elem: TransversalElem, a: int, n: int) -> Word:
    """The kernel element (lam a) (rep(lam a))^-1, unreduced."""
    lam = decode(elem)
    return lam + (a,) + invert(rep_word(lam + (a,), n))


def sym_name(lam: Word, a: int) -> str:
    stem = "".join(str(x) for x in lam) or "e"
    return f"S_{stem}_{a}"


def rewrite_tau(word: Word, n: int, bar=None) -> SignedWord:
    """Rewrite a kernel word into transversal-indexed generator symbols.

    Scans left to right, emitting ``S(rep(prefix), letter)`` for each
    letter; all exponents are +1 because the ambient generators are
    involutions.
    """
    if bar is None:
        if not twin.is_pure(word, n):
            raise ValueError("tau rewriting needs a word in the kernel")
        bar = lambda w: rep_word(w, n)
    current = EMPTY
    out = []
    for letter in word:
        out.append((sym_name(current, letter), 1))
        current = bar(current + (letter,))
    return tuple(out)


def twin_relators(n: int) -> list[Word]:
    """Defining relators of T_n: the squares and the far commutations."""
    relators = [(i, i) for i in range(1, n)]
    relators += [
        (i, j, i, j) for i in range(1, n) for j in range(i + 2, n)
    ]
    return relators


@dataclass
class Presentation:
    """Abstract generators, signed relators, and an optional meaning map
    sending each generator to a word of the ambient twin group."""

    n: int
    generators: list[str]
    relators: list[SignedWord]
    meanings: dict[str, Word] | None = None

    def to_json(self) -> str:
        doc = {
            "generators": list(self.generators),
            "relators": [[[s, e] for s, e in r] for r in self.relators],
        }
        if self.meanings is not None:
            doc["meanings"] = {
                g: words.format_word(self.meanings[g]) for g in self.generators
            }
        return json.dumps(doc, indent=2)


def rs_presentation(n: int, transversal_words: list[Word], bar) -> Presentation:
    """Generators and relators of a finite-index kernel of T_n, given a
    prefix-closed transversal and the representative map ``bar``."""
    spec = GroupSpec(n)
    generators = []
    meanings = {}
    for lam in transversal_words:
        for a in range(1, n):
            name = sym_name(lam, a)
            generators.append(name)
            raw = lam + (a,) + invert(bar(lam + (a,)))
            meanings[name] = words.normal_form(raw, spec)
    relators = [
        rewrite_tau(lam + r + invert(lam), n, bar)
        for lam in transversal_words
        for r in twin_relators(n)
    ]
    return Presentation(n, generators, relators, meanings)


def subgroup_presentation(n: int) -> Presentation:
    """Raw presentation of the pure twin group of rank n (2 <= n <= 6;
    n = 6 has 720 cosets and is noticeably slower)."""
    if not 2 <= n <= 6:
        raise ValueError("supported ambient ranks are 2..6")
    return rs_presentation(
        n, [decode(e) for e in transversal(n)], lambda w: rep_word(w, n)
    )


def strand_kernel_presentation() -> Presentation:
    """Presentation of the kernel of T_3 -> T_2 (delete the last strand),
    with transversal {1, s_1}: two involutions and nothing else."""

    def bar(w: Word) -> Word:
        return (1,) if sum(1 for x in w if x == 1) % 2 else EMPTY

    return rs_presentation(3, [EMPTY, (1,)], bar)


# --- Tietze simplification ---------------------------------------------------


def _invert_signed(word: SignedWord) -> SignedWord:
    return tuple((s, -e) for s, e in reversed(word))


def _free_reduce_signed(word: SignedWord) -> SignedWord:
    out: list[tuple[str, int]] = []
    for s, e in word:
        if out and out[-1][0] == s and out[-1][1] == -e:
            out.pop()
        else:
            out.append((s, e))
    return tuple(out)


def _cyclic_reduce(word: SignedWord) -> SignedWord:
    word = _free_reduce_signed(word)
    while len(word) >= 2 and word[0][0] == word[-1][0] and word[0][1] == -word[-1][1]:
        word = word[1:-1]
    return word


def _substitute(word: SignedWord, name: str, expr: SignedWord) -> SignedWord:
    out: list[tuple[str, int]] = []
    for s, e in word:
        if s != name:
            out.append((s, e))
        elif e == 1:
            out.extend(expr)
        else:
            out.extend(_invert_signed(expr))
    return _free_reduce_signed(tuple(out))


@dataclass
class TietzeResult:
    presentation: Presentation
    #: every original generator, expressed in the surviving ones
    expressions: dict[str, SignedWord] = field(default_factory=dict)


def simplify_tracked(pres: Presentation) -> TietzeResult:
    """Eliminate redundant generators, keeping the elimination log.

    Rules, applied to a fixpoint: drop generators whose meaning is the
    identity of the ambient group; drop relators that reduce freely
    (also cyclically) to nothing; use any relator containing a symbol
    exactly once to eliminate that symbol, preferring symbols with short
    meanings, then short relators, then by name.
    """
    spec = GroupSpec(pres.n)
    gens = list(pres.generators)
    meanings = dict(pres.meanings) if pres.meanings else None
    relators = [_cyclic_reduce(r) for r in pres.relators]
    raw_expr: dict[str, SignedWord] = {}

    def meaning_len(name: str) -> int:
        return len(meanings[name]) if meanings else 0

    if meanings is not None:
        for name in list(gens):
            if words.normal_form(meanings[name], spec) == EMPTY:
                raw_expr[name] = ()
                gens.remove(name)
                relators = [
                    tuple((s, e) for s, e in r if s != name) for r in relators
                ]

    while True:
        cleaned = []
        seen = set()
        for r in relators:
            r = _cyclic_reduce(r)
            if not r:
                continue
            key = min(r, _invert_signed(r))
            if key in seen:
                continue
            seen.add(key)
            cleaned.append(r)
        relators = cleaned

        best = None
        for idx, r in enumerate(relators):
            counts: dict[str, int] = {}
            for s, _ in r:
                counts[s] = counts.get(s, 0) + 1
            for s, c in counts.items():
                if c == 1:
                    rank = (meaning_len(s), len(r), s)
                    if best is None or rank < best[0]:
                        best = (rank, idx, s)
        if best is None:
            break

        _, idx, name = best
        r = relators.pop(idx)
        pos = next(k for k, (s, _) in enumerate(r) if s == name)
        before, (_, e), after = r[:pos], r[pos], r[pos + 1 :]
        # r = B x^e A = 1  =>  x^e = B^-1 A^-1
        expr = _free_reduce_signed(_invert_signed(before) + _invert_signed(after))
        if e == -1:
            expr = _invert_signed(expr)
        raw_expr[name] = expr
        gens.remove(name)
        relators = [_substitute(r, name, expr) for r in relators]

    survivors = set(gens)
    resolved: dict[str, SignedWord] = {}

    def resolve(name: str) -> SignedWord:
        if name in survivors:
            return ((name, 1),)
        if name not in resolved:
            out: list[tuple[str, int]] = []
            for s, e in raw_expr[name]:
                part = resolve(s)
                out.extend(part if e == 1 else _invert_signed(part))
            resolved[name] = _free_reduce_signed(tuple(out))
        return resolved[name]

    expressions = {name: resolve(name) for name in pres.generators}
    final_meanings = (
        {g: meanings[g] for g in gens} if meanings is not None else None
    )
    simplified = Presentation(pres.n, gens, relators, final_meanings)
    return TietzeResult(simplified, expressions)


def tietze_simplify(pres: Presentation) -> Presentation:
    """Simplified presentation (same group), log discarded."""
    return simplify_tracked(pres).presentation


def expand_signed(expr: SignedWord, meanings: dict[str, Word]) -> Word:
    """Meaning of a signed symbol word as an ambient-group word."""
    out: list[int] = []
    for s, e in expr:
        w = meanings[s]
        out.extend(w if e == 1 else invert(w))
    return tuple(out)


def match_basis(
    result: TietzeResult, basis: list[Word], n: int
) -> dict[str, tuple[tuple[int, int], ...]]:
    """Express each surviving generator in a target free basis.

    Tries single basis letters and their inverses first, then products
    of two; every match is certified by word equality in the ambient
    group.  Raises if some survivor cannot be written that way.
    """
    spec = GroupSpec(n)
    meanings = result.presentation.meanings
    letters = [((i, e),) for i in range(1, len(basis) + 1) for e in (1, -1)]
    candidates = list(letters) + [a + b for a in letters for b in letters]

    def expand(expr):
        out: list[int] = []
        for i, e in expr:
            w = basis[i - 1]
            out.extend(w if e == 1 else invert(w))
        return tuple(out)

    table = {}
    for name in result.presentation.generators:
        meaning = meanings[name]
        for expr in candidates:
            if words.equal(meaning, expand(expr), spec):
                table[name] = expr
                break
        else:
            raise ValueError(f"generator {name} does not match the basis")
    return table
