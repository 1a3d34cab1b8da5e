"""Generating sets, rank bound, and Betti numbers for pure twin groups.

The kernel of the strand map of rank n is generated, over the rank n-1
kernel, by conjugates of the hexagonal words (s_{l-1} s_l)^3.  The
conjugators run over transversal words built from descending blocks
m(k, i) = s_k ... s_{i+1}, with the block pattern depending on l:

  * l = 2:        blocks m(3,.) ... m(n-1,.), all nontrivial;
  * 2 < l < n-1:  either no leading blocks, or m(l-2,.) nontrivial with
                  m(l-1,.) arbitrary, followed by nontrivial blocks
                  m(l+1,.) ... m(n-1,.);
  * l = n-1:      m(n-3,.) nontrivial with m(n-2,.) arbitrary, or the
                  empty conjugator, minus one member that is redundant
                  by the hexagon-exchange relation.

Counting the patterns gives the rank bound, which two independent
Betti-number formulas bound from below.
"""

import itertools
import math
from dataclasses import dataclass

from . import words
from .schreier import m_word
from .words import GroupSpec, Word, conjugate, pow_word


@dataclass(frozen=True)
class PureGenerator:
    l: int
    conjugator: Word
    word: Word


def hexagon(l: int) -> Word:
    """The pure word (s_{l-1} s_l)^3."""
    return pow_word((l - 1, l), 3)


def _block_patterns(n: int, l: int):
    """Yield conjugator block choices [(k, i), ...] for one value of l."""
    if l == 2:
        tails = [range(k) for k in range(3, n)]
        for combo in itertools.product(*tails):
            yield list(zip(range(3, n), combo))
    elif l < n - 1:
        tails = [range(k) for k in range(l + 1, n)]
        for combo in itertools.product(*tails):
            yield list(zip(range(l + 1, n), combo))
        for lead in range(l - 2):
            for mid in range(l):
                for combo in itertools.product(*tails):
                    yield [(l - 2, lead), (l - 1, mid)] + list(
                        zip(range(l + 1, n), combo)
                    )
    else:
        yield []
        for lead in range(n - 3):
            for mid in range(n - 1):
                yield [(n - 3, lead), (n - 2, mid)]


def pure_generators(n: int) -> list[PureGenerator]:
    """Generators of the rank-n kernel that do not lie in the rank n-1
    kernel, one per block pattern, redundancy removed."""
    if not 3 <= n <= 7:
        raise ValueError("supported ranks are 3..7")
    redundant = [(n - 3, n - 4), (n - 2, n - 4)] if n >= 4 else None
    out = []
    for l in range(2, n):
        core = hexagon(l)
        for blocks in _block_patterns(n, l):
            if l == n - 1 and blocks == redundant:
                continue
            lam = tuple(
                x for k, i in blocks for x in m_word(k, i)
            )
            out.append(PureGenerator(l, lam, conjugate(core, lam)))
    return sorted(out, key=lambda g: (g.l, g.conjugator))


def duplicate_report(gens: list[PureGenerator], n: int) -> list[tuple[int, int]]:
    """Pairs of indices whose words coincide as group elements.

    Canonical forms are compared, so the scan is linear; the expected
    result is an empty list, and a nonempty one is reported rather than
    silently deduplicated.
    """
    spec = GroupSpec(n)
    seen: dict[Word, int] = {}
    pairs = []
    for idx, gen in enumerate(gens):
        nf = words.normal_form(gen.word, spec)
        if nf in seen:
            pairs.append((seen[nf], idx))
        else:
            seen[nf] = idx
    return pairs


def generating_chain(n: int) -> list[PureGenerator]:
    """A full generating set of the rank-n kernel: the new generators of
    every rank from 3 up to n."""
    out = []
    for m in range(3, n + 1):
        out.extend(pure_generators(m))
    return out


def rank_bound(n: int) -> int:
    """Upper bound for the rank of the rank-n kernel (exact integers).

    The increment from rank m-1 to m counts the block patterns:
    (m-1)!/2 for l = 2, (m-1)! (l-1)^2 / l! for each middle l, and
    (m-3)(m-1) for l = m-1 after removing the redundant member.
    """
    if n < 4:
        raise ValueError("rank bound starts at n = 4")
    bound = 7
    for m in range(5, n + 1):
        f = math.factorial(m - 1)
        middle = sum(
            (f // math.factorial(l)) * (l - 1) ** 2 for l in range(3, m - 1)
        )
        bound += f // 2 + middle + (m - 3) * (m - 1)
    return bound


def betti_binomial(n: int) -> int:
    """First Betti number of the triple-diagonal complement, as a
    binomial sum."""
    if n < 3:
        raise ValueError("defined for n >= 3")
    return sum(math.comb(n, i) * math.comb(i - 1, 2) for i in range(3, n + 1))


def betti_closed_form(n: int) -> int:
    """The same Betti number in closed form 2^(n-3) (n^2 - 5n + 8) - 1."""
    if n < 3:
        raise ValueError("defined for n >= 3")
    return 2 ** (n - 3) * (n * n - 5 * n + 8) - 1
