"""Virtual and welded twin groups: presentations and bounded search.

Both groups extend the planar generators s_i (positive letters) by
crossing generators r_i (negative letters).  No normal form is known
here, so equality is only semi-decided: a breadth-first search over
relation rewrites that either produces a certificate path or gives up.
"""

from dataclasses import dataclass

from . import twin
from .words import Word, invert

Relation = tuple[str, Word, Word]


def _r(i: int) -> int:
    return -i


@dataclass(frozen=True)
class VirtualPresentation:
    """Relations of the virtual (optionally welded) twin group."""

    n: int
    welded: bool
    relations: tuple[Relation, ...]

    def relators(self) -> list[Word]:
        """Each relation as a single word lhs * rhs^-1."""
        return [lhs + invert(rhs) for _, lhs, rhs in self.relations]


def _relations(n: int, welded: bool) -> tuple[Relation, ...]:
    rels: list[Relation] = []
    for i in range(1, n):
        rels.append(("s-involution", (i, i), ()))
    for i in range(1, n):
        for j in range(i + 2, n):
            rels.append(("s-commutation", (i, j), (j, i)))
    for i in range(1, n):
        rels.append(("r-involution", (_r(i), _r(i)), ()))
    for i in range(1, n):
        for j in range(i + 2, n):
            rels.append(("r-commutation", (_r(i), _r(j)), (_r(j), _r(i))))
    for i in range(1, n - 1):
        rels.append(
            ("r-braid", (_r(i), _r(i + 1), _r(i)), (_r(i + 1), _r(i), _r(i + 1)))
        )
    for i in range(1, n):
        for j in range(1, n):
            if abs(i - j) >= 2:
                rels.append(("mixed-commutation", (i, _r(j)), (_r(j), i)))
    for i in range(1, n - 1):
        rels.append(
            ("mixed-shift", (_r(i), _r(i + 1), i), (i + 1, _r(i), _r(i + 1)))
        )
    if welded:
        for i in range(1, n - 1):
            rels.append(
                ("welded-shift", (_r(i), i + 1, i), (i + 1, i, _r(i + 1)))
            )
    return tuple(rels)


def vt_presentation(n: int) -> VirtualPresentation:
    if n < 2:
        raise ValueError("rank must be at least 2")
    return VirtualPresentation(n, False, _relations(n, False))


def wt_presentation(n: int) -> VirtualPresentation:
    if n < 2:
        raise ValueError("rank must be at least 2")
    return VirtualPresentation(n, True, _relations(n, True))


def vt_perm_image(word: Word, n: int) -> tuple[int, ...]:
    """Strand map: both letter families land on (i, i+1)."""
    perm = twin.identity_perm(n)
    for letter in word:
        perm = twin.compose(perm, twin.transposition(abs(letter), n))
    return perm


def is_pure_virtual(word: Word, n: int) -> bool:
    return vt_perm_image(word, n) == twin.identity_perm(n)


def retraction(word: Word) -> Word:
    """Delete every crossing letter; fixes planar words pointwise."""
    return tuple(x for x in word if x > 0)


def retraction_compatible(relation: Relation, n: int) -> bool:
    """Whether deleting crossings sends the relation to a valid identity
    of T_n.  Holds for every family except the mixed shift, whose two
    sides retract to distinct generators."""
    _, lhs, rhs = relation
    return twin.verify_identity(retraction(lhs), retraction(rhs), n)


def _moves(pres: VirtualPresentation):
    table: set[tuple[Word, Word]] = set()
    for _, lhs, rhs in pres.relations:
        for a, b in ((lhs, rhs), (invert(lhs), invert(rhs))):
            table.add((a, b))
            table.add((b, a))
    return sorted(table)


def bounded_equal(
    u: Word, v: Word, n: int, depth: int, welded: bool = False
) -> list[Word] | None:
    """Search for a rewrite path from u to v of at most ``depth`` steps.

    Moves are the presentation relations applied to subwords, in both
    directions and in inverted form, with word length capped at
    ``max(len(u), len(v)) + depth``.  Returns the certificate path
    (u first, v last) or None when the bounded search is exhausted;
    None means unknown, never disproof.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    pres = wt_presentation(n) if welded else vt_presentation(n)
    moves = _moves(pres)
    cap = max(len(u), len(v)) + depth
    parents: dict[Word, Word | None] = {u: None}
    frontier = [u]

    def unwind(word: Word) -> list[Word]:
        path = [word]
        while parents[path[-1]] is not None:
            path.append(parents[path[-1]])
        return path[::-1]

    if u == v:
        return [u]
    for _ in range(depth):
        nxt = []
        for word in frontier:
            for pattern, replacement in moves:
                span = len(pattern)
                if len(word) - span + len(replacement) > cap:
                    continue
                positions = (
                    range(len(word) + 1)
                    if span == 0
                    else [
                        k
                        for k in range(len(word) - span + 1)
                        if word[k : k + span] == pattern
                    ]
                )
                for k in positions:
                    new = word[:k] + replacement + word[k + span :]
                    if new in parents:
                        continue
                    parents[new] = word
                    if new == v:
                        return unwind(new)
                    nxt.append(new)
        frontier = nxt
    return None


def replay(path: list[Word], n: int, welded: bool = False) -> bool:
    """Check a certificate: consecutive words must differ by one move."""
    pres = wt_presentation(n) if welded else vt_presentation(n)
    moves = _moves(pres)
    for here, there in zip(path, path[1:]):
        ok = False
        for pattern, replacement in moves:
            span = len(pattern)
            positions = (
                range(len(here) + 1)
                if span == 0
                else range(len(here) - span + 1)
            )
            for k in positions:
                if span and here[k : k + span] != pattern:
                    continue
                if here[:k] + replacement + here[k + span :] == there:
                    ok = True
                    break
            if ok:
                break
        if not ok:
            return False
    return True
