"""A 24-triangle surface whose fundamental group is the rank-4 kernel.

One triangle per coset representative.  A representative lam labels its
triangle by the reversed letter string (the image of the base triangle
under the letters applied left to right), and the base triangle "0" has
sides 1, 2, 3 fixed by the corresponding reflections.  Every rewriting
generator (lam a) (rep(lam a))^-1 identifies side a of the triangle of
rep(lam a) with side a of the triangle of lam; the 72 side slots pair up
into 36 edges.

Corner between sides 1 and 3 is the right angle and is a finite vertex;
the two corners on side 2 are ideal and become punctures.  Gluing the
edges yields a sphere with eight punctures, so the fundamental group is
free of rank seven.

The derived pairing is authoritative; the hand-tabulated lists it is
compared against contain two misprinted labels naming no triangle.
"""

from dataclasses import dataclass

from .schreier import decode, rep_word, transversal
from .words import Word

Slot = tuple[str, int]
Pair = tuple[Slot, Slot]

IDEAL_CORNERS = (frozenset({1, 2}), frozenset({2, 3}))
FINITE_CORNER = frozenset({1, 3})
CORNERS = IDEAL_CORNERS + (FINITE_CORNER,)


@dataclass(frozen=True)
class Triangle:
    label: str

    @staticmethod
    def corner_is_ideal(corner: frozenset) -> bool:
        return 2 in corner


def label_of(word: Word) -> str:
    return "".join(str(x) for x in reversed(word)) or "0"


def build_complex() -> tuple[list[Triangle], list[Pair]]:
    """The 24 triangles and the 36 derived side pairings."""
    reps = [decode(e) for e in transversal(4)]
    triangles = sorted(
        (Triangle(label_of(w)) for w in reps), key=lambda t: (len(t.label), t.label)
    )
    pairs = set()
    for lam in reps:
        for a in (1, 2, 3):
            j = (label_of(lam), a)
            k = (label_of(rep_word(lam + (a,), 4)), a)
            pairs.add(tuple(sorted((j, k))))
    return triangles, sorted(pairs)


@dataclass
class SurfaceReport:
    connected: bool
    orientable: bool
    edges: int
    ideal_vertex_classes: int
    finite_vertex_classes: int
    filled_euler_char: int
    genus: int
    pi1_rank: int

    def as_dict(self) -> dict:
        return {
            "connected": self.connected,
            "orientable": self.orientable,
            "edges": self.edges,
            "idealVertexClasses": self.ideal_vertex_classes,
            "finiteVertexClasses": self.finite_vertex_classes,
            "filledEulerChar": self.filled_euler_char,
            "genus": self.genus,
            "pi1Rank": self.pi1_rank,
        }


def surface_invariants(
    triangles: list[Triangle], pairing: list[Pair]
) -> SurfaceReport:
    """Connectivity, orientability, vertex classes, and the Euler count
    of the glued surface, with the rank of its fundamental group."""
    labels = [t.label for t in triangles]
    slots = {(lab, a) for lab in labels for a in (1, 2, 3)}
    used = [slot for pair in pairing for slot in pair]
    if sorted(used) != sorted(slots):
        raise ValueError("side pairing is not a perfect matching")

    # face adjacency
    neighbours: dict[str, list[str]] = {lab: [] for lab in labels}
    for (t1, _), (t2, _) in pairing:
        neighbours[t1].append(t2)
        neighbours[t2].append(t1)

    seen = {labels[0]}
    stack = [labels[0]]
    while stack:
        for other in neighbours[stack.pop()]:
            if other not in seen:
                seen.add(other)
                stack.append(other)
    connected = len(seen) == len(labels)

    # orientation: the identifications preserve corner labels, so glued
    # faces must carry opposite boundary orientations; orientable iff
    # the adjacency graph is 2-colourable
    colour = {labels[0]: 0}
    stack = [labels[0]]
    orientable = True
    while stack:
        lab = stack.pop()
        for other in neighbours[lab]:
            if other not in colour:
                colour[other] = 1 - colour[lab]
                stack.append(other)
            elif colour[other] == colour[lab]:
                orientable = False

    # vertex classes: union-find over corners; gluing side a of T to
    # side a of T' identifies corner {a, x} of T with corner {a, x} of T'
    parent = {(lab, c): (lab, c) for lab in labels for c in CORNERS}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for (t1, a), (t2, _) in pairing:
        for corner in CORNERS:
            if a in corner:
                r1, r2 = find((t1, corner)), find((t2, corner))
                if r1 != r2:
                    parent[r1] = r2

    ideal_roots = set()
    finite_roots = set()
    for lab in labels:
        for corner in CORNERS:
            root = find((lab, corner))
            if Triangle.corner_is_ideal(corner):
                ideal_roots.add(root)
            else:
                finite_roots.add(root)
    if ideal_roots & finite_roots:
        raise ValueError("a vertex class mixes ideal and finite corners")

    vertices = len(ideal_roots) + len(finite_roots)
    edges = len(pairing)
    faces = len(labels)
    euler = vertices - edges + faces
    genus = (2 - euler) // 2 if orientable else -1
    punctured_euler = euler - len(ideal_roots)
    return SurfaceReport(
        connected=connected,
        orientable=orientable,
        edges=edges,
        ideal_vertex_classes=len(ideal_roots),
        finite_vertex_classes=len(finite_roots),
        filled_euler_char=euler,
        genus=genus,
        pi1_rank=1 - punctured_euler,
    )


# --- hand-tabulated side lists ------------------------------------------------
#
# (source label, side, target label); two labels are misprints naming no
# triangle of the complex ("123212" and "23123") and are resolved by the
# derived pairing.

HAND_GLUINGS: list[tuple[str, int, str]] = [
    ("1", 1, "0"), ("12", 1, "2"), ("121", 1, "21"),
    ("2", 2, "0"), ("21", 2, "1"), ("121", 2, "12"),
    ("3", 3, "0"), ("31", 3, "1"), ("32", 3, "2"),
    ("321", 3, "21"), ("312", 3, "12"), ("3121", 3, "121"),
    ("31", 1, "3"), ("312", 1, "32"), ("3121", 1, "321"),
    ("123", 1, "23"), ("1231", 1, "231"), ("1232", 1, "232"),
    ("12321", 1, "2321"), ("12312", 1, "2312"), ("123121", 1, "23121"),
    ("232", 3, "23"), ("2321", 3, "231"), ("23121", 3, "2312"),
    ("1231", 2, "123"), ("12312", 2, "1232"), ("123212", 2, "12321"),
    ("1232", 3, "123"), ("12321", 3, "1231"), ("123121", 3, "12312"),
    ("23", 2, "3"), ("231", 2, "31"), ("232", 2, "32"),
    ("2321", 2, "321"), ("2312", 2, "312"), ("23121", 2, "3121"),
]

#: sides left open after assembling each hexagonal half
HAND_BOUNDARIES: list[tuple[int, list[str]]] = [
    (2, ["3", "31", "321", "3121", "312", "32"]),
    (2, ["2312", "23123", "2321", "231", "23", "232"]),
]


def compare_with_hand_lists(
    triangles: list[Triangle], pairing: list[Pair]
) -> dict:
    """Check every hand-tabulated entry against the derived pairing.

    Returns counts of agreeing entries, entries whose labels name no
    triangle (misprints), and genuine mismatches (expected none).
    """
    labels = {t.label for t in triangles}
    derived = set(pairing)
    matched, invalid, mismatched = [], [], []
    for src, side, dst in HAND_GLUINGS:
        if src not in labels or dst not in labels:
            invalid.append((src, side, dst))
        elif tuple(sorted(((src, side), (dst, side)))) in derived:
            matched.append((src, side, dst))
        else:
            mismatched.append((src, side, dst))
    bad_boundary = [
        (side, lab)
        for side, labs in HAND_BOUNDARIES
        for lab in labs
        if lab not in labels
    ]
    return {
        "matched": len(matched),
        "invalid_labels": invalid + bad_boundary,
        "mismatched": mismatched,
    }
