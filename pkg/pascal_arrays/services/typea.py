"""
The classical Catalan families on the half-line A∞

Temperley-Lieb half-diagrams, bracket sequences, planar half-trees, unit
interval-point orders and noncrossing partitions. Every family carries its own
edge maps and its own enumeration; the bijections between them are the
transports through walks, plus the direct constructions below.
"""
import logging
from dataclasses import dataclass
from itertools import combinations, product
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from pascal_arrays.core.exceptions import (
    InvalidSpecError,
    LabelCountError,
    NoPropagatingLineError,
    SizeMismatchError,
    UnderflowError,
)
from pascal_arrays.services.diagrams import (
    CLOSE,
    OPEN,
    HalfDiagram,
    PairDiagram,
    dyck_words,
    enum_ncpp,
    half_diagrams,
    match_word,
    mirror,
    standard_sequences,
    tl_cut,
    tl_edge,
    tl_join,
    unmatched,
)
from pascal_arrays.services.graphs import RootedGraph, a_inf
from pascal_arrays.services.pascal import CatalanSequence, Element, PascalFamily

logger = logging.getLogger(__name__)


def _is_up(x: Element, target: int) -> bool:
    return target == x.vertex + 1


# Temperley-Lieb half-diagrams


class TLFamily(PascalFamily):
    """Half-diagrams D_l(n, l); payload encodes as the standard sequence"""

    name = "tl"
    cap = 12

    def __init__(self, graph: Optional[RootedGraph] = None):
        super().__init__(graph or a_inf())

    def origin(self) -> HalfDiagram:
        return HalfDiagram(0, (), ())

    def edge_map(self, x: Element, key: int, target: int) -> HalfDiagram:
        return tl_edge("up" if _is_up(x, target) else "down", x.payload)

    def classify(self, payload: HalfDiagram) -> Tuple[int, int]:
        return payload.n, payload.l

    def universe(self, n: int) -> List[HalfDiagram]:
        return half_diagrams(n)

    def encode(self, payload: HalfDiagram) -> str:
        return payload.encode()

    def decode(self, text: str) -> HalfDiagram:
        return HalfDiagram.from_sequence(text)

    def render(self, payload: HalfDiagram) -> str:
        return payload.render()


class TLSequence(CatalanSequence):
    """D(n, n) cut along its propagating lines"""

    name = "tl"
    cap = 8

    def __init__(self):
        family = TLFamily()
        super().__init__(family, family)

    def members(self, n: int) -> List[PairDiagram]:
        return enum_ncpp(n)

    def decompose(self, n: int, x: PairDiagram) -> Tuple[Element, Element]:
        top, bottom = tl_cut(x)
        return self.bra.element(top), self.ket.element(bottom)

    def compose(self, n: int, bra: Element, ket: Element) -> PairDiagram:
        return tl_join(bra.payload, ket.payload)

    def encode(self, x: PairDiagram) -> str:
        return x.disk_word()

    def decode(self, text: str) -> PairDiagram:
        return PairDiagram.from_disk_word(len(text) // 2, len(text) - len(text) // 2, text)


# Bracket sequences


def bracket_edge(kind: str, word: str) -> str:
    """Append an open or a close symbol"""
    if kind == "open":
        return word + OPEN
    if kind == "close":
        if unmatched(word) == 0:
            raise UnderflowError(f"{word!r} has no open bracket to close")
        return word + CLOSE
    raise InvalidSpecError(f"Unknown bracket edge {kind!r}")


def bracket_decompose(word: str) -> Tuple[str, str]:
    """Split a closed word in half and read the right half backwards"""
    if len(word) % 2 or unmatched(word) != 0:
        raise InvalidSpecError(f"{word!r} is not a matched bracket sequence")
    n = len(word) // 2
    return word[:n], mirror(word[n:])


def bracket_compose(left: str, right: str) -> str:
    if unmatched(left) != unmatched(right) or len(left) != len(right):
        raise SizeMismatchError(f"Cannot glue {left!r} to {right!r}")
    return left + mirror(right)


class BracketFamily(PascalFamily):
    """Properly nested, not necessarily closed, bracket sequences"""

    name = "brackets"
    cap = 12

    def __init__(self, graph: Optional[RootedGraph] = None):
        super().__init__(graph or a_inf())

    def origin(self) -> str:
        return ""

    def edge_map(self, x: Element, key: int, target: int) -> str:
        return bracket_edge("open" if _is_up(x, target) else "close", x.payload)

    def classify(self, payload: str) -> Tuple[int, int]:
        return len(payload), unmatched(payload)

    def universe(self, n: int) -> List[str]:
        return list(standard_sequences(n))


class BracketSequence(CatalanSequence):
    name = "brackets"
    cap = 8

    def __init__(self):
        family = BracketFamily()
        super().__init__(family, family)

    def members(self, n: int) -> List[str]:
        return dyck_words(n)

    def decompose(self, n: int, x: str) -> Tuple[Element, Element]:
        left, right = bracket_decompose(x)
        return self.bra.element(left), self.ket.element(right)

    def compose(self, n: int, bra: Element, ket: Element) -> str:
        return bracket_compose(bra.payload, ket.payload)


# Rooted planar trees and half-trees

PlanarTree = Tuple["PlanarTree", ...]
HalfTree = Tuple[PlanarTree, ...]


def tree_size(t: PlanarTree) -> int:
    return sum(1 + tree_size(child) for child in t)


def tree_encode(t: PlanarTree) -> str:
    """Anticlockwise boundary walk: ( away from the root, ) toward it"""
    return "".join(OPEN + tree_encode(child) + CLOSE for child in t)


def tree_decode(word: str) -> PlanarTree:
    if unmatched(word) != 0:
        raise InvalidSpecError(f"{word!r} is not the boundary word of a tree")
    stack: List[list] = [[]]
    for ch in word:
        if ch == OPEN:
            stack.append([])
        else:
            child = stack.pop()
            stack[-1].append(_freeze(child))
    return _freeze(stack[0])


def _freeze(children: list) -> PlanarTree:
    return tuple(children)


def planar_trees(edges: int) -> List[PlanarTree]:
    """All rooted planar trees with the given number of edges"""
    if edges == 0:
        return [()]
    result = []
    for first in range(edges):
        for child in planar_trees(first):
            for rest in planar_trees(edges - 1 - first):
                result.append((child,) + rest)
    return result


def halftree_size(h: HalfTree) -> int:
    """Length of the boundary word: trunk edges once, branch edges twice"""
    return len(h) - 1 + 2 * sum(tree_size(t) for t in h)


def halftree_encode(h: HalfTree) -> str:
    """Branches at each trunk vertex, with ( for each trunk edge between them"""
    return OPEN.join(tree_encode(t) for t in h)


def halftree_decode(word: str) -> HalfTree:
    _, spine = match_word(word)
    bounds = [0] + spine + [len(word) + 1]
    return tuple(
        tree_decode(word[bounds[i] : bounds[i + 1] - 1]) for i in range(len(bounds) - 1)
    )


def halftree_edge(kind: str, h: HalfTree) -> HalfTree:
    """φ_t⁺ grows the trunk; φ_t⁻ folds the top trunk edge into the branches below"""
    if kind == "grow":
        return h + ((),)
    if kind == "fold":
        if len(h) < 2:
            raise UnderflowError("Half-tree has no trunk edge to fold")
        return h[:-2] + (h[-2] + (h[-1],),)
    raise InvalidSpecError(f"Unknown half-tree edge {kind!r}")


def _compositions(total: int, parts: int) -> List[Tuple[int, ...]]:
    if parts == 1:
        return [(total,)]
    return [
        (first,) + rest
        for first in range(total + 1)
        for rest in _compositions(total - first, parts - 1)
    ]


def half_trees(n: int, l: int) -> List[HalfTree]:
    """Half-trees with trunk length l and n edges in all"""
    if l > n or (n - l) % 2:
        return []
    result = []
    for sizes in _compositions((n - l) // 2, l + 1):
        for branches in product(*(planar_trees(size) for size in sizes)):
            result.append(tuple(branches))
    return result


def tree_cut(t: PlanarTree) -> Tuple[HalfTree, HalfTree]:
    left, right = bracket_decompose(tree_encode(t))
    return halftree_decode(left), halftree_decode(right)


def tree_splice(h1: HalfTree, h2: HalfTree) -> PlanarTree:
    """Join the first half-tree to the reflection of the second along the trunk"""
    return tree_decode(bracket_compose(halftree_encode(h1), halftree_encode(h2)))


def tl_region_tree(h: HalfDiagram) -> HalfTree:
    """Dual tree: one vertex per region, one edge per arc or propagating line"""
    starts = {a for a, _ in h.arcs}
    trunk: List[list] = [[]]
    regions: List[list] = [trunk[-1]]
    for p in range(1, h.n + 1):
        if p in h.propagating:
            trunk.append([])
            regions = [trunk[-1]]
        elif p in starts:
            inner: list = []
            regions[-1].append(inner)
            regions.append(inner)
        else:
            regions.pop()

    def freeze(children: list) -> PlanarTree:
        return tuple(freeze(child) for child in children)

    return tuple(freeze(branches) for branches in trunk)


class TreeFamily(PascalFamily):
    """Half-trees; vertex = trunk length"""

    name = "trees"
    cap = 12

    def __init__(self, graph: Optional[RootedGraph] = None):
        super().__init__(graph or a_inf())

    def origin(self) -> HalfTree:
        return ((),)

    def edge_map(self, x: Element, key: int, target: int) -> HalfTree:
        return halftree_edge("grow" if _is_up(x, target) else "fold", x.payload)

    def classify(self, payload: HalfTree) -> Tuple[int, int]:
        return halftree_size(payload), len(payload) - 1

    def universe(self, n: int) -> List[HalfTree]:
        return [h for l in range(n + 1) for h in half_trees(n, l)]

    def encode(self, payload: HalfTree) -> str:
        return halftree_encode(payload)

    def decode(self, text: str) -> HalfTree:
        return halftree_decode(text)


class TreeSequence(CatalanSequence):
    name = "trees"
    cap = 8

    def __init__(self):
        family = TreeFamily()
        super().__init__(family, family)

    def members(self, n: int) -> List[PlanarTree]:
        return planar_trees(n)

    def decompose(self, n: int, x: PlanarTree) -> Tuple[Element, Element]:
        left, right = tree_cut(x)
        return self.bra.element(left), self.ket.element(right)

    def compose(self, n: int, bra: Element, ket: Element) -> PlanarTree:
        return tree_splice(bra.payload, ket.payload)

    def encode(self, x: PlanarTree) -> str:
        return tree_encode(x)

    def decode(self, text: str) -> PlanarTree:
        return tree_decode(text)


# Unit interval-point orders


@dataclass(frozen=True)
class IntervalOrder:
    """Strict order on unit intervals (unlabelled) and points (labelled)

    Elements are numbered in canonical order: intervals by (down-set size,
    minus up-set size), then points by down-set size.
    """

    labels: Tuple[bool, ...]
    relation: FrozenSet[Tuple[int, int]]

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def points(self) -> int:
        return sum(self.labels)

    @property
    def intervals(self) -> int:
        return self.size - self.points

    def down(self, e: int) -> int:
        return sum(1 for a, b in self.relation if b == e)

    def up(self, e: int) -> int:
        return sum(1 for a, b in self.relation if a == e)

    def __str__(self) -> str:
        names = [
            (f"p{i + 1}" if label else f"I{i + 1}") for i, label in enumerate(self.labels)
        ]
        pairs = sorted(self.relation)
        body = ",".join(f"{names[a]}<{names[b]}" for a, b in pairs)
        return "{" + " ".join(names) + (" | " + body if body else "") + "}"


def canonical_order(labels: Sequence[bool], relation) -> IntervalOrder:
    k = len(labels)
    down = [0] * k
    up = [0] * k
    for a, b in relation:
        down[b] += 1
        up[a] += 1
    order = sorted(range(k), key=lambda e: (labels[e], down[e], -up[e]))
    position = {old: new for new, old in enumerate(order)}
    return IntervalOrder(
        tuple(labels[e] for e in order),
        frozenset((position[a], position[b]) for a, b in relation),
    )


def interval_from_brackets(word: str) -> IntervalOrder:
    """Opens start elements; the k-th close ends the k-th open"""
    starts: List[int] = []
    ends: List[int] = []
    for i, ch in enumerate(word):
        if ch == OPEN:
            starts.append(i)
        elif ch == CLOSE:
            if len(ends) >= len(starts):
                raise InvalidSpecError(f"{word!r} is not a standard sequence")
            ends.append(i)
        else:
            raise InvalidSpecError(f"Unexpected symbol {ch!r} in {word!r}")
    labels = [i >= len(ends) for i in range(len(starts))]
    relation = {
        (i, j)
        for i in range(len(ends))
        for j in range(len(starts))
        if ends[i] < starts[j]
    }
    return canonical_order(labels, relation)


def interval_to_brackets(x: IntervalOrder) -> str:
    """Closes for the intervals below each element come before its open"""
    letters: List[str] = []
    closed = 0
    for e in range(x.size):
        below = x.down(e)
        if below < closed:
            raise InvalidSpecError(f"{x} is not in canonical interval form")
        letters.append(CLOSE * (below - closed) + OPEN)
        closed = below
    letters.append(CLOSE * (x.intervals - closed))
    return "".join(letters)


def _comparable(relation, a: int, b: int) -> bool:
    return (a, b) in relation or (b, a) in relation


def is_uipo(x: IntervalOrder) -> bool:
    """Semiorder with points incomparable and never below anything"""
    r = x.relation
    k = x.size
    if any(a == b or not (0 <= a < k and 0 <= b < k) for a, b in r):
        return False
    if any((b, a) in r for a, b in r):
        return False
    if any((a, d) not in r for a, b in r for c, d in r if b == c):
        return False
    if any(x.labels[a] for a, _ in r):
        return False
    for (a, b), (c, d) in combinations(sorted(r), 2):
        if len({a, b, c, d}) == 4 and not any(
            _comparable(r, s, t) for s in (a, b) for t in (c, d)
        ):
            return False
    for a, b in r:
        for c in range(k):
            if (b, c) not in r:
                continue
            for d in range(k):
                if d not in (a, b, c) and not any(
                    _comparable(r, d, e) for e in (a, b, c)
                ):
                    return False
    return True


def interval_edge(kind: str, x: IntervalOrder) -> IntervalOrder:
    """Add a point above every interval, or unlabel the lowest point"""
    if kind == "point":
        new = x.size
        relation = set(x.relation) | {(i, new) for i in range(x.size) if not x.labels[i]}
        return canonical_order(x.labels + (True,), relation)
    if kind == "unlabel":
        if not x.points:
            raise UnderflowError(f"{x} has no labelled point")
        lowest = x.intervals
        labels = list(x.labels)
        labels[lowest] = False
        return canonical_order(labels, x.relation)
    raise InvalidSpecError(f"Unknown interval edge {kind!r}")


def interval_orders(n: int) -> List[IntervalOrder]:
    """Layer-n orders from nondecreasing down-set sizes"""
    result = []
    for intervals in range(n // 2 + 1):
        points = n - 2 * intervals
        size = intervals + points
        labels = [False] * intervals + [True] * points

        def extend(downs: List[int]) -> None:
            j = len(downs)
            if j == size:
                relation = {(i, e) for e, d in enumerate(downs) for i in range(d)}
                result.append(canonical_order(labels, relation))
                return
            low = downs[-1] if downs else 0
            for d in range(low, min(j, intervals) + 1):
                extend(downs + [d])

        extend([])
    return result


def _transitive_closure(relation) -> set:
    closure = set(relation)
    while True:
        extra = {(a, d) for a, b in closure for c, d in closure if b == c} - closure
        if not extra:
            return closure
        closure |= extra


def interval_combine(x1: IntervalOrder, x2: IntervalOrder) -> IntervalOrder:
    """Glue a bra order to the reverse of a ket order

    X1 relations are kept, X2 relations reversed, every X1 interval lies below
    every X2 interval, and points fuse in increasing X1 against decreasing X2
    order.
    """
    if x1.points != x2.points:
        raise LabelCountError(
            f"{x1.points} labelled points against {x2.points}",
            errors=[{"bra": str(x1), "ket": str(x2)}],
        )
    ids: Dict[Tuple[int, int], int] = {(1, e): e for e in range(x1.size)}
    next_id = x1.size
    points1 = [e for e in range(x1.size) if x1.labels[e]]
    points2 = [e for e in range(x2.size) if x2.labels[e]][::-1]
    for p, q in zip(points1, points2):
        ids[(2, q)] = ids[(1, p)]
    for e in range(x2.size):
        if (2, e) not in ids:
            ids[(2, e)] = next_id
            next_id += 1
    relation = {(ids[(1, a)], ids[(1, b)]) for a, b in x1.relation}
    relation |= {(ids[(2, b)], ids[(2, a)]) for a, b in x2.relation}
    relation |= {
        (ids[(1, a)], ids[(2, b)])
        for a in range(x1.size)
        for b in range(x2.size)
        if not x1.labels[a] and not x2.labels[b]
    }
    return canonical_order([False] * next_id, _transitive_closure(relation))


class IntervalFamily(PascalFamily):
    """Unit interval-point orders; vertex = number of points"""

    name = "intervals"
    cap = 12

    def __init__(self, graph: Optional[RootedGraph] = None):
        super().__init__(graph or a_inf())

    def origin(self) -> IntervalOrder:
        return IntervalOrder((), frozenset())

    def edge_map(self, x: Element, key: int, target: int) -> IntervalOrder:
        return interval_edge("point" if _is_up(x, target) else "unlabel", x.payload)

    def classify(self, payload: IntervalOrder) -> Tuple[int, int]:
        return 2 * payload.intervals + payload.points, payload.points

    def universe(self, n: int) -> List[IntervalOrder]:
        return interval_orders(n)

    def encode(self, payload: IntervalOrder) -> str:
        return interval_to_brackets(payload)

    def decode(self, text: str) -> IntervalOrder:
        return interval_from_brackets(text)

    def render(self, payload: IntervalOrder) -> str:
        return str(payload)


class IntervalSequence(CatalanSequence):
    name = "intervals"
    cap = 7

    def __init__(self):
        family = IntervalFamily()
        super().__init__(family, family)

    def members(self, n: int) -> List[IntervalOrder]:
        return [x for x in interval_orders(2 * n) if x.points == 0]

    def decompose(self, n: int, x: IntervalOrder) -> Tuple[Element, Element]:
        word = interval_to_brackets(x)
        return (
            self.bra.element(interval_from_brackets(word[:n])),
            self.ket.element(interval_from_brackets(mirror(word[n:]))),
        )

    def compose(self, n: int, bra: Element, ket: Element) -> IntervalOrder:
        return interval_combine(bra.payload, ket.payload)

    def encode(self, x: IntervalOrder) -> str:
        return interval_to_brackets(x)

    def decode(self, text: str) -> IntervalOrder:
        return interval_from_brackets(text)


# Noncrossing partitions

Block = Tuple[int, ...]
Partition = Tuple[Block, ...]


def is_noncrossing(blocks: Sequence[Sequence[int]]) -> bool:
    for first, second in combinations(blocks, 2):
        for a1, a2 in combinations(sorted(first), 2):
            inside = [b for b in second if a1 < b < a2]
            if inside and len(inside) < len(second):
                return False
    return True


def noncrossing_partitions(elements: Sequence[int]) -> List[Partition]:
    """Noncrossing partitions, by the block of the first element"""
    elements = tuple(elements)
    if not elements:
        return [()]
    first, rest = elements[0], elements[1:]
    result = []
    for r in range(len(rest) + 1):
        for chosen in combinations(range(len(rest)), r):
            block = (first,) + tuple(rest[i] for i in chosen)
            bounds = [-1] + list(chosen) + [len(rest)]
            segments = [rest[bounds[i] + 1 : bounds[i + 1]] for i in range(len(bounds) - 1)]
            for pieces in product(*(noncrossing_partitions(s) for s in segments)):
                blocks = [block] + [b for piece in pieces for b in piece]
                result.append(tuple(sorted(blocks)))
    return result


def format_partition(blocks: Partition) -> str:
    return "|".join("{" + ",".join(str(e) for e in block) + "}" for block in blocks)


def ncp_from_ncpp(d: PairDiagram) -> Partition:
    """Element i owns disk positions 2i-1 and 2i; arcs glue elements together"""
    size = (d.n + d.m) // 2
    parent = list(range(size + 1))

    def find(e: int) -> int:
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for a, b in d.arcs:
        i = (d.disk_position(a) + 1) // 2
        j = (d.disk_position(b) + 1) // 2
        parent[find(i)] = find(j)
    groups: Dict[int, List[int]] = {}
    for e in range(1, size + 1):
        groups.setdefault(find(e), []).append(e)
    return tuple(sorted(tuple(block) for block in groups.values()))


def ncpp_from_ncp(blocks: Partition, n: Optional[int] = None) -> PairDiagram:
    """Draw around each block: b_j⁺ to b_(j+1)⁻, and b_k⁺ back to b_1⁻"""
    size = n if n is not None else sum(len(block) for block in blocks)
    shell = PairDiagram(size, size, ())
    pairs = []
    for block in blocks:
        for b, c in zip(block, block[1:]):
            pairs.append((2 * b, 2 * c - 1))
        pairs.append((2 * block[0] - 1, 2 * block[-1]))
    return PairDiagram.build(
        size, size, [(shell.point_at(a), shell.point_at(b)) for a, b in pairs]
    )


@dataclass(frozen=True)
class NCPHalf:
    """Noncrossing partition of the elements met by m points, with open blocks

    Element i owns points 2i-1 (i⁻) and 2i (i⁺). Open blocks continue east of
    point m and are listed by their minima.
    """

    m: int
    blocks: Partition
    open: FrozenSet[int]

    @property
    def elements(self) -> int:
        return (self.m + 1) // 2

    def dangling(self) -> List[int]:
        """Points whose strand leaves to the east"""
        points = []
        for block in self.blocks:
            if block[0] in self.open:
                points.append(2 * block[0] - 1)
                if 2 * block[-1] <= self.m:
                    points.append(2 * block[-1])
        return sorted(points)

    def word(self) -> str:
        letters = [OPEN] * self.m
        for block in self.blocks:
            for c in block[1:]:
                letters[2 * c - 2] = CLOSE
            if block[0] not in self.open:
                letters[2 * block[-1] - 1] = CLOSE
        return "".join(letters)

    def __str__(self) -> str:
        shown = [
            "{" + ",".join(str(e) for e in block) + ("…" if block[0] in self.open else "") + "}"
            for block in self.blocks
        ]
        return f"{self.m}:" + "|".join(shown)


def _augmented_noncrossing(blocks: Partition, opened: FrozenSet[int], top: int) -> bool:
    open_blocks = sorted((b for b in blocks if b[0] in opened), key=lambda b: -b[0])
    extended = [
        b + (top + 1 + open_blocks.index(b),) if b in open_blocks else b for b in blocks
    ]
    return is_noncrossing(extended)


def ncp_halves(m: int) -> List[NCPHalf]:
    """Partitions of the met elements with every admissible choice of open blocks"""
    k = (m + 1) // 2
    result = []
    for blocks in noncrossing_partitions(range(1, k + 1)):
        minima = [b[0] for b in blocks]
        for r in range(len(minima) + 1):
            for opened in combinations(minima, r):
                chosen = frozenset(opened)
                if m % 2 and not any(k in b and b[0] in chosen for b in blocks):
                    continue
                if _augmented_noncrossing(blocks, chosen, k):
                    result.append(NCPHalf(m, blocks, chosen))
    return result


def ncp_edge(kind: str, h: NCPHalf) -> NCPHalf:
    """Add point m+1, either as a new dangling strand or tied to the rightmost one"""
    m = h.m + 1
    blocks = list(h.blocks)
    if m % 2:
        e = (m + 1) // 2
        if kind == "up":
            return NCPHalf(m, tuple(sorted(blocks + [(e,)])), h.open | {e})
        candidates = [b for b in blocks if b[0] in h.open and 2 * b[-1] <= h.m]
        if not candidates:
            raise NoPropagatingLineError(f"{h} has no dangling strand to tie")
        owner = max(candidates, key=lambda b: b[-1])
        blocks[blocks.index(owner)] = owner + (e,)
        return NCPHalf(m, tuple(sorted(blocks)), h.open)
    e = m // 2
    owner = next(b for b in blocks if e in b)
    if owner[0] not in h.open:
        raise InvalidSpecError(f"The block of {e} in {h} is already closed")
    if kind == "up":
        return NCPHalf(m, h.blocks, h.open)
    return NCPHalf(m, h.blocks, h.open - {owner[0]})


def ncp_restrict(blocks: Partition, n: int) -> NCPHalf:
    """The first n points of a partition of n elements (2n points)"""
    k = (n + 1) // 2
    kept = []
    opened = set()
    for block in blocks:
        head = tuple(e for e in block if e <= k)
        if not head:
            continue
        kept.append(head)
        if 2 * block[-1] > n:
            opened.add(head[0])
    return NCPHalf(n, tuple(sorted(kept)), frozenset(opened))


def ncp_reverse(blocks: Partition, size: int) -> Partition:
    return tuple(sorted(tuple(sorted(size + 1 - e for e in b)) for b in blocks))


class NCPFamily(PascalFamily):
    """Half noncrossing partitions; vertex = number of dangling points"""

    name = "ncp"
    cap = 12

    def __init__(self, graph: Optional[RootedGraph] = None):
        super().__init__(graph or a_inf())

    def origin(self) -> NCPHalf:
        return NCPHalf(0, (), frozenset())

    def edge_map(self, x: Element, key: int, target: int) -> NCPHalf:
        return ncp_edge("up" if _is_up(x, target) else "down", x.payload)

    def classify(self, payload: NCPHalf) -> Tuple[int, int]:
        return payload.m, len(payload.dangling())

    def universe(self, n: int) -> List[NCPHalf]:
        return ncp_halves(n)

    def encode(self, payload: NCPHalf) -> str:
        return str(payload)

    def decode(self, text: str) -> NCPHalf:
        head, _, body = text.partition(":")
        try:
            m = int(head)
            blocks, opened = [], set()
            for chunk in filter(None, body.split("|")):
                inner = chunk.strip("{}")
                is_open = inner.endswith("…")
                block = tuple(int(e) for e in inner.rstrip("…").split(","))
                blocks.append(block)
                if is_open:
                    opened.add(block[0])
        except ValueError as exc:
            raise InvalidSpecError(f"Malformed half partition {text!r}") from exc
        return NCPHalf(m, tuple(sorted(blocks)), frozenset(opened))


class NCPSequence(CatalanSequence):
    """Noncrossing partitions split by restriction to the first n points"""

    name = "ncp"
    cap = 7

    def __init__(self):
        family = NCPFamily()
        super().__init__(family, family)

    def members(self, n: int) -> List[Partition]:
        return noncrossing_partitions(range(1, n + 1))

    def decompose(self, n: int, x: Partition) -> Tuple[Element, Element]:
        return (
            self.bra.element(ncp_restrict(x, n)),
            self.ket.element(ncp_restrict(ncp_reverse(x, n), n)),
        )

    def compose(self, n: int, bra: Element, ket: Element) -> Partition:
        top = HalfDiagram.from_sequence(bra.payload.word())
        bottom = HalfDiagram.from_sequence(ket.payload.word())
        return ncp_from_ncpp(tl_join(top, bottom))

    def encode(self, x: Partition) -> str:
        return format_partition(x)
