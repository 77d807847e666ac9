"""
Decorated Catalan families: blob diagrams, λ-ary brackets, coloured half-trees,
contour diagrams and D-type blob diagrams
"""
import logging
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

import sympy

from pascal_arrays.core.exceptions import (
    ColourError,
    DecorationError,
    InvalidSpecError,
    ParityError,
    SizeMismatchError,
    UnderflowError,
)
from pascal_arrays.services.diagrams import (
    CLOSE,
    OPEN,
    Arc,
    HalfDiagram,
    PairDiagram,
    enum_ncpp,
    half_diagrams,
    tl_cut,
    tl_edge,
    tl_join,
)
from pascal_arrays.services.graphs import (
    Primed,
    RootedGraph,
    a_inf_inf,
    a_tree,
    d_inf,
    validate_lambda,
)
from pascal_arrays.services.pascal import CatalanSequence, Element, PascalFamily
from pascal_arrays.services.typea import PlanarTree, half_trees

logger = logging.getLogger(__name__)

BLOB = "•"
SQUARE = "□"


def top_level(arcs: Sequence[Arc]) -> List[Arc]:
    """Arcs not nested under another arc; arcs sorted by left end"""
    result = []
    reach = 0
    for a, b in sorted(arcs):
        if a > reach:
            result.append((a, b))
            reach = b
    return result


def exposed_arcs(h: HalfDiagram) -> List[Arc]:
    """Top-level arcs west of the first propagating line"""
    limit = h.propagating[0] if h.propagating else h.n + 1
    return [arc for arc in top_level(h.arcs) if arc[1] < limit]


def exposed_count(h: HalfDiagram) -> int:
    return len(exposed_arcs(h)) + (1 if h.propagating else 0)


def top_level_chords(d: PairDiagram) -> List[Arc]:
    """Chords touching the west face, in disk order"""
    result = []
    reach = 0
    for a, b in d.arcs:
        start, end = d.disk_position(a), d.disk_position(b)
        if start > reach:
            result.append((a, b))
            reach = end
    return result


def _decorate(word: str, suffixes: Dict[int, str]) -> str:
    return "".join(ch + suffixes.get(i, "") for i, ch in enumerate(word, start=1))


def _undecorate(text: str) -> Tuple[str, Dict[int, str]]:
    letters: List[str] = []
    suffixes: Dict[int, str] = {}
    for ch in text:
        if ch in (OPEN, CLOSE):
            letters.append(ch)
        elif letters:
            suffixes[len(letters)] = suffixes.get(len(letters), "") + ch
        else:
            raise InvalidSpecError(f"Decoration before any point in {text!r}")
    return "".join(letters), suffixes


def _exposed_starts(h: HalfDiagram) -> List[int]:
    starts = [a for a, _ in exposed_arcs(h)]
    if h.propagating:
        starts.append(h.propagating[0])
    return starts


def _split_chords(
    d: PairDiagram, decorations: Sequence
) -> Tuple[list, Optional[object], list]:
    """Decorations of north chords, of the first through line, of south chords"""
    north, line, south = [], None, []
    for (a, b), mark in zip(top_level_chords(d), decorations):
        if a > 0 and b > 0:
            north.append(mark)
        elif a < 0 and b < 0:
            south.append(mark)
        else:
            line = mark
    return north, line, south[::-1]


# Blob diagrams on A∞^∞


@dataclass(frozen=True)
class BlobHalf:
    """Half-diagram with a blob or square on every west-exposed line"""

    half: HalfDiagram
    marks: Tuple[str, ...]

    def encode(self) -> str:
        return _decorate(self.half.encode(), dict(zip(_exposed_starts(self.half), self.marks)))

    @classmethod
    def decode(cls, text: str) -> "BlobHalf":
        word, suffixes = _undecorate(text)
        half = HalfDiagram.from_sequence(word)
        return cls(half, tuple(suffixes.get(p, "") for p in _exposed_starts(half)))


def blob_vertex(h: BlobHalf) -> int:
    if len(h.marks) != exposed_count(h.half) or any(
        m not in (BLOB, SQUARE) for m in h.marks
    ):
        raise DecorationError(
            f"{h.encode()!r} must decorate exactly its west-exposed lines",
            errors=[{"marks": list(h.marks)}],
        )
    if not h.half.l:
        return 0
    return h.half.l if h.marks[-1] == BLOB else -h.half.l


def blob_edge(kind: str, h: BlobHalf, mark: Optional[str] = None) -> BlobHalf:
    """φ¹ adds a line (decorated when it becomes the first line); φᵘ bends the last"""
    if kind == "up":
        if h.half.l == 0:
            if mark not in (BLOB, SQUARE):
                raise DecorationError("A new first line needs a blob or a square")
            return BlobHalf(tl_edge("up", h.half), h.marks + (mark,))
        if mark is not None:
            raise DecorationError("Only the first propagating line is decorated")
        return BlobHalf(tl_edge("up", h.half), h.marks)
    if kind == "down":
        return BlobHalf(tl_edge("down", h.half), h.marks)
    raise InvalidSpecError(f"Unknown blob edge {kind!r}")


class BlobFamily(PascalFamily):
    """D^b half-diagrams; vertex ±l from the first line's decoration"""

    name = "blob"
    cap = 10

    def __init__(self, graph: Optional[RootedGraph] = None):
        super().__init__(graph or a_inf_inf())

    def origin(self) -> BlobHalf:
        return BlobHalf(HalfDiagram(0, (), ()), ())

    def edge_map(self, x: Element, key: int, target: int) -> BlobHalf:
        source = x.vertex
        if source == 0:
            return blob_edge("up", x.payload, BLOB if target > 0 else SQUARE)
        away = abs(target) > abs(source)
        return blob_edge("up" if away else "down", x.payload)

    def classify(self, payload: BlobHalf) -> Tuple[int, int]:
        return payload.half.n, blob_vertex(payload)

    def universe(self, n: int) -> List[BlobHalf]:
        return [
            BlobHalf(h, marks)
            for h in half_diagrams(n)
            for marks in product((BLOB, SQUARE), repeat=exposed_count(h))
        ]

    def encode(self, payload: BlobHalf) -> str:
        return payload.encode()

    def decode(self, text: str) -> BlobHalf:
        return BlobHalf.decode(text)


@dataclass(frozen=True)
class BlobDiagram:
    """D^b(n, n): pair diagram with a mark on every chord touching the west face"""

    pair: PairDiagram
    marks: Tuple[str, ...]

    def encode(self) -> str:
        chords = top_level_chords(self.pair)
        starts = [self.pair.disk_position(a) for a, _ in chords]
        return _decorate(self.pair.disk_word(), dict(zip(starts, self.marks)))

    @classmethod
    def decode(cls, text: str) -> "BlobDiagram":
        pair, suffixes = _decode_pair(text)
        starts = [pair.disk_position(a) for a, _ in top_level_chords(pair)]
        if set(suffixes) - set(starts):
            raise DecorationError(f"Mark on a chord away from the west face in {text!r}")
        marks = tuple(suffixes.get(s, "") for s in starts)
        if any(mark not in (BLOB, SQUARE) for mark in marks):
            raise DecorationError(f"Every west chord of {text!r} needs {BLOB} or {SQUARE}")
        return cls(pair, marks)


def _decode_pair(text: str) -> Tuple[PairDiagram, Dict[int, str]]:
    word, suffixes = _undecorate(text)
    if len(word) % 2:
        raise SizeMismatchError(f"Disk word {word!r} has odd length")
    n = len(word) // 2
    return PairDiagram.from_disk_word(n, n, word), suffixes


def enum_blob(n: int) -> List[BlobDiagram]:
    return [
        BlobDiagram(d, marks)
        for d in enum_ncpp(n)
        for marks in product((BLOB, SQUARE), repeat=len(top_level_chords(d)))
    ]


def blob_cut(d: BlobDiagram) -> Tuple[BlobHalf, BlobHalf]:
    """Cut, giving the first through line's mark to both halves"""
    top, bottom = tl_cut(d.pair)
    north, line, south = _split_chords(d.pair, d.marks)
    tail = (line,) if line is not None else ()
    return BlobHalf(top, tuple(north) + tail), BlobHalf(bottom, tuple(south) + tail)


def blob_join(top: BlobHalf, bottom: BlobHalf) -> BlobDiagram:
    if blob_vertex(top) != blob_vertex(bottom):
        raise DecorationError(
            f"Halves {top.encode()!r} and {bottom.encode()!r} lie over different vertices"
        )
    pair = tl_join(top.half, bottom.half)
    if top.half.l:
        north, line, south = top.marks[:-1], (top.marks[-1],), bottom.marks[:-1]
    else:
        north, line, south = top.marks, (), bottom.marks
    return BlobDiagram(pair, tuple(north) + line + tuple(reversed(south)))


class BlobSequence(CatalanSequence):
    name = "blob"
    cap = 6

    def __init__(self):
        family = BlobFamily()
        super().__init__(family, family)

    def members(self, n: int) -> List[BlobDiagram]:
        return enum_blob(n)

    def decompose(self, n: int, x: BlobDiagram) -> Tuple[Element, Element]:
        top, bottom = blob_cut(x)
        return self.bra.element(top), self.ket.element(bottom)

    def compose(self, n: int, bra: Element, ket: Element) -> BlobDiagram:
        return blob_join(bra.payload, ket.payload)

    def encode(self, x: BlobDiagram) -> str:
        return x.encode()


def quantum_integer(n: int, q) -> sympy.Expr:
    """[n] = (q^n - q^-n) / (q - q^-1)"""
    q = sympy.sympify(q)
    return sympy.simplify((q**n - q ** (-n)) / (q - 1 / q))


def blob_delta_prime(m: int, q) -> sympy.Expr:
    """Evaluation helper δ' = [m+1]/[m]"""
    if m == 0:
        raise InvalidSpecError("[0] = 0 has no inverse")
    return sympy.simplify(quantum_integer(m + 1, q) / quantum_integer(m, q))


# λ-ary bracket sequences on 𝒜(λ)

BRACKET_TYPES = ("()", "[]", "{}", "<>")

Symbol = Tuple[bool, int]
LambdaWord = Tuple[Symbol, ...]


class _Widths:
    def __init__(self, lam: Sequence[int]):
        values = tuple(lam)
        self.lam = validate_lambda(values) if values else (1,)

    def __call__(self, depth: int) -> int:
        return self.lam[min(depth, len(self.lam)) - 1]


def _stack_of(word: LambdaWord) -> List[int]:
    stack: List[int] = []
    for i, (is_open, choice) in enumerate(word):
        if is_open:
            stack.append(choice)
        else:
            if not stack or stack[-1] != choice:
                raise InvalidSpecError(f"Close at position {i + 1} does not match its open")
            stack.pop()
    return stack


def lambda_bracket_edge(
    kind: str, word: LambdaWord, widths: _Widths, choice: Optional[int] = None
) -> LambdaWord:
    """Open a bracket of the branch taken, or close the innermost one"""
    stack = _stack_of(word)
    if kind == "open":
        width = widths(len(stack) + 1)
        if choice is None or not 1 <= choice <= width:
            raise InvalidSpecError(f"Choice {choice} outside 1..{width} at depth {len(stack) + 1}")
        return word + ((True, choice),)
    if kind == "close":
        if not stack:
            raise UnderflowError("No open bracket to close")
        return word + ((False, stack[-1]),)
    raise InvalidSpecError(f"Unknown bracket edge {kind!r}")


def lambda_bracket_decompose(word: LambdaWord) -> Tuple[LambdaWord, LambdaWord]:
    if len(word) % 2 or _stack_of(word):
        raise InvalidSpecError("Not a matched λ-bracket sequence")
    n = len(word) // 2
    return word[:n], tuple((not is_open, c) for is_open, c in reversed(word[n:]))


def lambda_bracket_compose(left: LambdaWord, right: LambdaWord) -> LambdaWord:
    if _stack_of(left) != _stack_of(right):
        raise SizeMismatchError("Halves end with different open brackets")
    return left + tuple((not is_open, c) for is_open, c in reversed(right))


class LambdaBracketFamily(PascalFamily):
    """Typed bracket sequences; vertex = branch choices of the unmatched opens"""

    cap = 8

    def __init__(self, lam: Sequence[int]):
        graph = a_tree(lam)
        super().__init__(graph)
        self.widths = _Widths(lam)
        if max(self.widths.lam) > len(BRACKET_TYPES):
            raise InvalidSpecError(f"At most {len(BRACKET_TYPES)} bracket types")
        self.name = "lambda:" + ",".join(str(x) for x in self.widths.lam)

    def origin(self) -> LambdaWord:
        return ()

    def edge_map(self, x: Element, key: int, target: Tuple[int, ...]) -> LambdaWord:
        if len(target) > len(x.vertex):
            return lambda_bracket_edge("open", x.payload, self.widths, target[-1])
        return lambda_bracket_edge("close", x.payload, self.widths)

    def classify(self, payload: LambdaWord) -> Tuple[int, Tuple[int, ...]]:
        stack: List[int] = []
        for is_open, choice in payload:
            if is_open:
                if not 1 <= choice <= self.widths(len(stack) + 1):
                    raise InvalidSpecError(f"Choice {choice} at depth {len(stack) + 1}")
                stack.append(choice)
            elif not stack or stack.pop() != choice:
                raise InvalidSpecError("Mismatched close bracket")
        return len(payload), tuple(stack)

    def universe(self, n: int) -> List[LambdaWord]:
        words: List[LambdaWord] = []

        def extend(word: LambdaWord, stack: Tuple[int, ...]) -> None:
            if len(word) == n:
                words.append(word)
                return
            for c in range(1, self.widths(len(stack) + 1) + 1):
                extend(word + ((True, c),), stack + (c,))
            if stack:
                extend(word + ((False, stack[-1]),), stack[:-1])

        extend((), ())
        return words

    def encode(self, payload: LambdaWord) -> str:
        letters = []
        types: List[int] = []
        for is_open, choice in payload:
            if is_open:
                depth = len(types) + 1
                if self.widths(depth) > 1:
                    kind = choice
                else:
                    kind = types[-1] if types else 1
                types.append(kind)
                letters.append(BRACKET_TYPES[kind - 1][0])
            else:
                letters.append(BRACKET_TYPES[types.pop() - 1][1])
        return "".join(letters)

    def decode(self, text: str) -> LambdaWord:
        word: List[Symbol] = []
        stack: List[Tuple[int, int]] = []
        for ch in text:
            opens = [i for i, pair in enumerate(BRACKET_TYPES) if pair[0] == ch]
            closes = [i for i, pair in enumerate(BRACKET_TYPES) if pair[1] == ch]
            if opens:
                kind = opens[0] + 1
                depth = len(stack) + 1
                if self.widths(depth) > 1:
                    choice = kind
                else:
                    choice = 1
                    inherited = stack[-1][0] if stack else 1
                    if kind != inherited:
                        raise InvalidSpecError(f"Bracket {ch!r} must repeat its enclosing type")
                stack.append((kind, choice))
                word.append((True, choice))
            elif closes:
                if not stack or stack[-1][0] != closes[0] + 1:
                    raise InvalidSpecError(f"Unmatched close {ch!r} in {text!r}")
                word.append((False, stack.pop()[1]))
            else:
                raise InvalidSpecError(f"Unexpected symbol {ch!r} in {text!r}")
        return tuple(word)


class LambdaBracketSequence(CatalanSequence):
    cap = 5

    def __init__(self, lam: Sequence[int]):
        family = LambdaBracketFamily(lam)
        super().__init__(family, family)
        self.name = family.name

    def members(self, n: int) -> List[LambdaWord]:
        return [w for w in self.bra.universe(2 * n) if not _stack_of(w)]

    def decompose(self, n: int, x: LambdaWord) -> Tuple[Element, Element]:
        left, right = lambda_bracket_decompose(x)
        return self.bra.element(left), self.ket.element(right)

    def compose(self, n: int, bra: Element, ket: Element) -> LambdaWord:
        return lambda_bracket_compose(bra.payload, ket.payload)

    def encode(self, x: LambdaWord) -> str:
        return self.bra.encode(x)

    def decode(self, text: str) -> LambdaWord:
        return self.bra.decode(text)


# Coloured half-trees on 𝒜(λ)

ColouredTree = Tuple[Tuple[int, "ColouredTree"], ...]
ColouredHalfTree = Tuple[Tuple[int, ColouredTree], ...]


def _coloured_size(t: ColouredTree) -> int:
    return sum(1 + _coloured_size(sub) for _, sub in t)


def coloured_tree_edge(
    kind: str, h: ColouredHalfTree, colour: Optional[int] = None
) -> ColouredHalfTree:
    """Grow the trunk by a vertex of the given colour, or fold its top edge"""
    if kind == "grow":
        if colour is None:
            raise ColourError("A new trunk vertex needs a colour")
        return h + ((colour, ()),)
    if kind == "fold":
        if len(h) < 2:
            raise UnderflowError("Half-tree has no trunk edge to fold")
        below_colour, below_branches = h[-2]
        return h[:-2] + ((below_colour, below_branches + (h[-1],)),)
    raise InvalidSpecError(f"Unknown half-tree edge {kind!r}")


def _tree_symbols(t: ColouredTree) -> LambdaWord:
    word: LambdaWord = ()
    for colour, sub in t:
        word += ((True, colour),) + _tree_symbols(sub) + ((False, colour),)
    return word


def coloured_tree_bijection(h: ColouredHalfTree) -> LambdaWord:
    """Boundary walk of a coloured half-tree as a λ-bracket sequence"""
    word: LambdaWord = _tree_symbols(h[0][1])
    for colour, branches in h[1:]:
        word += ((True, colour),) + _tree_symbols(branches)
    return word


def coloured_tree_from_brackets(word: LambdaWord) -> ColouredHalfTree:
    unmatched: List[int] = []
    for i, (is_open, _) in enumerate(word):
        if is_open:
            unmatched.append(i)
        elif unmatched:
            unmatched.pop()
    spine = set(unmatched)
    trunk: List[list] = [[0, []]]
    nodes: List[list] = [trunk[-1]]
    for i, (is_open, colour) in enumerate(word):
        if i in spine:
            trunk.append([colour, []])
            nodes = [trunk[-1]]
        elif is_open:
            node = [colour, []]
            nodes[-1][1].append(node)
            nodes.append(node)
        else:
            nodes.pop()

    def freeze(node: list) -> Tuple[int, ColouredTree]:
        return node[0], tuple(freeze(child) for child in node[1])

    return tuple(freeze(vertex) for vertex in trunk)


class ColouredTreeFamily(PascalFamily):
    """Half-trees whose depth-i vertices carry one of λ_i colours"""

    cap = 8

    def __init__(self, lam: Sequence[int]):
        super().__init__(a_tree(lam))
        self.brackets = LambdaBracketFamily(lam)
        self.widths = self.brackets.widths
        self.name = "coloured:" + ",".join(str(x) for x in self.widths.lam)

    def origin(self) -> ColouredHalfTree:
        return ((0, ()),)

    def edge_map(self, x: Element, key: int, target: Tuple[int, ...]) -> ColouredHalfTree:
        if len(target) > len(x.vertex):
            return coloured_tree_edge("grow", x.payload, target[-1])
        return coloured_tree_edge("fold", x.payload)

    def _check(self, t: ColouredTree, depth: int) -> None:
        for colour, sub in t:
            if not 1 <= colour <= self.widths(depth):
                raise ColourError(
                    f"Colour {colour} outside 1..{self.widths(depth)} at depth {depth}"
                )
            self._check(sub, depth + 1)

    def classify(self, payload: ColouredHalfTree) -> Tuple[int, Tuple[int, ...]]:
        for depth, (colour, branches) in enumerate(payload):
            if depth and not 1 <= colour <= self.widths(depth):
                raise ColourError(
                    f"Trunk colour {colour} outside 1..{self.widths(depth)} at depth {depth}"
                )
            self._check(branches, depth + 1)
        size = len(payload) - 1 + 2 * sum(_coloured_size(b) for _, b in payload)
        return size, tuple(colour for colour, _ in payload[1:])

    def _colourings(self, t: PlanarTree, depth: int) -> List[ColouredTree]:
        options = [
            [
                (c, sub)
                for c in range(1, self.widths(depth) + 1)
                for sub in self._colourings(child, depth + 1)
            ]
            for child in t
        ]
        return [tuple(choice) for choice in product(*options)]

    def universe(self, n: int) -> List[ColouredHalfTree]:
        result = []
        for l in range(n + 1):
            for tree in half_trees(n, l):
                per_vertex = []
                for depth, branches in enumerate(tree):
                    colours = [0] if depth == 0 else range(1, self.widths(depth) + 1)
                    per_vertex.append(
                        [
                            (c, coloured)
                            for c in colours
                            for coloured in self._colourings(branches, depth + 1)
                        ]
                    )
                result.extend(tuple(choice) for choice in product(*per_vertex))
        return result

    def encode(self, payload: ColouredHalfTree) -> str:
        return self.brackets.encode(coloured_tree_bijection(payload))

    def decode(self, text: str) -> ColouredHalfTree:
        return coloured_tree_from_brackets(self.brackets.decode(text))


# Contour diagrams on 𝒜(d^k, 1)


def half_levels(h: HalfDiagram) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Enclosing chords of each arc and line; a line at p counts as (p, ∞)"""
    arc_levels = tuple(
        sum(1 for c, d in h.arcs if c < a and b < d) + sum(1 for p in h.propagating if p < a)
        for a, b in h.arcs
    )
    return arc_levels, tuple(range(h.l))


def cover_levels(d: PairDiagram) -> Tuple[int, ...]:
    """Nesting depth of every chord seen from the west face"""
    spans = [(d.disk_position(a), d.disk_position(b)) for a, b in d.arcs]
    return tuple(sum(1 for c, e in spans if c < s and t < e) for s, t in spans)


@dataclass(frozen=True)
class ContourHalf:
    """Half-diagram with blob counts on arcs and lines"""

    half: HalfDiagram
    arc_blobs: Tuple[int, ...]
    line_blobs: Tuple[int, ...]

    def encode(self) -> str:
        suffixes = {a: str(c) for (a, _), c in zip(self.half.arcs, self.arc_blobs) if c}
        suffixes.update({p: str(c) for p, c in zip(self.half.propagating, self.line_blobs) if c})
        return _decorate(self.half.encode(), suffixes)

    @classmethod
    def decode(cls, text: str) -> "ContourHalf":
        word, suffixes = _undecorate(text)
        half = HalfDiagram.from_sequence(word)
        try:
            return cls(
                half,
                tuple(int(suffixes.get(a, 0)) for a, _ in half.arcs),
                tuple(int(suffixes.get(p, 0)) for p in half.propagating),
            )
        except ValueError as exc:
            raise InvalidSpecError(f"Malformed blob counts in {text!r}") from exc


def _check_blobs(blobs: Sequence[int], levels: Sequence[int], k: int, d: int) -> None:
    for count, level in zip(blobs, levels):
        if not 0 <= count < d:
            raise DecorationError(f"{count} blobs with only {d} colours")
        if count and level >= k:
            raise DecorationError(f"Blob on a chord at level {level}, limit {k}")


def contour_edge(
    kind: str, h: ContourHalf, blobs: int = 0, k: int = 1, d: int = 2
) -> ContourHalf:
    """Add a line carrying `blobs` blobs, or bend the last line keeping its blobs"""
    if kind == "up":
        _check_blobs([blobs], [h.half.l], k, d)
        return ContourHalf(tl_edge("up", h.half), h.arc_blobs, h.line_blobs + (blobs,))
    if kind == "down":
        half = tl_edge("down", h.half)
        counts = dict(zip(h.half.arcs, h.arc_blobs))
        counts[(h.half.propagating[-1], half.n)] = h.line_blobs[-1]
        return ContourHalf(half, tuple(counts[arc] for arc in half.arcs), h.line_blobs[:-1])
    raise InvalidSpecError(f"Unknown contour edge {kind!r}")


@dataclass(frozen=True)
class ContourDiagram:
    pair: PairDiagram
    blobs: Tuple[int, ...]

    def encode(self) -> str:
        starts = [self.pair.disk_position(a) for a, _ in self.pair.arcs]
        return _decorate(
            self.pair.disk_word(), {s: str(c) for s, c in zip(starts, self.blobs) if c}
        )

    @classmethod
    def decode(cls, text: str) -> "ContourDiagram":
        pair, suffixes = _decode_pair(text)
        starts = [pair.disk_position(a) for a, _ in pair.arcs]
        if set(suffixes) - set(starts):
            raise DecorationError(f"Blob count after a closing point in {text!r}")
        try:
            return cls(pair, tuple(int(suffixes.get(s, 0)) for s in starts))
        except ValueError as exc:
            raise DecorationError(f"Malformed blob counts in {text!r}") from exc


def enum_contour(n: int, k: int, d: int) -> List[ContourDiagram]:
    """Level-k d-colour contour diagrams with 2n points"""
    if k < 0 or d < 1:
        raise InvalidSpecError("Contour diagrams need k ≥ 0 and d ≥ 1")
    result = []
    for pair in enum_ncpp(n):
        options = [range(d) if level < k else (0,) for level in cover_levels(pair)]
        result.extend(ContourDiagram(pair, blobs) for blobs in product(*options))
    return result


def contour_cut(x: ContourDiagram) -> Tuple[ContourHalf, ContourHalf]:
    """Cut; each cut line keeps its blob count on both halves"""
    top, bottom = tl_cut(x.pair)
    north: Dict[Arc, int] = {}
    south: Dict[Arc, int] = {}
    lines: Dict[int, int] = {}
    for (a, b), count in zip(x.pair.arcs, x.blobs):
        if a > 0 and b > 0:
            north[(min(a, b), max(a, b))] = count
        elif a < 0 and b < 0:
            south[(min(-a, -b), max(-a, -b))] = count
        else:
            lines[max(a, b)] = count
    line_blobs = tuple(lines[p] for p in top.propagating)
    return (
        ContourHalf(top, tuple(north[arc] for arc in top.arcs), line_blobs),
        ContourHalf(bottom, tuple(south[arc] for arc in bottom.arcs), line_blobs),
    )


def contour_stitch(top: ContourHalf, bottom: ContourHalf) -> ContourDiagram:
    if top.line_blobs != bottom.line_blobs:
        raise DecorationError("Cut lines carry different blob counts")
    pair = tl_join(top.half, bottom.half)
    counts: Dict[Arc, int] = {}
    for (a, b), c in zip(top.half.arcs, top.arc_blobs):
        counts[(a, b)] = c
    for (a, b), c in zip(bottom.half.arcs, bottom.arc_blobs):
        counts[(-b, -a)] = c
    for p, q, c in zip(top.half.propagating, bottom.half.propagating, top.line_blobs):
        counts[(p, -q)] = c
    blobs = []
    for a, b in pair.arcs:
        key = (a, b) if a > 0 and b > 0 else None
        if key is None and a < 0 and b < 0:
            key = (min(a, b), max(a, b))
        if key is None:
            key = (max(a, b), min(a, b))
        blobs.append(counts[key])
    return ContourDiagram(pair, tuple(blobs))


class ContourFamily(PascalFamily):
    """Contour half-diagrams; vertex (d_1..d_l) with d_i - 1 blobs on line i"""

    cap = 8

    def __init__(self, d: int, k: int):
        if k < 0 or d < 1:
            raise InvalidSpecError("Contour diagrams need k ≥ 0 and d ≥ 1")
        super().__init__(a_tree((d,) * k + (1,)))
        self.d = d
        self.k = k
        self.name = f"contour:{d},{k}"

    def origin(self) -> ContourHalf:
        return ContourHalf(HalfDiagram(0, (), ()), (), ())

    def edge_map(self, x: Element, key: int, target: Tuple[int, ...]) -> ContourHalf:
        if len(target) > len(x.vertex):
            return contour_edge("up", x.payload, target[-1] - 1, self.k, self.d)
        return contour_edge("down", x.payload, k=self.k, d=self.d)

    def classify(self, payload: ContourHalf) -> Tuple[int, Tuple[int, ...]]:
        arc_levels, line_levels = half_levels(payload.half)
        _check_blobs(payload.arc_blobs, arc_levels, self.k, self.d)
        _check_blobs(payload.line_blobs, line_levels, self.k, self.d)
        return payload.half.n, tuple(c + 1 for c in payload.line_blobs)

    def universe(self, n: int) -> List[ContourHalf]:
        result = []
        for h in half_diagrams(n):
            arc_levels, line_levels = half_levels(h)
            arc_options = [range(self.d) if lv < self.k else (0,) for lv in arc_levels]
            line_options = [range(self.d) if lv < self.k else (0,) for lv in line_levels]
            for arc_blobs in product(*arc_options):
                for line_blobs in product(*line_options):
                    result.append(ContourHalf(h, arc_blobs, line_blobs))
        return result

    def encode(self, payload: ContourHalf) -> str:
        return payload.encode()

    def decode(self, text: str) -> ContourHalf:
        return ContourHalf.decode(text)


class ContourSequence(CatalanSequence):
    cap = 8

    def __init__(self, d: int, k: int):
        family = ContourFamily(d, k)
        super().__init__(family, family)
        self.name = family.name

    def members(self, n: int) -> List[ContourDiagram]:
        return enum_contour(n, self.bra.k, self.bra.d)

    def decompose(self, n: int, x: ContourDiagram) -> Tuple[Element, Element]:
        top, bottom = contour_cut(x)
        return self.bra.element(top), self.ket.element(bottom)

    def compose(self, n: int, bra: Element, ket: Element) -> ContourDiagram:
        return contour_stitch(bra.payload, ket.payload)

    def encode(self, x: ContourDiagram) -> str:
        return x.encode()


# D-type blob diagrams on D∞


@dataclass(frozen=True)
class DHalf:
    """Half-diagram with an optional blob on each west-exposed line"""

    half: HalfDiagram
    blobs: Tuple[bool, ...]

    def encode(self) -> str:
        starts = _exposed_starts(self.half)
        return _decorate(
            self.half.encode(), {p: "b" for p, blob in zip(starts, self.blobs) if blob}
        )

    @classmethod
    def decode(cls, text: str) -> "DHalf":
        word, suffixes = _undecorate(text)
        half = HalfDiagram.from_sequence(word)
        return cls(half, tuple(suffixes.get(p) == "b" for p in _exposed_starts(half)))


def dblob_vertex(h: DHalf):
    if len(h.blobs) != exposed_count(h.half):
        raise DecorationError(f"{h.encode()!r} decorates a line that is not exposed")
    odd = sum(h.blobs) % 2
    if h.half.l:
        if odd:
            raise ParityError(f"{h.encode()!r} has an odd number of blobs")
        return h.half.l
    return Primed(0) if odd else 0


def dblob_edge(kind: str, h: DHalf) -> DHalf:
    """φ¹, φ¹' (add a blobbed first line), φᵘ, and φᵘ' (bend the first line, toggling its blob)"""
    if kind in ("up", "up_blob"):
        half = tl_edge("up", h.half)
        if h.half.l == 0:
            return DHalf(half, h.blobs + (kind == "up_blob",))
        if kind == "up_blob":
            raise DecorationError("Only a new first line may carry a blob")
        return DHalf(half, h.blobs)
    if kind in ("down", "down_toggle"):
        half = tl_edge("down", h.half)
        if kind == "down_toggle":
            if h.half.l != 1:
                raise DecorationError("Only the first line can be bent with a blob")
            return DHalf(half, h.blobs[:-1] + (not h.blobs[-1],))
        return DHalf(half, h.blobs)
    raise InvalidSpecError(f"Unknown D-type edge {kind!r}")


@dataclass(frozen=True)
class DDiagram:
    """D(n, n) with optional blobs on chords touching the west face, even in total"""

    pair: PairDiagram
    blobs: Tuple[bool, ...]

    def encode(self) -> str:
        starts = [self.pair.disk_position(a) for a, _ in top_level_chords(self.pair)]
        return _decorate(
            self.pair.disk_word(), {s: "b" for s, blob in zip(starts, self.blobs) if blob}
        )

    @classmethod
    def decode(cls, text: str) -> "DDiagram":
        pair, suffixes = _decode_pair(text)
        starts = [pair.disk_position(a) for a, _ in top_level_chords(pair)]
        if set(suffixes) - set(starts) or set(suffixes.values()) - {"b"}:
            raise DecorationError(f"Blobs of {text!r} must sit on west chords as 'b'")
        blobs = tuple(s in suffixes for s in starts)
        if sum(blobs) % 2:
            raise ParityError(f"{text!r} has an odd number of blobs")
        return cls(pair, blobs)


def enum_dblob(n: int) -> List[DDiagram]:
    return [
        DDiagram(d, blobs)
        for d in enum_ncpp(n)
        for blobs in product((False, True), repeat=len(top_level_chords(d)))
        if sum(blobs) % 2 == 0
    ]


def dblob_cut(x: DDiagram) -> Tuple[DHalf, DHalf]:
    """Each half's first line takes the parity of its own arcs' blobs"""
    if sum(x.blobs) % 2:
        raise ParityError(f"{x.encode()!r} has an odd number of blobs")
    top, bottom = tl_cut(x.pair)
    north, line, south = _split_chords(x.pair, x.blobs)
    if line is None:
        return DHalf(top, tuple(north)), DHalf(bottom, tuple(south))
    return (
        DHalf(top, tuple(north) + (sum(north) % 2 == 1,)),
        DHalf(bottom, tuple(south) + (sum(south) % 2 == 1,)),
    )


def dblob_join(top: DHalf, bottom: DHalf) -> DDiagram:
    if top.half.l != bottom.half.l:
        raise SizeMismatchError("Halves have different numbers of lines")
    if dblob_vertex(top) != dblob_vertex(bottom):
        raise ParityError("Closed halves must have equal blob parity")
    pair = tl_join(top.half, bottom.half)
    if top.half.l:
        north, south = top.blobs[:-1], bottom.blobs[:-1]
        line = ((sum(north) + sum(south)) % 2 == 1,)
    else:
        north, south, line = top.blobs, bottom.blobs, ()
    return DDiagram(pair, tuple(north) + line + tuple(reversed(south)))


class DBlobFamily(PascalFamily):
    """D-type half-diagrams; l = 0 splits into 0 (even) and 0' (odd)"""

    name = "dblob"
    cap = 10

    def __init__(self, graph: Optional[RootedGraph] = None):
        super().__init__(graph or d_inf())

    def origin(self) -> DHalf:
        return DHalf(HalfDiagram(0, (), ()), ())

    def edge_map(self, x: Element, key: int, target) -> DHalf:
        source = x.vertex
        if source == Primed(0):
            return dblob_edge("up_blob", x.payload)
        if source == 0:
            return dblob_edge("up", x.payload)
        if target == Primed(0):
            return dblob_edge("down_toggle", x.payload)
        return dblob_edge("up" if target == source + 1 else "down", x.payload)

    def classify(self, payload: DHalf):
        return payload.half.n, dblob_vertex(payload)

    def universe(self, n: int) -> List[DHalf]:
        result = []
        for h in half_diagrams(n):
            for blobs in product((False, True), repeat=exposed_count(h)):
                if h.l and sum(blobs) % 2:
                    continue
                result.append(DHalf(h, blobs))
        return result

    def encode(self, payload: DHalf) -> str:
        return payload.encode()

    def decode(self, text: str) -> DHalf:
        return DHalf.decode(text)


class DBlobSequence(CatalanSequence):
    name = "dblob"
    cap = 6

    def __init__(self):
        family = DBlobFamily()
        super().__init__(family, family)

    def members(self, n: int) -> List[DDiagram]:
        return enum_dblob(n)

    def decompose(self, n: int, x: DDiagram) -> Tuple[Element, Element]:
        top, bottom = dblob_cut(x)
        return self.bra.element(top), self.ket.element(bottom)

    def compose(self, n: int, bra: Element, ket: Element) -> DDiagram:
        return dblob_join(bra.payload, ket.payload)

    def encode(self, x: DDiagram) -> str:
        return x.encode()
