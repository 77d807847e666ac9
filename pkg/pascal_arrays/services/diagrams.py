"""
Temperley-Lieb half-diagrams, pair diagrams and standard sequences
"""
from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterator, List, Optional, Tuple

from pascal_arrays.core.exceptions import (
    InvalidSpecError,
    NoPropagatingLineError,
    SizeMismatchError,
)

OPEN = "("
CLOSE = ")"

Arc = Tuple[int, int]


def flip(word: str) -> str:
    """Swap open and close symbols"""
    return word.translate(str.maketrans("()", ")("))


def mirror(word: str) -> str:
    """Reverse and flip; turns the tail of a closed word into a standard one"""
    return flip(word[::-1])


def unmatched(word: str) -> int:
    """Number of unmatched opens of a standard sequence"""
    depth = 0
    for i, ch in enumerate(word):
        if ch == OPEN:
            depth += 1
        elif ch == CLOSE:
            depth -= 1
            if depth < 0:
                raise InvalidSpecError(f"Close without open at position {i + 1} of {word!r}")
        else:
            raise InvalidSpecError(f"Unexpected symbol {ch!r} in {word!r}")
    return depth


def is_standard(word: str) -> bool:
    try:
        unmatched(word)
    except InvalidSpecError:
        return False
    return True


def standard_sequences(n: int, l: Optional[int] = None) -> Iterator[str]:
    """Standard sequences of length n in lexicographic order, "(" first"""
    for letters in product(OPEN + CLOSE, repeat=n):
        word = "".join(letters)
        if is_standard(word) and (l is None or unmatched(word) == l):
            yield word


def dyck_words(n: int) -> List[str]:
    """Closed standard sequences with n pairs, generated directly"""
    words: List[str] = []

    def extend(prefix: str, opens: int, closes: int) -> None:
        if closes == n:
            words.append(prefix)
            return
        if opens < n:
            extend(prefix + OPEN, opens + 1, closes)
        if closes < opens:
            extend(prefix + CLOSE, opens, closes + 1)

    extend("", 0, 0)
    return words


def match_word(word: str) -> Tuple[List[Arc], List[int]]:
    """Arcs (1-based positions) and unmatched opens of a standard sequence"""
    stack: List[int] = []
    arcs: List[Arc] = []
    for i, ch in enumerate(word, start=1):
        if ch == OPEN:
            stack.append(i)
        else:
            if not stack:
                raise InvalidSpecError(f"Close without open at position {i} of {word!r}")
            arcs.append((stack.pop(), i))
    return sorted(arcs), stack


@dataclass(frozen=True)
class HalfDiagram:
    """Noncrossing arcs on points 1..n with uncovered propagating points"""

    n: int
    arcs: Tuple[Arc, ...]
    propagating: Tuple[int, ...]

    @property
    def l(self) -> int:
        return len(self.propagating)

    @classmethod
    def from_sequence(cls, word: str) -> "HalfDiagram":
        arcs, props = match_word(word)
        return cls(len(word), tuple(arcs), tuple(props))

    def encode(self) -> str:
        letters = [OPEN] * self.n
        for _, right in self.arcs:
            letters[right - 1] = CLOSE
        return "".join(letters)

    def render(self) -> str:
        """One row: ( ) for arc ends, | for propagating points"""
        letters = list(self.encode())
        for p in self.propagating:
            letters[p - 1] = "|"
        return "".join(letters)


def _complete(lo: int, hi: int) -> List[Tuple[Arc, ...]]:
    if lo > hi:
        return [()]
    result = []
    for j in range(lo + 1, hi + 1, 2):
        for inner in _complete(lo + 1, j - 1):
            for rest in _complete(j + 1, hi):
                result.append(((lo, j),) + inner + rest)
    return result


def _halves(lo: int, hi: int) -> List[Tuple[Tuple[Arc, ...], Tuple[int, ...]]]:
    if lo > hi:
        return [((), ())]
    result = []
    for arcs, props in _halves(lo + 1, hi):
        result.append((arcs, (lo,) + props))
    for j in range(lo + 1, hi + 1, 2):
        for inner in _complete(lo + 1, j - 1):
            for arcs, props in _halves(j + 1, hi):
                result.append((((lo, j),) + inner + arcs, props))
    return result


def half_diagrams(n: int, l: Optional[int] = None) -> List[HalfDiagram]:
    """All half-diagrams on n points, built by deciding the fate of point 1"""
    diagrams = [
        HalfDiagram(n, tuple(sorted(arcs)), props) for arcs, props in _halves(1, n)
    ]
    if l is not None:
        diagrams = [h for h in diagrams if h.l == l]
    return diagrams


def tl_edge(kind: str, h: HalfDiagram) -> HalfDiagram:
    """φ¹ adds a propagating line on the right; φᵘ bends the rightmost one over"""
    if kind == "up":
        return HalfDiagram(h.n + 1, h.arcs, h.propagating + (h.n + 1,))
    if kind == "down":
        if not h.propagating:
            raise NoPropagatingLineError(
                f"Half-diagram {h.encode()!r} has no propagating line"
            )
        arcs = tuple(sorted(h.arcs + ((h.propagating[-1], h.n + 1),)))
        return HalfDiagram(h.n + 1, arcs, h.propagating[:-1])
    raise InvalidSpecError(f"Unknown edge kind {kind!r}")


@dataclass(frozen=True)
class PairDiagram:
    """Perfect noncrossing matching of n north points (i) and m south points (-i)"""

    n: int
    m: int
    arcs: Tuple[Arc, ...]

    def disk_position(self, p: int) -> int:
        return p if p > 0 else self.n + self.m + p + 1

    def point_at(self, position: int) -> int:
        return position if position <= self.n else -(self.n + self.m - position + 1)

    @classmethod
    def build(cls, n: int, m: int, pairs: List[Arc]) -> "PairDiagram":
        shell = cls(n, m, ())
        arcs = []
        for a, b in pairs:
            if shell.disk_position(a) > shell.disk_position(b):
                a, b = b, a
            arcs.append((a, b))
        arcs.sort(key=lambda arc: shell.disk_position(arc[0]))
        return cls(n, m, tuple(arcs))

    @classmethod
    def from_disk_word(cls, n: int, m: int, word: str) -> "PairDiagram":
        if len(word) != n + m:
            raise SizeMismatchError(f"Disk word of length {len(word)} for {n}+{m} points")
        arcs, props = match_word(word)
        if props:
            raise InvalidSpecError(f"Disk word {word!r} is not closed")
        shell = cls(n, m, ())
        return cls.build(n, m, [(shell.point_at(a), shell.point_at(b)) for a, b in arcs])

    def disk_word(self) -> str:
        letters = [OPEN] * (self.n + self.m)
        for _, b in self.arcs:
            letters[self.disk_position(b) - 1] = CLOSE
        return "".join(letters)

    def partner(self) -> Dict[int, int]:
        result = {}
        for a, b in self.arcs:
            result[a] = b
            result[b] = a
        return result

    @property
    def propagating_count(self) -> int:
        return sum(1 for a, b in self.arcs if (a > 0) != (b > 0))

    def render(self) -> str:
        top, bottom = tl_cut(self)
        return f"{top.render()}\n{bottom.render()}"

    def __str__(self) -> str:
        return self.disk_word()


def enum_ncpp(n: int) -> List[PairDiagram]:
    """All noncrossing perfect matchings of 2n points as D(n, n) diagrams"""
    return [PairDiagram.from_disk_word(n, n, word) for word in dyck_words(n)]


def tl_cut(d: PairDiagram) -> Tuple[HalfDiagram, HalfDiagram]:
    """Cut the propagating lines: north half and south half"""
    top_arcs, top_props, bottom_arcs, bottom_props = [], [], [], []
    for a, b in d.arcs:
        if a > 0 and b > 0:
            top_arcs.append((min(a, b), max(a, b)))
        elif a < 0 and b < 0:
            bottom_arcs.append((min(-a, -b), max(-a, -b)))
        else:
            top_props.append(max(a, b))
            bottom_props.append(-min(a, b))
    return (
        HalfDiagram(d.n, tuple(sorted(top_arcs)), tuple(sorted(top_props))),
        HalfDiagram(d.m, tuple(sorted(bottom_arcs)), tuple(sorted(bottom_props))),
    )


def tl_join(top: HalfDiagram, bottom: HalfDiagram) -> PairDiagram:
    """Reconnect propagating points by rank from west to east"""
    if top.l != bottom.l:
        raise SizeMismatchError(
            f"Halves have {top.l} and {bottom.l} propagating lines"
        )
    pairs = list(top.arcs)
    pairs += [(-a, -b) for a, b in bottom.arcs]
    pairs += list(zip(top.propagating, (-p for p in bottom.propagating)))
    return PairDiagram.build(top.n, bottom.n, pairs)


def identity_diagram(n: int) -> PairDiagram:
    return PairDiagram.build(n, n, [(i, -i) for i in range(1, n + 1)])
