"""
Set partitions and the Bell array on ℽ⁺, pair partitions and the Brauer array on ℽ,
standard tableaux and the Robinson-Schensted correspondence
"""
import logging
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import factorial, prod
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from pascal_arrays.core.exceptions import (
    IllegalEdgeError,
    InvalidSpecError,
    SizeMismatchError,
)
from pascal_arrays.schemas.report import CheckStatus, WeightDimReport
from pascal_arrays.services.graphs import (
    Label,
    Plus,
    RootedGraph,
    double_young,
    format_label,
    layer_counts,
    partition_additions,
    partition_removals,
    weight_plus,
    weight_vertex,
    young,
)
from pascal_arrays.services.pascal import CatalanSequence, Element, PascalFamily

logger = logging.getLogger(__name__)

Block = Tuple[int, ...]
SetPartition = Tuple[Block, ...]
Shape = Tuple[int, ...]
Tableau = Tuple[Tuple[int, ...], ...]


# Set partitions over points i (unprimed) and -i (primed)


def point_key(p: int) -> Tuple[int, int]:
    return (0, p) if p > 0 else (1, -p)


def format_point(p: int) -> str:
    return str(p) if p > 0 else f"{-p}'"


def canonical(blocks: Sequence[Sequence[int]]) -> SetPartition:
    """Blocks sorted internally and by first point, unprimed before primed"""
    ordered = [tuple(sorted(block, key=point_key)) for block in blocks if block]
    return tuple(sorted(ordered, key=lambda block: point_key(block[0])))


def format_set_partition(blocks: Sequence[Sequence[int]]) -> str:
    if not blocks:
        return "∅"
    return "|".join(
        "{" + ",".join(format_point(p) for p in block) + "}" for block in canonical(blocks)
    )


def parse_set_partition(text: str) -> SetPartition:
    """Inverse of format_set_partition, e.g. {1,4,4'}|{2,3,1'}"""
    text = text.strip()
    if text in ("", "∅"):
        return ()
    blocks = []
    try:
        for chunk in text.split("|"):
            chunk = chunk.strip()
            if not (chunk.startswith("{") and chunk.endswith("}")):
                raise ValueError(chunk)
            block = []
            for item in chunk[1:-1].split(","):
                item = item.strip()
                block.append(-int(item[:-1]) if item.endswith("'") else int(item))
            blocks.append(block)
    except ValueError as exc:
        raise InvalidSpecError(f"Cannot parse set partition {text!r}") from exc
    points = [p for block in blocks for p in block]
    if len(points) != len(set(points)) or 0 in points:
        raise InvalidSpecError(f"Blocks of {text!r} are not disjoint")
    return canonical(blocks)


def enum_set_partitions(elements: Sequence[int]) -> List[SetPartition]:
    """All set partitions, the first element placed last-in-first-out"""
    items = list(elements)
    if not items:
        return [()]
    first, rest = items[0], items[1:]
    result = []
    for smaller in enum_set_partitions(rest):
        result.append(canonical(((first,),) + smaller))
        for i in range(len(smaller)):
            joined = smaller[:i] + ((first,) + smaller[i],) + smaller[i + 1 :]
            result.append(canonical(joined))
    return result


def enum_pair_partitions(elements: Sequence[int]) -> List[SetPartition]:
    items = list(elements)
    if len(items) % 2:
        return []
    if not items:
        return [()]
    first, rest = items[0], items[1:]
    result = []
    for i, partner in enumerate(rest):
        for smaller in enum_pair_partitions(rest[:i] + rest[i + 1 :]):
            result.append(canonical(((first, partner),) + smaller))
    return result


def bell(n: int) -> int:
    """Bell number by the Bell triangle"""
    if n < 0:
        raise InvalidSpecError("Bell numbers need n ≥ 0")
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def ground(size: int) -> List[int]:
    """Points 1..size then 1'..size'"""
    return list(range(1, size + 1)) + [-i for i in range(1, size + 1)]


# Integer partitions and standard tableaux


def integer_partitions(n: int, max_rows: Optional[int] = None) -> List[Shape]:
    """Partitions of n in descending lexicographic order"""

    def extend(remaining: int, largest: int, rows: int) -> Iterator[Shape]:
        if remaining == 0:
            yield ()
            return
        if rows == 0:
            return
        for first in range(min(remaining, largest), 0, -1):
            for rest in extend(remaining - first, first, rows - 1):
                yield (first,) + rest

    return list(extend(n, n, n if max_rows is None else max_rows))


def shape_of(t: Tableau) -> Shape:
    return tuple(len(row) for row in t)


def conjugate(shape: Shape) -> Shape:
    return tuple(sum(1 for row in shape if row > j) for j in range(shape[0] if shape else 0))


def add_box(t: Tableau, row: int, label: int) -> Tableau:
    if row == len(t):
        return t + ((label,),)
    return t[:row] + (t[row] + (label,),) + t[row + 1 :]


def reading_word(t: Tableau) -> Tuple[int, ...]:
    return tuple(x for row in t for x in row)


def is_standard_tableau(t: Tableau) -> bool:
    shape = shape_of(t)
    if any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)) or 0 in shape:
        return False
    if sorted(reading_word(t)) != list(range(1, sum(shape) + 1)):
        return False
    rows_ok = all(row[j] < row[j + 1] for row in t for j in range(len(row) - 1))
    cols_ok = all(
        t[i][j] < t[i + 1][j] for i in range(len(t) - 1) for j in range(len(t[i + 1]))
    )
    return rows_ok and cols_ok


@lru_cache(maxsize=None)
def standard_tableaux(shape: Shape) -> Tuple[Tableau, ...]:
    """SYT of a shape, built by placing the largest entry in each corner"""
    n = sum(shape)
    if n == 0:
        return ((),)
    result = []
    for i, row in enumerate(shape):
        if i + 1 == len(shape) or shape[i + 1] < row:
            smaller = tuple(x for x in shape[:i] + (row - 1,) + shape[i + 1 :] if x)
            result.extend(add_box(t, i, n) for t in standard_tableaux(smaller))
    return tuple(result)


def hook_dim(shape: Sequence[int]) -> int:
    """Number of standard tableaux by the hook length formula"""
    shape = tuple(shape)
    cols = conjugate(shape)
    hooks = prod(
        row - j + cols[j] - i - 1 for i, row in enumerate(shape) for j in range(row)
    )
    return factorial(sum(shape)) // hooks


def rs_insert(word: Sequence[int]) -> Tuple[Tableau, Tableau]:
    """Row-insertion Robinson-Schensted: (insertion tableau, recording tableau)"""
    if sorted(word) != list(range(1, len(word) + 1)):
        raise InvalidSpecError(f"{tuple(word)} is not a permutation word")
    p: List[List[int]] = []
    q: List[List[int]] = []
    for step, x in enumerate(word, start=1):
        row = 0
        while True:
            if row == len(p):
                p.append([x])
                q.append([step])
                break
            current = p[row]
            j = bisect_right(current, x)
            if j == len(current):
                current.append(x)
                q[row].append(step)
                break
            current[j], x = x, current[j]
            row += 1
    return tuple(map(tuple, p)), tuple(map(tuple, q))


def rs_inverse(p: Tableau, q: Tableau) -> Tuple[int, ...]:
    if shape_of(p) != shape_of(q):
        raise SizeMismatchError(f"Tableaux of shapes {shape_of(p)} and {shape_of(q)}")
    rows_p = [list(row) for row in p]
    rows_q = [list(row) for row in q]
    n = sum(shape_of(p))
    word = [0] * n
    for step in range(n, 0, -1):
        row = next(i for i, r in enumerate(rows_q) if r and r[-1] == step)
        rows_q[row].pop()
        x = rows_p[row].pop()
        for r in range(row - 1, -1, -1):
            current = rows_p[r]
            j = bisect_left(current, x) - 1
            current[j], x = x, current[j]
        word[step - 1] = x
    return tuple(word)


def format_tableau(t: Tableau) -> str:
    if not t:
        return "∅"
    return "/".join(",".join(str(x) for x in row) for row in t)


def parse_tableau(text: str) -> Tableau:
    text = text.strip()
    if text in ("", "∅"):
        return ()
    try:
        t = tuple(tuple(int(x) for x in row.split(",")) for row in text.split("/"))
    except ValueError as exc:
        raise InvalidSpecError(f"Cannot parse tableau {text!r}") from exc
    if not is_standard_tableau(t):
        raise InvalidSpecError(f"{text!r} is not a standard tableau")
    return t


# Branching bijection


@dataclass
class BranchingBijection:
    """(k, U) with U ∈ SYT(ν), k ∈ 1..|ν|+1, matched with SYT of shapes covering ν"""

    nu: Shape
    forward: Dict[Tuple[int, Tableau], Tableau]
    backward: Dict[Tableau, Tuple[int, Tableau]]


@lru_cache(maxsize=None)
def branching_bijection(nu: Shape) -> BranchingBijection:
    """Pair both sides by rank in their canonical orders"""
    l = sum(nu) + 1
    left = sorted(
        ((k, u) for k in range(1, l + 1) for u in standard_tableaux(nu)),
        key=lambda pair: (pair[0], reading_word(pair[1])),
    )
    right = sorted(
        (t for shape in partition_additions(nu) for t in standard_tableaux(shape)),
        key=lambda t: (tuple(-x for x in shape_of(t)), reading_word(t)),
    )
    if len(left) != len(right):
        raise InvalidSpecError(f"Branching sides of {nu} have sizes {len(left)} and {len(right)}")
    logger.debug(f"Built branching bijection for {nu} with {len(left)} pairs")
    return BranchingBijection(
        nu=nu, forward=dict(zip(left, right)), backward=dict(zip(right, left))
    )


def _added_row(smaller: Shape, larger: Shape) -> int:
    padded = smaller + (0,)
    for i, row in enumerate(larger):
        if row != padded[i]:
            return i
    raise InvalidSpecError(f"{larger} does not cover {smaller}")


# Bell array on ℽ⁺


def _format_blocks(blocks: Sequence[Block], marked: Optional[int] = None) -> str:
    if not blocks:
        return "∅"
    return "|".join(
        "{" + ",".join(str(p) for p in block) + "}" + ("+" if marked in block else "")
        for block in blocks
    )


def _parse_blocks(text: str) -> Tuple[Tuple[Block, ...], bool]:
    text = text.strip()
    if text in ("", "∅"):
        return (), False
    marked = text.endswith("+") or "+|" in text
    try:
        blocks = tuple(
            tuple(int(x) for x in chunk.strip().rstrip("+").strip("{}").split(","))
            for chunk in text.split("|")
        )
    except ValueError as exc:
        raise InvalidSpecError(f"Cannot parse blocks {text!r}") from exc
    return blocks, marked


@dataclass(frozen=True)
class BellHalf:
    """Half of a partition: closed blocks, propagating blocks by minimum, a tableau.

    On odd layers `size` lies in a propagating block the tableau does not index.
    """

    size: int
    blocks: Tuple[Block, ...]
    propagating: Tuple[Block, ...]
    tableau: Tableau
    marked: bool = False

    def ranked(self) -> Tuple[Block, ...]:
        """Propagating blocks indexed by the tableau"""
        return tuple(b for b in self.propagating if not (self.marked and self.size in b))

    def encode(self) -> str:
        return ";".join(
            [
                _format_blocks(self.blocks),
                _format_blocks(self.propagating, self.size if self.marked else None),
                format_tableau(self.tableau),
            ]
        )

    @classmethod
    def decode(cls, text: str) -> "BellHalf":
        parts = text.split(";")
        if len(parts) != 3:
            raise InvalidSpecError(f"Bell half {text!r} needs three fields")
        blocks, _ = _parse_blocks(parts[0])
        props, marked = _parse_blocks(parts[1])
        size = sum(len(b) for b in blocks + props)
        return cls(size, tuple(sorted(blocks)), tuple(sorted(props)), parse_tableau(parts[2]), marked)


def bell_vertex(h: BellHalf) -> Label:
    shape = shape_of(h.tableau)
    return Plus(shape) if h.marked else shape


def yp_edge(h: BellHalf, target: Label) -> BellHalf:
    """Edge maps of the Bell array toward `target`"""
    shape = shape_of(h.tableau)
    if not h.marked:
        if not isinstance(target, Plus):
            raise IllegalEdgeError(f"{format_label(shape)} has no edge to {format_label(target)}")
        new = h.size + 1
        if target.partition == shape:
            return BellHalf(new, h.blocks, h.propagating + ((new,),), h.tableau, True)
        if target.partition not in partition_removals(shape):
            raise IllegalEdgeError(f"{format_label(shape)} has no edge to {format_label(target)}")
        k, u = branching_bijection(target.partition).backward[h.tableau]
        props = list(h.propagating)
        props[k - 1] = props[k - 1] + (new,)
        return BellHalf(new, h.blocks, tuple(props), u, True)

    if isinstance(target, Plus):
        raise IllegalEdgeError(f"{format_label(Plus(shape))} has no edge to {format_label(target)}")
    if target == shape:
        carrier = next(b for b in h.propagating if h.size in b)
        blocks = tuple(sorted(h.blocks + (carrier,)))
        props = tuple(b for b in h.propagating if b != carrier)
        return BellHalf(h.size, blocks, props, h.tableau, False)
    if target not in partition_additions(shape):
        raise IllegalEdgeError(f"{format_label(Plus(shape))} has no edge to {format_label(target)}")
    label = sum(shape) + 1
    return BellHalf(
        h.size, h.blocks, h.propagating, add_box(h.tableau, _added_row(shape, target), label), False
    )


class BellFamily(PascalFamily):
    """Half partitions with tableaux; layer 2m on [m], layer 2m+1 on [m+1]"""

    name = "bell"
    cap = 10

    def __init__(self, graph: Optional[RootedGraph] = None):
        super().__init__(graph or double_young())

    def origin(self) -> BellHalf:
        return BellHalf(0, (), (), ())

    def edge_map(self, x: Element, key: int, target: Label) -> BellHalf:
        return yp_edge(x.payload, target)

    def classify(self, payload: BellHalf) -> Tuple[int, Label]:
        h = payload
        points = sorted(p for b in h.blocks + h.propagating for p in b)
        if points != list(range(1, h.size + 1)):
            raise InvalidSpecError(f"{h.encode()!r} does not partition 1..{h.size}")
        if list(h.propagating) != sorted(h.propagating):
            raise InvalidSpecError("Propagating blocks must be ordered by minimum")
        if h.marked and not any(h.size in b for b in h.propagating):
            raise InvalidSpecError(f"{h.size} must lie in a propagating block")
        if sum(shape_of(h.tableau)) != len(h.ranked()) or not is_standard_tableau(h.tableau):
            raise InvalidSpecError(f"Tableau of {h.encode()!r} does not index its blocks")
        return 2 * h.size - (1 if h.marked else 0), bell_vertex(h)

    def universe(self, n: int) -> List[BellHalf]:
        size = (n + 1) // 2
        marked = n % 2 == 1
        result = []
        for sigma in enum_set_partitions(range(1, size + 1)):
            fixed = [b for b in sigma if marked and size in b]
            free = [b for b in sigma if b not in fixed]
            for mask in range(2 ** len(free)):
                chosen = [b for i, b in enumerate(free) if mask >> i & 1]
                closed = tuple(sorted(b for i, b in enumerate(free) if not mask >> i & 1))
                props = tuple(sorted(chosen + fixed))
                for shape in integer_partitions(len(chosen)):
                    for t in standard_tableaux(shape):
                        result.append(BellHalf(size, closed, props, t, marked))
        return result

    def encode(self, payload: BellHalf) -> str:
        return payload.encode()

    def decode(self, text: str) -> BellHalf:
        return BellHalf.decode(text)


def _ranks(blocks: Sequence[Block]) -> Dict[Block, int]:
    return {b: i for i, b in enumerate(sorted(blocks), start=1)}


def bell_braket(p: Sequence[Sequence[int]], size: int, plus: bool = False) -> Tuple[BellHalf, BellHalf]:
    """Split a partition of size ∪ size' into tableau-labelled halves"""
    blocks = canonical(p)
    if sorted((q for b in blocks for q in b), key=point_key) != sorted(ground(size), key=point_key):
        raise InvalidSpecError(f"{format_set_partition(blocks)} is not a partition of {size} ∪ {size}'")
    top_closed, bottom_closed, links = [], [], []
    carrier = None
    for block in blocks:
        up = tuple(sorted(x for x in block if x > 0))
        down = tuple(sorted(-x for x in block if x < 0))
        if plus and size in up:
            if size not in down:
                raise InvalidSpecError(f"{size} and {size}' must share a block")
            carrier = (up, down)
        elif up and down:
            links.append((up, down))
        elif up:
            top_closed.append(up)
        else:
            bottom_closed.append(down)
    ranks = _ranks([down for _, down in links])
    word = [ranks[down] for _, down in sorted(links)]
    p_tab, q_tab = rs_insert(word)
    extra_top = [carrier[0]] if carrier else []
    extra_bottom = [carrier[1]] if carrier else []
    top = BellHalf(
        size, tuple(sorted(top_closed)), tuple(sorted([u for u, _ in links] + extra_top)), p_tab, plus
    )
    bottom = BellHalf(
        size,
        tuple(sorted(bottom_closed)),
        tuple(sorted([d for _, d in links] + extra_bottom)),
        q_tab,
        plus,
    )
    return top, bottom


def bell_compose(top: BellHalf, bottom: BellHalf) -> SetPartition:
    if (top.size, top.marked) != (bottom.size, bottom.marked):
        raise SizeMismatchError("Halves come from different layers")
    word = rs_inverse(top.tableau, bottom.tableau)
    lower = bottom.ranked()
    blocks: List[Tuple[int, ...]] = list(top.blocks)
    blocks += [tuple(-x for x in b) for b in bottom.blocks]
    for up, target in zip(top.ranked(), word):
        blocks.append(up + tuple(-x for x in lower[target - 1]))
    if top.marked:
        up = next(b for b in top.propagating if top.size in b)
        down = next(b for b in bottom.propagating if bottom.size in b)
        blocks.append(up + tuple(-x for x in down))
    return canonical(blocks)


def enum_plus_partitions(size: int) -> List[SetPartition]:
    """Partitions of size ∪ size' with size and size' in one block"""
    result = []
    for sigma in enum_set_partitions([p for p in ground(size) if p != -size]):
        result.append(canonical([b + (-size,) if size in b else b for b in sigma]))
    return result


class BellSequence(CatalanSequence):
    name = "bell"
    cap = 6

    def __init__(self):
        family = BellFamily()
        super().__init__(family, family)

    def members(self, n: int) -> List[SetPartition]:
        size = (n + 1) // 2
        if n % 2:
            return enum_plus_partitions(size)
        return enum_set_partitions(ground(size))

    def decompose(self, n: int, x: SetPartition) -> Tuple[Element, Element]:
        top, bottom = bell_braket(x, (n + 1) // 2, plus=n % 2 == 1)
        return self.bra.element(top), self.ket.element(bottom)

    def compose(self, n: int, bra: Element, ket: Element) -> SetPartition:
        return bell_compose(bra.payload, ket.payload)

    def encode(self, x: SetPartition) -> str:
        return format_set_partition(x)

    def decode(self, text: str) -> SetPartition:
        return parse_set_partition(text)


# Brauer array on ℽ


@dataclass(frozen=True)
class BrauerHalf:
    """Pairs and propagating singletons on 1..size with a tableau on the singletons"""

    size: int
    pairs: Tuple[Tuple[int, int], ...]
    singletons: Tuple[int, ...]
    tableau: Tableau

    def encode(self) -> str:
        singles = ",".join(str(s) for s in self.singletons) or "∅"
        return ";".join([_format_blocks(self.pairs), singles, format_tableau(self.tableau)])

    @classmethod
    def decode(cls, text: str) -> "BrauerHalf":
        parts = text.split(";")
        if len(parts) != 3:
            raise InvalidSpecError(f"Brauer half {text!r} needs three fields")
        pairs, _ = _parse_blocks(parts[0])
        try:
            singles = () if parts[1].strip() in ("", "∅") else tuple(
                int(s) for s in parts[1].split(",")
            )
        except ValueError as exc:
            raise InvalidSpecError(f"Cannot parse singletons {parts[1]!r}") from exc
        size = 2 * len(pairs) + len(singles)
        return cls(size, tuple(sorted(pairs)), tuple(sorted(singles)), parse_tableau(parts[2]))


def ybr_edge(h: BrauerHalf, target: Label) -> BrauerHalf:
    """Add a singleton labelled last, or pair the new point through the branching bijection"""
    shape = shape_of(h.tableau)
    new = h.size + 1
    if isinstance(target, tuple) and target in partition_additions(shape):
        tableau = add_box(h.tableau, _added_row(shape, target), len(h.singletons) + 1)
        return BrauerHalf(new, h.pairs, h.singletons + (new,), tableau)
    if isinstance(target, tuple) and target in partition_removals(shape):
        k, u = branching_bijection(target).backward[h.tableau]
        partner = h.singletons[k - 1]
        pairs = tuple(sorted(h.pairs + ((partner, new),)))
        singles = tuple(s for s in h.singletons if s != partner)
        return BrauerHalf(new, pairs, singles, u)
    raise IllegalEdgeError(f"{format_label(shape)} has no edge to {format_label(target)}")


def half_pair_partitions(size: int) -> List[Tuple[Tuple[Tuple[int, int], ...], Tuple[int, ...]]]:
    """(pairs, singletons) covering 1..size"""

    def extend(points: Tuple[int, ...]) -> List[Tuple[tuple, tuple]]:
        if not points:
            return [((), ())]
        first, rest = points[0], points[1:]
        result = [(pairs, (first,) + singles) for pairs, singles in extend(rest)]
        for i, partner in enumerate(rest):
            for pairs, singles in extend(rest[:i] + rest[i + 1 :]):
                result.append((tuple(sorted(((first, partner),) + pairs)), singles))
        return result

    return extend(tuple(range(1, size + 1)))


class BrauerFamily(PascalFamily):
    name = "brauer"
    cap = 7

    def __init__(self, graph: Optional[RootedGraph] = None):
        super().__init__(graph or young())

    def origin(self) -> BrauerHalf:
        return BrauerHalf(0, (), (), ())

    def edge_map(self, x: Element, key: int, target: Label) -> BrauerHalf:
        return ybr_edge(x.payload, target)

    def classify(self, payload: BrauerHalf) -> Tuple[int, Shape]:
        h = payload
        points = sorted([p for pair in h.pairs for p in pair] + list(h.singletons))
        if points != list(range(1, h.size + 1)):
            raise InvalidSpecError(f"{h.encode()!r} does not cover 1..{h.size}")
        if sum(shape_of(h.tableau)) != len(h.singletons) or not is_standard_tableau(h.tableau):
            raise InvalidSpecError(f"Tableau of {h.encode()!r} does not index its singletons")
        return h.size, shape_of(h.tableau)

    def universe(self, n: int) -> List[BrauerHalf]:
        return [
            BrauerHalf(n, pairs, singles, t)
            for pairs, singles in half_pair_partitions(n)
            for shape in integer_partitions(len(singles))
            for t in standard_tableaux(shape)
        ]

    def encode(self, payload: BrauerHalf) -> str:
        return payload.encode()

    def decode(self, text: str) -> BrauerHalf:
        return BrauerHalf.decode(text)


def brauer_braket(p: Sequence[Sequence[int]], size: int) -> Tuple[BrauerHalf, BrauerHalf]:
    blocks = canonical(p)
    if any(len(b) != 2 for b in blocks):
        raise InvalidSpecError(f"{format_set_partition(blocks)} is not a pair partition")
    top_pairs, bottom_pairs, links = [], [], []
    for a, b in blocks:
        if a > 0 and b > 0:
            top_pairs.append((a, b))
        elif a < 0 and b < 0:
            bottom_pairs.append((min(-a, -b), max(-a, -b)))
        else:
            links.append((max(a, b), -min(a, b)))
    ranks = {s: i for i, s in enumerate(sorted(d for _, d in links), start=1)}
    word = [ranks[d] for _, d in sorted(links)]
    p_tab, q_tab = rs_insert(word)
    return (
        BrauerHalf(size, tuple(sorted(top_pairs)), tuple(sorted(u for u, _ in links)), p_tab),
        BrauerHalf(size, tuple(sorted(bottom_pairs)), tuple(sorted(d for _, d in links)), q_tab),
    )


def brauer_compose(top: BrauerHalf, bottom: BrauerHalf) -> SetPartition:
    if top.size != bottom.size:
        raise SizeMismatchError("Halves have different sizes")
    word = rs_inverse(top.tableau, bottom.tableau)
    blocks = list(top.pairs) + [(-a, -b) for a, b in bottom.pairs]
    blocks += [(u, -bottom.singletons[t - 1]) for u, t in zip(top.singletons, word)]
    return canonical(blocks)


class BrauerSequence(CatalanSequence):
    name = "brauer"
    cap = 5

    def __init__(self):
        family = BrauerFamily()
        super().__init__(family, family)

    def members(self, n: int) -> List[SetPartition]:
        return enum_pair_partitions(ground(n))

    def decompose(self, n: int, x: SetPartition) -> Tuple[Element, Element]:
        top, bottom = brauer_braket(x, n)
        return self.bra.element(top), self.ket.element(bottom)

    def compose(self, n: int, bra: Element, ket: Element) -> SetPartition:
        return brauer_compose(bra.payload, ket.payload)

    def encode(self, x: SetPartition) -> str:
        return format_set_partition(x)

    def decode(self, text: str) -> SetPartition:
        return parse_set_partition(text)


# Weight lattice check


def weight_dim_check(n: int) -> WeightDimReport:
    """Hook dimensions, weight-lattice walks and short-column permutations agree"""
    shapes = integer_partitions(n, max_rows=3)
    table = layer_counts(weight_plus(3), n)
    dimensions = {format_label(shape): hook_dim(shape) for shape in shapes}
    walk_counts = {
        format_label(shape): table.get(n, weight_vertex(shape)) for shape in shapes
    }
    hook_side = sum(d * d for d in dimensions.values())
    walk_side = table.sum_of_squares(n)
    permutation_side = sum(
        1 for w in permutations(range(1, n + 1)) if len(rs_insert(w)[0]) <= 3
    )
    agree = dimensions == walk_counts and hook_side == walk_side == permutation_side
    if not agree:
        logger.warning(f"Weight dimension check failed at n={n}")
    return WeightDimReport(
        n=n,
        dimensions=dimensions,
        walk_counts=walk_counts,
        hook_side=hook_side,
        walk_side=walk_side,
        permutation_side=permutation_side,
        status=CheckStatus.PASSED if agree else CheckStatus.FAILED,
    )
