"""
Rooted graphs: the graph catalog, walk counting and constrained walks
"""
import logging
from collections import defaultdict
from dataclasses import dataclass
from typing import (
    Any,
    Callable,
    DefaultDict,
    Dict,
    FrozenSet,
    Iterable,
    List,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from pascal_arrays.core.config import settings
from pascal_arrays.core.exceptions import (
    IllegalEdgeError,
    InconsistentCountError,
    InvalidSpecError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Primed:
    """The primed vertex 0' of D-infinity"""

    value: int = 0


@dataclass(frozen=True)
class Plus:
    """A '+'-marked partition of the double Young graph"""

    partition: Tuple[int, ...]


@dataclass(frozen=True)
class Walk:
    """Root-anchored edge-key sequence on a named graph"""

    graph: str
    steps: Tuple[int, ...]
    endpoint: Any

    @property
    def length(self) -> int:
        return len(self.steps)


Label = Union[int, Primed, Tuple[int, ...], Plus, Walk]


def label_key(v: Label) -> Tuple[Any, ...]:
    """Total order on vertex labels used for out-edge ordering"""
    if isinstance(v, int):
        return (0, v, 0)
    if isinstance(v, Primed):
        return (0, v.value, 1)
    if isinstance(v, tuple):
        return (1, v, 0)
    if isinstance(v, Plus):
        return (1, v.partition, 1)
    if isinstance(v, Walk):
        return (2, v.steps, 0)
    raise InvalidSpecError(f"Unsupported vertex label {v!r}")


def format_label(v: Label) -> str:
    """Text form of a vertex label: 3, 0', (2,1), (2,1)+"""
    if isinstance(v, int):
        return str(v)
    if isinstance(v, Primed):
        return f"{v.value}'"
    if isinstance(v, tuple):
        return "(" + ",".join(str(x) for x in v) + ")"
    if isinstance(v, Plus):
        return format_label(v.partition) + "+"
    if isinstance(v, Walk):
        return "w:" + ".".join(str(k) for k in v.steps)
    raise InvalidSpecError(f"Unsupported vertex label {v!r}")


def parse_label(text: str) -> Label:
    """Inverse of format_label for everything but cover vertices"""
    text = text.strip()
    try:
        if text in ("∅", "()"):
            return ()
        if text.endswith("'"):
            return Primed(int(text[:-1]))
        if text.endswith("+"):
            inner = parse_label(text[:-1])
            if not isinstance(inner, tuple):
                raise ValueError(text)
            return Plus(inner)
        if text.startswith("(") and text.endswith(")"):
            body = text[1:-1].strip()
            if not body:
                return ()
            return tuple(int(x) for x in body.split(","))
        return int(text)
    except ValueError as exc:
        raise InvalidSpecError(f"Cannot parse vertex label {text!r}") from exc


class RootedGraph:
    """Lazily generated locally finite directed multigraph with a root"""

    def __init__(
        self,
        name: str,
        root: Label,
        neighbours: Callable[[Label], Iterable[Label]],
        undirected: bool = False,
        contains: Optional[Callable[[Label], bool]] = None,
    ):
        self.name = name
        self.root = root
        self.undirected = undirected
        self._neighbours = neighbours
        self._contains = contains
        # out-edge memo; results are identical with or without it
        self._targets: Dict[Label, Tuple[Label, ...]] = {}

    def contains(self, v: Label) -> bool:
        """Whether v is a vertex label of this graph"""
        if self._contains is None:
            return True
        try:
            return bool(self._contains(v))
        except TypeError:
            return False

    def targets(self, v: Label) -> Tuple[Label, ...]:
        """Out-neighbours of v in edge-key order, parallel edges repeated"""
        cached = self._targets.get(v)
        if cached is None:
            cached = tuple(sorted(self._neighbours(v), key=label_key))
            self._targets[v] = cached
        return cached

    def out(self, v: Label) -> List[Tuple[int, Label]]:
        """Ordered (edge_key, target) pairs leaving v"""
        return list(enumerate(self.targets(v)))

    def step(self, v: Label, key: int) -> Label:
        """Follow edge `key` out of v"""
        targets = self.targets(v)
        if not 0 <= key < len(targets):
            raise IllegalEdgeError(
                f"Vertex {format_label(v)} of {self.name} has no edge {key}",
                errors=[{"vertex": format_label(v), "edge_key": key}],
            )
        return targets[key]

    def edge_keys(self, v: Label, w: Label) -> List[int]:
        """All edge keys from v to w"""
        return [key for key, target in enumerate(self.targets(v)) if target == w]

    def rerooted(self, root: Label) -> "RootedGraph":
        """Same graph with a different distinguished vertex"""
        if not self.contains(root):
            raise InvalidSpecError(
                f"{format_label(root)} is not a vertex of {self.name}"
            )
        return RootedGraph(
            f"{self.name}@{format_label(root)}",
            root,
            self._neighbours,
            undirected=self.undirected,
            contains=self._contains,
        )

    def __repr__(self) -> str:
        return f"RootedGraph({self.name!r}, root={format_label(self.root)})"


# Partition helpers shared by the Young-type graphs


def partition_additions(p: Tuple[int, ...]) -> List[Tuple[int, ...]]:
    """Partitions obtained from p by adding one box"""
    result = []
    rows = list(p) + [0]
    for i in range(len(rows)):
        if i == 0 or rows[i - 1] > rows[i]:
            new = rows[:]
            new[i] += 1
            result.append(tuple(x for x in new if x > 0))
    return result


def partition_removals(p: Tuple[int, ...]) -> List[Tuple[int, ...]]:
    """Partitions obtained from p by removing one box"""
    result = []
    rows = list(p) + [0]
    for i in range(len(p)):
        if rows[i] > rows[i + 1]:
            new = rows[:]
            new[i] -= 1
            result.append(tuple(x for x in new if x > 0))
    return result


def _is_partition(v: Any) -> bool:
    return (
        isinstance(v, tuple)
        and all(isinstance(x, int) and x > 0 for x in v)
        and all(v[i] >= v[i + 1] for i in range(len(v) - 1))
    )


# Catalog


def validate_lambda(lam: Sequence[int]) -> Tuple[int, ...]:
    """Check the branching sequence of a tree graph"""
    try:
        values = tuple(int(x) for x in lam)
    except (TypeError, ValueError) as exc:
        raise InvalidSpecError(f"Malformed λ {lam!r}") from exc
    if not values:
        raise InvalidSpecError("λ must have at least one entry")
    if any(x < 0 for x in values):
        raise InvalidSpecError(f"λ entries must be nonnegative: {values}")
    if any(x == 0 for x in values[:-1]):
        raise InvalidSpecError(f"Only the last λ entry may be zero: {values}")
    return values


def a_inf() -> RootedGraph:
    """The half-line A∞ rooted at its end"""
    return RootedGraph(
        "a_inf",
        0,
        lambda v: [v - 1, v + 1] if v > 0 else [1],
        undirected=True,
        contains=lambda v: isinstance(v, int) and v >= 0,
    )


def a_inf_inf() -> RootedGraph:
    """The full line A∞^∞ rooted at 0"""
    return RootedGraph(
        "a_inf_inf",
        0,
        lambda v: [v - 1, v + 1],
        undirected=True,
        contains=lambda v: isinstance(v, int),
    )


def _d_inf_neighbours(v: Label) -> List[Label]:
    if isinstance(v, Primed) or v == 0:
        return [1]
    if v == 1:
        return [0, Primed(0), 2]
    return [v - 1, v + 1]


def d_inf() -> RootedGraph:
    """D∞: vertices 0 and 0' both attached to 1, then a half-line"""
    return RootedGraph(
        "d_inf",
        0,
        _d_inf_neighbours,
        undirected=True,
        contains=lambda v: v == Primed(0) or (isinstance(v, int) and v >= 0),
    )


def gamma(lam: Sequence[int]) -> RootedGraph:
    """Γ(λ): λ_i edges from i−1 to i, the last entry as loops"""
    values = validate_lambda(lam)
    top = len(values) - 1

    def neighbours(v: int) -> List[int]:
        if v < top:
            return [v + 1] * values[v]
        return [v] * values[top]

    return RootedGraph(
        "gamma:" + ",".join(str(x) for x in values),
        0,
        neighbours,
        contains=lambda v: isinstance(v, int) and 0 <= v <= top,
    )


def a_tree(lam: Sequence[int]) -> RootedGraph:
    """𝒜(λ), the undirected directed cover of Γ(λ); empty λ means (1)"""
    values = validate_lambda(lam) if len(tuple(lam)) else (1,)

    def width(depth: int) -> int:
        return values[min(depth, len(values)) - 1]

    def neighbours(v: Tuple[int, ...]) -> List[Tuple[int, ...]]:
        result = [v[:-1]] if v else []
        result.extend(v + (c,) for c in range(1, width(len(v) + 1) + 1))
        return result

    def contains(v: Any) -> bool:
        return isinstance(v, tuple) and all(
            isinstance(d, int) and 1 <= d <= width(i + 1) for i, d in enumerate(v)
        )

    return RootedGraph(
        "atree:" + ",".join(str(x) for x in values),
        (),
        neighbours,
        undirected=True,
        contains=contains,
    )


def young() -> RootedGraph:
    """Young graph: partitions joined when they differ by one box"""
    return RootedGraph(
        "young",
        (),
        lambda p: partition_removals(p) + partition_additions(p),
        undirected=True,
        contains=_is_partition,
    )


def _double_young_neighbours(v: Label) -> List[Label]:
    if isinstance(v, Plus):
        return [v.partition] + partition_additions(v.partition)
    return [Plus(v)] + [Plus(nu) for nu in partition_removals(v)]


def double_young() -> RootedGraph:
    """ℽ⁺: λ joined to ν+ when λ = ν or λ covers ν"""
    return RootedGraph(
        "dyoung",
        (),
        _double_young_neighbours,
        undirected=True,
        contains=lambda v: _is_partition(v.partition if isinstance(v, Plus) else v),
    )


def weight_steps(rank: int) -> List[Tuple[int, ...]]:
    """Weights of the vector representation in fundamental coordinates"""
    steps = []
    for i in range(rank + 1):
        step = [0] * rank
        if i < rank:
            step[i] += 1
        if i > 0:
            step[i - 1] -= 1
        steps.append(tuple(step))
    return steps


def weight_plus(size: int) -> RootedGraph:
    """ℒ⁺(A_{N−1}): dominant weights, steps by weights of the vector module"""
    if size < 2:
        raise InvalidSpecError("weightplus needs N ≥ 2")
    rank = size - 1
    steps = weight_steps(rank)

    def neighbours(v: Tuple[int, ...]) -> List[Tuple[int, ...]]:
        result = []
        for step in steps:
            target = tuple(a + b for a, b in zip(v, step))
            if all(x >= 0 for x in target):
                result.append(target)
        return result

    return RootedGraph(
        f"weightplus:{size}",
        (0,) * rank,
        neighbours,
        undirected=(size == 2),
        contains=lambda v: isinstance(v, tuple)
        and len(v) == rank
        and all(isinstance(x, int) and x >= 0 for x in v),
    )


def weight_vertex(partition: Sequence[int], size: int = 3) -> Tuple[int, ...]:
    """Dominant weight of a partition with at most N rows"""
    rows = list(partition)
    if len(rows) > size:
        raise InvalidSpecError(f"{tuple(rows)} has more than {size} rows")
    rows += [0] * (size - len(rows))
    return tuple(rows[i] - rows[i + 1] for i in range(size - 1))


def truncate(base: RootedGraph, forbidden: Iterable[Label]) -> RootedGraph:
    """Full subgraph on the vertices outside `forbidden`"""
    removed = frozenset(forbidden)
    if base.root in removed:
        raise InvalidSpecError(f"Cannot truncate the root of {base.name}")
    names = ",".join(format_label(v) for v in sorted(removed, key=label_key))
    return RootedGraph(
        f"truncate({base.name};{names})",
        base.root,
        lambda v: [w for w in base.targets(v) if w not in removed],
        undirected=base.undirected,
        contains=lambda v: v not in removed and base.contains(v),
    )


def opposite(g: RootedGraph) -> RootedGraph:
    """G^op; the undirected catalog graphs are their own opposites"""
    if g.undirected:
        return g
    raise InvalidSpecError(
        f"The opposite of directed graph {g.name} is not generated from its root"
    )


def directed_cover(g: RootedGraph) -> RootedGraph:
    """Tree of walks on g, rooted at the empty walk"""

    def neighbours(p: Walk) -> List[Walk]:
        return [Walk(g.name, p.steps + (key,), w) for key, w in g.out(p.endpoint)]

    return RootedGraph(
        f"cover({g.name})",
        Walk(g.name, (), g.root),
        neighbours,
        contains=lambda v: isinstance(v, Walk) and v.graph == g.name,
    )


def _split_top_level(text: str, sep: str) -> List[str]:
    parts, depth, current = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == sep and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    parts.append("".join(current))
    return parts


def _parse_lambda(body: str) -> Tuple[int, ...]:
    body = body.strip()
    if not body:
        return ()
    try:
        return tuple(int(x) for x in body.split(","))
    except ValueError as exc:
        raise InvalidSpecError(f"Malformed λ {body!r}") from exc


def make_graph(spec: str) -> RootedGraph:
    """Build a catalog graph from its text spec"""
    spec = spec.strip()
    pieces = _split_top_level(spec, "@")
    if len(pieces) == 2:
        return make_graph(pieces[0]).rerooted(parse_label(pieces[1]))
    if len(pieces) > 2:
        raise InvalidSpecError(f"Malformed graph spec {spec!r}")

    if spec.startswith("truncate(") and spec.endswith(")"):
        inner = _split_top_level(spec[len("truncate(") : -1], ";")
        if len(inner) != 2:
            raise InvalidSpecError(f"Malformed truncation {spec!r}")
        base = make_graph(inner[0])
        forbidden = [parse_label(x) for x in _split_top_level(inner[1], ",") if x]
        return truncate(base, forbidden)

    name, _, body = spec.partition(":")
    if name == "a_inf" and not body:
        return a_inf()
    if name == "a_inf_inf" and not body:
        return a_inf_inf()
    if name == "d_inf" and not body:
        return d_inf()
    if name == "young" and not body:
        return young()
    if name == "dyoung" and not body:
        return double_young()
    if name == "gamma":
        return gamma(_parse_lambda(body))
    if name in ("atree", "a_tree"):
        return a_tree(_parse_lambda(body))
    if name == "weightplus":
        try:
            return weight_plus(int(body))
        except ValueError as exc:
            raise InvalidSpecError(f"Malformed weight lattice spec {spec!r}") from exc
    raise InvalidSpecError(f"Unknown graph spec {spec!r}")


# Walks and counts


def walk_from_steps(g: RootedGraph, steps: Sequence[int]) -> Walk:
    """Replay edge keys from the root"""
    v = g.root
    for key in steps:
        v = g.step(v, key)
    return Walk(g.name, tuple(steps), v)


def walk_vertices(g: RootedGraph, walk: Walk) -> List[Label]:
    """Vertex sequence visited by a walk, root included"""
    vertices = [g.root]
    for key in walk.steps:
        vertices.append(g.step(vertices[-1], key))
    return vertices


@dataclass
class CountTable:
    """Exact walk counts N(n; v) for n ≤ n_max"""

    graph: str
    start: Any
    layers: List[Dict[Any, int]]

    @property
    def n_max(self) -> int:
        return len(self.layers) - 1

    def get(self, n: int, v: Label) -> int:
        if not 0 <= n <= self.n_max:
            raise InvalidSpecError(f"Layer {n} outside table range 0..{self.n_max}")
        return self.layers[n].get(v, 0)

    def layer(self, n: int) -> Dict[Any, int]:
        return dict(self.layers[n])

    def vertices(self, n: int) -> List[Label]:
        return sorted(self.layers[n], key=label_key)

    def sum_of_squares(self, n: int) -> int:
        return sum(count * count for count in self.layers[n].values())


def layer_counts(
    g: RootedGraph, n_max: int, start: Optional[Label] = None
) -> CountTable:
    """Walk counts by dynamic programming over root-reachable vertices"""
    if n_max < 0:
        raise InvalidSpecError("n_max must be nonnegative")
    origin = g.root if start is None else start
    layers: List[Dict[Any, int]] = [{origin: 1}]
    for _ in range(n_max):
        nxt: DefaultDict[Any, int] = defaultdict(int)
        for v, count in layers[-1].items():
            for w in g.targets(v):
                nxt[w] += count
        layers.append(dict(nxt))
    logger.debug(f"Counted walks on {g.name} to depth {n_max}")
    return CountTable(graph=g.name, start=origin, layers=layers)


def catalan_numbers(g: RootedGraph, m: int) -> List[int]:
    """N(2n; root) for n = 0..m, cross-checked by sums of squares when undirected"""
    if m < 0:
        raise InvalidSpecError("m must be nonnegative")
    table = layer_counts(g, 2 * m)
    closed = [table.get(2 * n, g.root) for n in range(m + 1)]
    if g.undirected:
        squares = [table.sum_of_squares(n) for n in range(m + 1)]
        if squares != closed:
            raise InconsistentCountError(
                f"Closed walks and sums of squares disagree on {g.name}",
                errors=[{"closed": closed, "squares": squares}],
            )
    return closed


def enumerate_walks(
    g: RootedGraph, n: int, target: Optional[Label] = None
) -> List[Walk]:
    """All walks of length n (ending at target, if given) in lexicographic order"""
    if n < 0:
        raise InvalidSpecError("Walk length must be nonnegative")
    back = layer_counts(g, n, start=target) if target is not None and g.undirected else None
    walks: List[Walk] = []
    steps: List[int] = []

    def extend(v: Label) -> None:
        remaining = n - len(steps)
        if back is not None and back.get(remaining, v) == 0:
            return
        if remaining == 0:
            if target is None or v == target:
                walks.append(Walk(g.name, tuple(steps), v))
            return
        for key, w in g.out(v):
            steps.append(key)
            extend(w)
            steps.pop()

    extend(g.root)
    return walks


@dataclass(frozen=True)
class WalkConstraint:
    """Forbidden vertices plus (trigger, required-later) rules"""

    forbidden: FrozenSet[Any] = frozenset()
    rules: Tuple[Tuple[Any, Any], ...] = ()

    def admits(self, vertices: Sequence[Label]) -> bool:
        """Suffix scan of a visited-vertex sequence"""
        if any(v in self.forbidden for v in vertices):
            return False
        later: set = set()
        for v in reversed(vertices):
            for trigger, required in self.rules:
                if v == trigger and required not in later:
                    return False
            later.add(v)
        return True

    def arrive(self, pending: FrozenSet[Any], w: Label) -> FrozenSet[Any]:
        """Automaton transition on visiting w"""
        remaining = {r for r in pending if r != w}
        remaining.update(required for trigger, required in self.rules if trigger == w)
        return frozenset(remaining)


def restricted_count(
    g: RootedGraph,
    n: int,
    target: Label,
    constraint: WalkConstraint,
    method: str = "auto",
) -> int:
    """Number of length-n walks to target obeying the constraint"""
    if method == "auto":
        method = "enumerate" if n <= settings.enumeration_cap else "automaton"

    if method == "enumerate":
        return sum(
            1
            for walk in enumerate_walks(g, n, target)
            if constraint.admits(walk_vertices(g, walk))
        )

    if method != "automaton":
        raise InvalidSpecError(f"Unknown counting method {method!r}")
    if g.root in constraint.forbidden:
        return 0
    states: Dict[Tuple[Any, FrozenSet[Any]], int] = {
        (g.root, constraint.arrive(frozenset(), g.root)): 1
    }
    for _ in range(n):
        nxt: DefaultDict[Tuple[Any, FrozenSet[Any]], int] = defaultdict(int)
        for (v, pending), count in states.items():
            for w in g.targets(v):
                if w in constraint.forbidden:
                    continue
                nxt[(w, constraint.arrive(pending, w))] += count
        states = dict(nxt)
    return sum(
        count for (v, pending), count in states.items() if v == target and not pending
    )
