"""
Type-A root clusters for the Coxeter element c = s_n ... s_1, tagged clusters and
their Pascal array on A∞
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from pascal_arrays.core.config import settings
from pascal_arrays.core.exceptions import (
    ClusterError,
    IllegalEdgeError,
    InconsistentCountError,
    InvalidSpecError,
)
from pascal_arrays.services.graphs import RootedGraph, a_inf
from pascal_arrays.services.pascal import CatalanSequence, Element, PascalFamily

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class APRoot:
    """An almost positive root: −α_i, or α_start + ... + α_end"""

    start: int
    end: int
    negative: bool = False

    @classmethod
    def neg(cls, i: int) -> "APRoot":
        return cls(i, i, True)

    @classmethod
    def pos(cls, i: int, j: Optional[int] = None) -> "APRoot":
        return cls(i, i if j is None else j)

    def inside(self, lo: int, hi: int) -> bool:
        return lo <= self.start and self.end <= hi

    def support(self, i: int) -> bool:
        return not self.negative and self.start <= i <= self.end

    def sort_key(self) -> Tuple[int, int, int]:
        return (self.start, 0 if self.negative else 1, self.end)

    def __str__(self) -> str:
        return format_root(self)


Cluster = Tuple[APRoot, ...]


def format_root(root: APRoot, tagged: bool = False) -> str:
    if root.negative:
        return f"-a{root.start}" + ("~" if tagged else "")
    return "+".join(f"a{i}" for i in range(root.start, root.end + 1))


def parse_root(text: str) -> Tuple[APRoot, bool]:
    """`-a1~` is a tagged −α₁, `a1+a2` is α₁+α₂"""
    text = text.strip()
    try:
        if text.startswith("-"):
            tagged = text.endswith("~")
            body = text[1:-1] if tagged else text[1:]
            if not body.startswith("a"):
                raise ValueError(text)
            return APRoot.neg(int(body[1:])), tagged
        indices = [int(part[1:]) for part in text.split("+") if part.startswith("a")]
    except ValueError as exc:
        raise InvalidSpecError(f"Malformed root {text!r}") from exc
    if not indices or len(indices) != len(text.split("+")):
        raise InvalidSpecError(f"Malformed root {text!r}")
    if indices != list(range(indices[0], indices[0] + len(indices))):
        raise InvalidSpecError(f"Root {text!r} is not a sum of consecutive simples")
    return APRoot.pos(indices[0], indices[-1]), False


def sort_roots(roots) -> Cluster:
    return tuple(sorted(roots, key=APRoot.sort_key))


def format_cluster(cluster: Sequence[APRoot]) -> str:
    if not cluster:
        return "φ"
    return ",".join(format_root(root) for root in sort_roots(cluster))


def parse_cluster(text: str) -> Cluster:
    text = text.strip()
    if text in ("", "φ"):
        return ()
    roots = []
    for part in text.split(","):
        root, tagged = parse_root(part)
        if tagged:
            raise InvalidSpecError(f"Untagged cluster expected, got {text!r}")
        roots.append(root)
    return sort_roots(roots)


def almost_positive_roots(rank: int) -> List[APRoot]:
    """Φ≥−1 of type A_rank: negative simples first, then positive roots"""
    negatives = [APRoot.neg(i) for i in range(1, rank + 1)]
    positives = [APRoot.pos(i, j) for i in range(1, rank + 1) for j in range(i, rank + 1)]
    return negatives + positives


def sigma(i: int, root: APRoot, rank: Optional[int] = None) -> APRoot:
    """σ_i: swaps ±α_i, fixes other negative simples, reflects by s_i otherwise"""
    if i < 1 or (rank is not None and i > rank):
        raise InvalidSpecError(f"No simple reflection s{i} in rank {rank}")
    if root.negative:
        return APRoot.pos(i) if root.start == i else root
    a, b = root.start, root.end
    if a == b == i:
        return APRoot.neg(i)
    if i == a - 1:
        return APRoot.pos(a - 1, b)
    if i == b + 1:
        return APRoot.pos(a, b + 1)
    if i == a:
        return APRoot.pos(a + 1, b)
    if i == b:
        return APRoot.pos(a, b - 1)
    return root


def _negative_rule(alpha: APRoot, beta: APRoot) -> bool:
    if alpha.negative and beta.negative:
        return True
    if alpha.negative:
        return not beta.support(alpha.start)
    return not alpha.support(beta.start)


def compatible(alpha: APRoot, beta: APRoot, rank: int) -> bool:
    """c-compatibility; rotates c = s_rank ... s_1 until a negative simple appears"""
    if alpha == beta:
        return True
    word = list(range(rank, 0, -1))
    for _ in range((rank + 1) * (rank + 2)):
        if alpha.negative or beta.negative:
            return _negative_rule(alpha, beta)
        s = word.pop(0)
        word.append(s)
        alpha, beta = sigma(s, alpha), sigma(s, beta)
    raise ClusterError(f"Compatibility of {alpha} and {beta} did not settle")


def is_cluster(roots: Sequence[APRoot], rank: int) -> bool:
    if len(set(roots)) != rank or any(not r.inside(1, rank) for r in roots):
        return False
    return all(compatible(a, b, rank) for a, b in combinations(roots, 2))


@lru_cache(maxsize=None)
def _clusters(rank: int) -> Tuple[Cluster, ...]:
    roots = almost_positive_roots(rank)
    ok = {
        (a, b): compatible(a, b, rank) for a in roots for b in roots if a != b
    }
    found: List[Cluster] = []

    def extend(chosen: List[APRoot], start: int) -> None:
        if len(chosen) == rank:
            found.append(sort_roots(chosen))
            return
        for index in range(start, len(roots)):
            candidate = roots[index]
            if all(ok[(candidate, other)] for other in chosen):
                chosen.append(candidate)
                extend(chosen, index + 1)
                chosen.pop()

    extend([], 0)
    logger.debug(f"Enumerated {len(found)} clusters of type A{rank}")
    return tuple(sorted(found, key=lambda c: [r.sort_key() for r in c]))


def _check_rank(rank: int) -> None:
    if rank < 0:
        raise InvalidSpecError("Rank must be nonnegative")
    if rank > settings.cluster_max_rank:
        raise InvalidSpecError(
            f"Rank {rank} exceeds the cluster cap {settings.cluster_max_rank}"
        )


def enumerate_clusters(rank: int) -> List[Cluster]:
    """All maximal pairwise-compatible subsets of Φ≥−1 (each has `rank` roots)"""
    _check_rank(rank)
    return list(_clusters(rank))


# Tagged clusters


def layer_rank(n: int) -> int:
    """Type A_r of the clusters in layer n"""
    return (n - 1) // 2 if n % 2 else n // 2 - 1


@dataclass(frozen=True)
class TaggedCluster:
    """Cluster of layer n with barred negative simples and an optional global tag"""

    n: int
    roots: Cluster
    bars: FrozenSet[int] = frozenset()
    plus: bool = False

    def __post_init__(self):
        negatives = {r.start for r in self.roots if r.negative}
        if not self.bars <= negatives:
            raise ClusterError(f"Tags on roots missing from {format_cluster(self.roots)}")
        if self.plus and self.n % 2:
            raise ClusterError(f"Odd layer {self.n} carries no global tag")

    @property
    def rank(self) -> int:
        return max(layer_rank(self.n), 0)

    def sort_key(self) -> Tuple:
        return (
            tuple(r.sort_key() for r in self.roots),
            tuple(sorted(self.bars)),
            self.plus,
        )

    @property
    def tags(self) -> int:
        return len(self.bars) + (1 if self.plus else 0)

    @property
    def vertex(self) -> int:
        return 2 * self.tags + (self.n % 2)

    def encode(self) -> str:
        parts = [format_root(r, r.negative and r.start in self.bars) for r in self.roots]
        text = ",".join(parts) if parts else "φ"
        return text + (",+" if self.plus else "")

    @classmethod
    def decode(cls, n: int, text: str) -> "TaggedCluster":
        parts = [p for p in text.strip().split(",") if p.strip()]
        plus = bool(parts) and parts[-1].strip() == "+"
        if plus:
            parts = parts[:-1]
        roots, bars = [], set()
        for part in parts:
            if part.strip() == "φ":
                continue
            root, tagged = parse_root(part)
            roots.append(root)
            if tagged:
                bars.add(root.start)
        return cls(n, sort_roots(roots), frozenset(bars), plus)

    def __str__(self) -> str:
        return self.encode()


def tagged_universe(n: int) -> List[TaggedCluster]:
    """Y_c(n; ·): every cluster of the layer's type with every admissible tagging"""
    result = []
    for cluster in enumerate_clusters(max(layer_rank(n), 0)):
        negatives = [r.start for r in cluster if r.negative]
        for size in range(len(negatives) + 1):
            for bars in combinations(negatives, size):
                for plus in (False, True) if n % 2 == 0 else (False,):
                    t = TaggedCluster(n, cluster, frozenset(bars), plus)
                    if t.vertex <= n:
                        result.append(t)
    return result


def l_map(roots: Sequence[APRoot], i: int) -> int:
    """L_S(i): one past the largest j < i with −α_j in S, else 1"""
    below = [r.start for r in roots if r.negative and r.start < i]
    return max(below) + 1 if below else 1


def cluster_edge(direction: str, t: TaggedCluster) -> TaggedCluster:
    """φ_c⁺ ("up") or φ_c⁻ ("down") from layer n to n+1"""
    if direction == "up":
        if t.n % 2:
            return TaggedCluster(t.n + 1, t.roots, t.bars, True)
        new = t.n // 2
        if new == 0:
            return TaggedCluster(1, ())
        bars = t.bars | {new} if t.plus else t.bars
        return TaggedCluster(t.n + 1, sort_roots(t.roots + (APRoot.neg(new),)), bars)

    if direction != "down":
        raise InvalidSpecError(f"Unknown cluster edge {direction!r}")
    if t.vertex < 1:
        raise IllegalEdgeError(f"{t} has no tag to remove")
    if t.n % 2:
        return TaggedCluster(t.n + 1, t.roots, t.bars)

    top = layer_rank(t.n) + 1
    if t.plus:
        added = APRoot.pos(l_map(t.roots, top), top)
        return TaggedCluster(t.n + 1, sort_roots(t.roots + (added,)), t.bars)

    k = max(t.bars)
    roots = [
        APRoot.pos(r.start + 1, top) if r.negative and r.start >= k else r for r in t.roots
    ]
    roots.append(APRoot.pos(l_map(t.roots, k), top))
    return TaggedCluster(t.n + 1, sort_roots(roots), t.bars - {k})


class ClusterFamily(PascalFamily):
    """Y_c: tagged clusters; payloads encode as `n:roots`"""

    name = "cluster"
    cap = 8

    def __init__(self, graph: Optional[RootedGraph] = None):
        super().__init__(graph or a_inf())

    def origin(self) -> TaggedCluster:
        return TaggedCluster(0, ())

    def edge_map(self, x: Element, key: int, target: int) -> TaggedCluster:
        return cluster_edge("up" if target == x.vertex + 1 else "down", x.payload)

    def classify(self, payload: TaggedCluster) -> Tuple[int, int]:
        return payload.n, payload.vertex

    def universe(self, n: int) -> List[TaggedCluster]:
        return tagged_universe(n)

    def encode(self, payload: TaggedCluster) -> str:
        return f"{payload.n}:{payload.encode()}"

    def decode(self, text: str) -> TaggedCluster:
        head, sep, body = text.partition(":")
        if not sep:
            raise InvalidSpecError(f"Cluster payload {text!r} lacks its layer prefix")
        try:
            n = int(head)
        except ValueError as exc:
            raise InvalidSpecError(f"Bad layer in {text!r}") from exc
        t = TaggedCluster.decode(n, body)
        if not all(r.inside(1, t.rank) for r in t.roots) or (
            t.roots and not is_cluster(t.roots, t.rank)
        ):
            raise ClusterError(f"{body!r} is not a cluster of type A{t.rank}")
        return t


# Bra-ket extraction


def _reflect(root: APRoot, n: int) -> APRoot:
    """α_i ↦ α_{n−i}"""
    if root.negative:
        return APRoot.neg(n - root.start)
    return APRoot.pos(n - root.end, n - root.start)


def _check_cluster(cluster: Sequence[APRoot], n: int) -> int:
    if n < 0:
        raise InvalidSpecError("Layer must be nonnegative")
    rank = max(n - 1, 0)
    _check_rank(rank)
    if len(cluster) != rank or not is_cluster(cluster, rank):
        raise ClusterError(f"{format_cluster(cluster)} is not a cluster of type A{rank}")
    return rank


def extract_braket(
    cluster: Sequence[APRoot], n: int
) -> Optional[Tuple[TaggedCluster, TaggedCluster]]:
    """Replacement procedure on a cluster of type A_{n−1}

    Returns None when the replaced roots cross the middle, when the global tag
    could go either way, or when C and D end up with different tag counts.
    """
    _check_cluster(cluster, n)
    if n == 0:
        return TaggedCluster(0, ()), TaggedCluster(0, ())

    odd = n % 2 == 1
    r = layer_rank(n)
    first_right = r + 1 if odd else r + 2
    ending: Dict[int, List[APRoot]] = {
        k: sorted((a for a in cluster if not a.negative and a.end == k), key=APRoot.sort_key)
        for k in range(1, n)
    }

    removed, added, bars = set(), set(), set()
    for k in range(r + 1, n):
        ys = ending[k]
        starts = [a.start for a in ys]
        if not starts:
            continue
        if odd:
            alone = all(i >= r + 1 for i in starts)
        elif k > r + 1:
            alone = all(i >= r + 2 for i in starts)
        else:
            alone = starts == [r + 1]
        if alone:
            continue
        if len(ys) == 1:
            t = next((t for t in range(k - 1, first_right - 1, -1) if len(ending[t]) > 1), None)
            if t is None:
                t = r if odd or k == r + 1 else r + 1
            removed.add(ys[0])
            added.add(APRoot.pos(t + 1, k))
        else:
            removed.update(ys)
            added.add(APRoot.neg(k))
            added.update(APRoot.neg(i - 1) for i in starts[1:])
            bars.update({starts[1] - 1, k})

    roots = (set(cluster) - removed) | added
    left = [a for a in roots if a.inside(1, r)]
    right = [a for a in roots if a.inside(first_right, n - 1)]
    middle = [a for a in roots if not odd and a.inside(r + 1, r + 1)]
    if len(left) + len(right) + len(middle) != len(roots):
        return None

    c_bars = frozenset(i for i in bars if i <= r)
    d_bars = frozenset(n - i for i in bars if i >= first_right)
    c_plus = d_plus = False
    if middle:
        (mid,) = middle
        if not mid.negative:
            c_plus = d_plus = True
        elif mid.start in bars:
            c_tags, d_tags = len(c_bars), len(d_bars)
            if c_tags == d_tags:
                return None
            c_plus, d_plus = c_tags < d_tags, d_tags < c_tags

    c = TaggedCluster(n, sort_roots(left), c_bars, c_plus)
    d = TaggedCluster(n, sort_roots(_reflect(a, n) for a in right), d_bars, d_plus)
    if not (is_cluster(c.roots, r) and is_cluster(d.roots, r)) or c.tags != d.tags:
        return None
    return c, d


Pair = Tuple[TaggedCluster, TaggedCluster]


@lru_cache(maxsize=None)
def _build_table(n: int) -> Tuple[Dict[Cluster, Pair], Tuple[Cluster, ...]]:
    members = [()] if n == 0 else enumerate_clusters(n - 1)
    table: Dict[Cluster, Pair] = {}
    used = set()
    pending: List[Cluster] = []
    for x in members:
        pair = extract_braket(x, n)
        if pair is None or pair in used:
            pending.append(x)
            continue
        table[x] = pair
        used.add(pair)

    cells: Dict[int, List[TaggedCluster]] = {}
    for t in sorted(tagged_universe(n), key=TaggedCluster.sort_key):
        cells.setdefault(t.vertex, []).append(t)
    free = [
        (c, d)
        for v in sorted(cells)
        for c in cells[v]
        for d in cells[v]
        if (c, d) not in used
    ]
    if len(free) != len(pending):
        raise InconsistentCountError(
            f"{len(pending)} clusters of type A{n - 1} left for {len(free)} free pairs"
        )
    table.update(zip(pending, free))
    if pending:
        logger.debug(f"Matched {len(pending)} clusters of layer {n} to unused pairs")
    return table, tuple(pending)


def braket_table(n: int) -> Dict[Cluster, Pair]:
    """Cluster ↦ (C, D) for every cluster of type A_{n−1}

    Extracted pairs are kept in cluster order. Clusters whose extraction fails or
    repeats an earlier pair take the unused pairs over a common vertex, both
    sides in canonical order.
    """
    _check_rank(max(n - 1, 0))
    return dict(_build_table(n)[0])


def matched_clusters(n: int) -> List[Cluster]:
    """Clusters of layer n whose pair comes from matching instead of extraction"""
    _check_rank(max(n - 1, 0))
    return list(_build_table(n)[1])


def cluster_braket(cluster: Sequence[APRoot], n: int) -> Pair:
    """Split a cluster of type A_{n−1} into tagged clusters (C, D) of layer n"""
    _check_cluster(cluster, n)
    return _build_table(n)[0][sort_roots(cluster)]


class ClusterSequence(CatalanSequence):
    """Clusters of type A_{n−1} split into bra-ket pairs of Y_c(n; l)"""

    name = "cluster"
    cap = 6

    def __init__(self):
        family = ClusterFamily()
        super().__init__(family, family)
        self._inverse: Dict[int, Dict[Pair, Cluster]] = {}

    def members(self, n: int) -> List[Cluster]:
        return [()] if n == 0 else enumerate_clusters(n - 1)

    def decompose(self, n: int, x: Cluster) -> Tuple[Element, Element]:
        c, d = cluster_braket(x, n)
        return self.bra.element(c), self.ket.element(d)

    def compose(self, n: int, bra: Element, ket: Element) -> Cluster:
        inverse = self._inverse.get(n)
        if inverse is None:
            inverse = {pair: x for x, pair in braket_table(n).items()}
            self._inverse[n] = inverse
        try:
            return inverse[(bra.payload, ket.payload)]
        except KeyError:
            raise ClusterError(f"No cluster splits as ({bra.payload} ; {ket.payload})")

    def encode(self, x: Cluster) -> str:
        return format_cluster(x)

    def decode(self, text: str) -> Cluster:
        return parse_cluster(text)
