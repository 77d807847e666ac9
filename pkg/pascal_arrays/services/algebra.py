"""
Diagram algebras over polynomial scalars: products, Gram matrices, standard
modules, dimension identities and truncated-walk simple dimensions
"""
import logging
import operator
from abc import ABC, abstractmethod
from collections import defaultdict
from itertools import product
from math import prod
from typing import Any, Callable, DefaultDict, Dict, List, Optional, Sequence, Tuple

import sympy

from pascal_arrays.core.config import settings
from pascal_arrays.core.exceptions import (
    DecorationError,
    InvalidSpecError,
    SizeMismatchError,
)
from pascal_arrays.schemas.report import CheckStatus, IdentityReport
from pascal_arrays.services.decorated import (
    BLOB,
    SQUARE,
    BlobDiagram,
    BlobFamily,
    ContourDiagram,
    ContourFamily,
    DBlobFamily,
    DDiagram,
    cover_levels,
    enum_blob,
    enum_contour,
    enum_dblob,
    quantum_integer,
    top_level_chords,
)
from pascal_arrays.services.diagrams import (
    HalfDiagram,
    PairDiagram,
    enum_ncpp,
    half_diagrams,
    identity_diagram,
    tl_cut,
    tl_join,
)
from pascal_arrays.services.graphs import (
    RootedGraph,
    WalkConstraint,
    a_inf,
    a_inf_inf,
    format_label,
    layer_counts,
    restricted_count,
    truncate,
    young,
)
from pascal_arrays.services.partitions import (
    BellFamily,
    BrauerFamily,
    canonical,
    enum_pair_partitions,
    enum_set_partitions,
    format_set_partition,
    ground,
    parse_set_partition,
)
from pascal_arrays.services.pascal import PascalFamily, layer_sizes
from pascal_arrays.services.typea import TLFamily

logger = logging.getLogger(__name__)

DELTA = sympy.Symbol("δ")
DELTA_PRIME = sympy.Symbol("δ'")


def contour_delta(blobs: int) -> sympy.Symbol:
    """Loop value of a loop carrying `blobs` blobs"""
    return sympy.Symbol(f"δ{blobs}")


def loop_value(q) -> sympy.Expr:
    """δ = [2] under the quantum parametrization"""
    return quantum_integer(2, q)


# Stacking


class _UnionFind:
    def __init__(self):
        self.parent: Dict[Any, Any] = {}

    def find(self, x: Any) -> Any:
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: Any, b: Any) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def _node(p: int, upper: bool) -> Tuple[str, int]:
    if upper:
        return ("t", p) if p > 0 else ("m", -p)
    return ("m", p) if p > 0 else ("b", -p)


def stack_blocks(
    upper: Sequence[Sequence[int]],
    lower: Sequence[Sequence[int]],
    upper_decorations: Optional[Sequence[Any]] = None,
    lower_decorations: Optional[Sequence[Any]] = None,
    combine: Callable[[Any, Any], Any] = lambda a, b: None,
    unit: Any = None,
) -> Tuple[List[Tuple[Tuple[int, ...], Any]], List[Any]]:
    """Glue the bottom of `upper` to the top of `lower`.

    Returns the outer components as point tuples with their combined decoration,
    and the decorations of the components lying entirely in the middle.
    """
    uf = _UnionFind()
    anchors: List[Tuple[Tuple[str, int], Any]] = []
    for blocks, decorations, is_upper in (
        (upper, upper_decorations, True),
        (lower, lower_decorations, False),
    ):
        decorations = decorations if decorations is not None else [unit] * len(blocks)
        for block, decoration in zip(blocks, decorations):
            nodes = [_node(p, is_upper) for p in block]
            for node in nodes:
                uf.union(nodes[0], node)
            anchors.append((nodes[0], decoration))

    values: Dict[Any, Any] = {}
    for node, decoration in anchors:
        root = uf.find(node)
        values[root] = combine(values[root], decoration) if root in values else decoration

    members: DefaultDict[Any, List[Tuple[str, int]]] = defaultdict(list)
    for node in list(uf.parent):
        members[uf.find(node)].append(node)

    outer, loops = [], []
    for root, nodes in members.items():
        points = tuple(i if kind == "t" else -i for kind, i in nodes if kind != "m")
        if points:
            outer.append((points, values.get(root, unit)))
        else:
            loops.append(values.get(root, unit))
    return outer, loops


def _chord_key(points: Sequence[int]) -> frozenset:
    return frozenset(points)


# Algebras


class DiagramAlgebra(ABC):
    """A diagram basis with a reduction rule for products"""

    name: str = "algebra"

    def __init__(self, n: int):
        if n < 0:
            raise InvalidSpecError("Diagram algebras need n ≥ 0")
        self.n = n

    @abstractmethod
    def basis(self) -> List[Any]:
        """All basis diagrams"""

    @abstractmethod
    def product(self, a: Any, b: Any) -> Dict[Any, sympy.Expr]:
        """Product of two basis diagrams as a linear combination"""

    @abstractmethod
    def propagating(self, d: Any) -> int:
        """Number of propagating lines of a basis diagram"""

    @abstractmethod
    def one_terms(self) -> Dict[Any, sympy.Expr]:
        """The unit as a linear combination"""

    @abstractmethod
    def half_family(self) -> Tuple[PascalFamily, int]:
        """Pascal family and layer giving the half-diagram counts"""

    def encode(self, d: Any) -> str:
        return str(d)

    def decode(self, text: str) -> Any:
        raise InvalidSpecError(f"{self.name} diagrams cannot be parsed")

    def one(self) -> "AlgebraElement":
        return AlgebraElement(self, self.one_terms())

    def element(self, d: Any) -> "AlgebraElement":
        return AlgebraElement(self, {d: sympy.Integer(1)})

    def parse(self, text: str) -> "AlgebraElement":
        return self.element(self.decode(text))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(n={self.n})"


class AlgebraElement:
    """Formal linear combination of basis diagrams"""

    def __init__(self, algebra: DiagramAlgebra, terms: Dict[Any, Any]):
        self.algebra = algebra
        self.terms: Dict[Any, sympy.Expr] = {}
        for d, c in terms.items():
            c = sympy.expand(c)
            if c != 0:
                self.terms[d] = c

    def _check(self, other: "AlgebraElement") -> None:
        if (self.algebra.name, self.algebra.n) != (other.algebra.name, other.algebra.n):
            raise SizeMismatchError(
                f"Cannot combine {self.algebra.name}({self.algebra.n}) with "
                f"{other.algebra.name}({other.algebra.n})"
            )

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        terms: DefaultDict[Any, Any] = defaultdict(int, self.terms)
        for d, c in other.terms.items():
            terms[d] += c
        return AlgebraElement(self.algebra, terms)

    def __mul__(self, other: Any) -> "AlgebraElement":
        if isinstance(other, AlgebraElement):
            return multiply(self.algebra, self, other)
        return AlgebraElement(self.algebra, {d: c * other for d, c in self.terms.items()})

    def __rmul__(self, scalar: Any) -> "AlgebraElement":
        return AlgebraElement(self.algebra, {d: scalar * c for d, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return (
            self.algebra.name == other.algebra.name
            and self.algebra.n == other.algebra.n
            and self.terms.keys() == other.terms.keys()
            and all(sympy.expand(c - other.terms[d]) == 0 for d, c in self.terms.items())
        )

    def __hash__(self) -> int:
        return hash((self.algebra.name, self.algebra.n, frozenset(self.terms)))

    def max_propagating(self) -> int:
        return max((self.algebra.propagating(d) for d in self.terms), default=0)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for text, c in sorted((self.algebra.encode(d), c) for d, c in self.terms.items()):
            coefficient = sympy.sstr(c, order="lex")
            if isinstance(c, sympy.Add):
                coefficient = f"({coefficient})"
            parts.append(f"{coefficient} * {text}")
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"AlgebraElement({self.algebra.name}, {self})"


def multiply(algebra: DiagramAlgebra, a: AlgebraElement, b: AlgebraElement) -> AlgebraElement:
    """Bilinear extension of the diagram product; `a` sits on top of `b`"""
    a._check(b)
    if a.algebra.name != algebra.name or a.algebra.n != algebra.n:
        raise SizeMismatchError(f"Operands do not belong to {algebra.name}({algebra.n})")
    terms: DefaultDict[Any, Any] = defaultdict(int)
    for da, ca in a.terms.items():
        for db, cb in b.terms.items():
            for d, c in algebra.product(da, db).items():
                terms[d] += ca * cb * c
    return AlgebraElement(algebra, terms)


def tl_generator(n: int, i: int) -> PairDiagram:
    """U_i: cup-cap at i, i+1 and through lines elsewhere"""
    if not 1 <= i < n:
        raise InvalidSpecError(f"U{i} does not exist for n = {n}")
    pairs = [(i, i + 1), (-i, -(i + 1))]
    pairs += [(j, -j) for j in range(1, n + 1) if j not in (i, i + 1)]
    return PairDiagram.build(n, n, pairs)


class TemperleyLieb(DiagramAlgebra):
    name = "tl"

    def basis(self) -> List[PairDiagram]:
        return enum_ncpp(self.n)

    def product(self, a: PairDiagram, b: PairDiagram) -> Dict[PairDiagram, sympy.Expr]:
        outer, loops = stack_blocks(a.arcs, b.arcs)
        d = PairDiagram.build(self.n, self.n, [points for points, _ in outer])
        return {d: DELTA ** len(loops)}

    def propagating(self, d: PairDiagram) -> int:
        return d.propagating_count

    def one_terms(self) -> Dict[PairDiagram, sympy.Expr]:
        return {identity_diagram(self.n): sympy.Integer(1)}

    def half_family(self) -> Tuple[PascalFamily, int]:
        return TLFamily(), self.n

    def generators(self) -> Dict[str, PairDiagram]:
        names = {"1": identity_diagram(self.n)}
        for i in range(1, self.n):
            names["U" if self.n == 2 else f"U{i}"] = tl_generator(self.n, i)
        return names

    def encode(self, d: PairDiagram) -> str:
        for name, g in self.generators().items():
            if g == d:
                return name
        return d.disk_word()

    def decode(self, text: str) -> PairDiagram:
        text = text.strip()
        names = self.generators()
        if text in names:
            return names[text]
        return PairDiagram.from_disk_word(self.n, self.n, text)


class _SetPartitionAlgebra(DiagramAlgebra):
    def product(self, a, b) -> Dict[Any, sympy.Expr]:
        outer, loops = stack_blocks(a, b)
        return {canonical([points for points, _ in outer]): DELTA ** len(loops)}

    def propagating(self, d) -> int:
        return sum(1 for block in d if min(block) < 0 < max(block))

    def one_terms(self) -> Dict[Any, sympy.Expr]:
        return {canonical([(i, -i) for i in range(1, self.n + 1)]): sympy.Integer(1)}

    def encode(self, d) -> str:
        return format_set_partition(d)

    def decode(self, text: str):
        d = parse_set_partition(text)
        if sorted(p for block in d for p in block) != sorted(ground(self.n)):
            raise InvalidSpecError(f"{text!r} is not a diagram on {self.n} ∪ {self.n}'")
        return d


class PartitionAlgebra(_SetPartitionAlgebra):
    name = "partition"

    def basis(self):
        return enum_set_partitions(ground(self.n))

    def half_family(self) -> Tuple[PascalFamily, int]:
        return BellFamily(), 2 * self.n


class BrauerAlgebra(_SetPartitionAlgebra):
    name = "brauer"

    def basis(self):
        return enum_pair_partitions(ground(self.n))

    def half_family(self) -> Tuple[PascalFamily, int]:
        return BrauerFamily(), self.n

    def decode(self, text: str):
        d = super().decode(text)
        if any(len(block) != 2 for block in d):
            raise InvalidSpecError(f"{text!r} is not a pair partition")
        return d


def _aligned(pair: PairDiagram, outer: List[Tuple[Tuple[int, ...], Any]]) -> List[Any]:
    """Component decorations in the order of pair.arcs"""
    by_chord = {_chord_key(points): value for points, value in outer}
    return [by_chord[_chord_key(arc)] for arc in pair.arcs]


def _west_decorations(pair: PairDiagram, values: List[Any], blank: Any) -> List[Any]:
    """Decorations of the top-level chords; others must be blank"""
    chords = set(top_level_chords(pair))
    for arc, value in zip(pair.arcs, values):
        if arc not in chords and value != blank:
            raise DecorationError(f"Decoration on a chord of {pair.disk_word()} away from the west face")
    return [value for arc, value in zip(pair.arcs, values) if arc in chords]


def _sized(algebra: DiagramAlgebra, d: Any) -> Any:
    if d.pair.n != algebra.n:
        raise SizeMismatchError(f"{d.encode()!r} has {d.pair.n} points, expected {algebra.n}")
    return d


class BlobAlgebra(DiagramAlgebra):
    """Blob algebra in the {•, □} basis; loops give δ (plain) and δ' (blobbed)"""

    name = "blob"

    def basis(self) -> List[BlobDiagram]:
        return enum_blob(self.n)

    @staticmethod
    def _optional(d: BlobDiagram) -> List[Tuple[int, List[bool]]]:
        """Rewrite □ = 1 − • over the chords of d"""
        chords = set(top_level_chords(d.pair))
        marks = iter(d.marks)
        options = []
        for arc in d.pair.arcs:
            if arc not in chords:
                options.append([(1, False)])
            elif next(marks) == BLOB:
                options.append([(1, True)])
            else:
                options.append([(1, False), (-1, True)])
        return [
            (prod(sign for sign, _ in choice), [flag for _, flag in choice])
            for choice in product(*options)
        ]

    def product(self, a: BlobDiagram, b: BlobDiagram) -> Dict[BlobDiagram, sympy.Expr]:
        terms: DefaultDict[BlobDiagram, Any] = defaultdict(int)
        for sign_a, flags_a in self._optional(a):
            for sign_b, flags_b in self._optional(b):
                outer, loops = stack_blocks(
                    a.pair.arcs, b.pair.arcs, flags_a, flags_b, operator.or_, False
                )
                scalar = sign_a * sign_b * prod(DELTA_PRIME if blob else DELTA for blob in loops)
                pair = PairDiagram.build(self.n, self.n, [points for points, _ in outer])
                west = _west_decorations(pair, _aligned(pair, outer), False)
                choices = [[BLOB] if flag else [BLOB, SQUARE] for flag in west]
                for marks in product(*choices):
                    terms[BlobDiagram(pair, tuple(marks))] += scalar
        return dict(terms)

    def propagating(self, d: BlobDiagram) -> int:
        return d.pair.propagating_count

    def one_terms(self) -> Dict[BlobDiagram, sympy.Expr]:
        identity = identity_diagram(self.n)
        if self.n == 0:
            return {BlobDiagram(identity, ()): sympy.Integer(1)}
        return {BlobDiagram(identity, (mark,)): sympy.Integer(1) for mark in (BLOB, SQUARE)}

    def half_family(self) -> Tuple[PascalFamily, int]:
        return BlobFamily(), self.n

    def encode(self, d: BlobDiagram) -> str:
        return d.encode()

    def decode(self, text: str) -> BlobDiagram:
        return _sized(self, BlobDiagram.decode(text))


class DnAlgebra(DiagramAlgebra):
    """Blobs mod 2 on west-exposed chords; odd loops vanish, even loops give δ"""

    name = "dn"

    def basis(self) -> List[DDiagram]:
        return enum_dblob(self.n)

    def product(self, a: DDiagram, b: DDiagram) -> Dict[DDiagram, sympy.Expr]:
        outer, loops = stack_blocks(
            a.pair.arcs, b.pair.arcs, self._flags(a), self._flags(b), operator.xor, False
        )
        if any(loops):
            return {}
        pair = PairDiagram.build(self.n, self.n, [points for points, _ in outer])
        west = _west_decorations(pair, _aligned(pair, outer), False)
        return {DDiagram(pair, tuple(west)): DELTA ** len(loops)}

    @staticmethod
    def _flags(d: DDiagram) -> List[bool]:
        blobbed = {arc for arc, blob in zip(top_level_chords(d.pair), d.blobs) if blob}
        return [arc in blobbed for arc in d.pair.arcs]

    def propagating(self, d: DDiagram) -> int:
        return d.pair.propagating_count

    def one_terms(self) -> Dict[DDiagram, sympy.Expr]:
        identity = identity_diagram(self.n)
        blobs = (False,) * len(top_level_chords(identity))
        return {DDiagram(identity, blobs): sympy.Integer(1)}

    def half_family(self) -> Tuple[PascalFamily, int]:
        return DBlobFamily(), self.n

    def encode(self, d: DDiagram) -> str:
        return d.encode()

    def decode(self, text: str) -> DDiagram:
        return _sized(self, DDiagram.decode(text))


class ContourAlgebra(DiagramAlgebra):
    """Level-k d-colour contour algebra; loops with j blobs give δj"""

    name = "contour"

    def __init__(self, n: int, k: int = 1, d: int = 2, mode: Optional[str] = None):
        super().__init__(n)
        self.k = k
        self.d = d
        self.mode = mode or settings.contour_mode
        if self.mode not in ("blob", "cyclotomic"):
            raise InvalidSpecError(f"Unknown contour mode {self.mode!r}")

    def _combine(self, a: int, b: int) -> int:
        if self.mode == "blob":
            return max(a, b)
        return (a + b) % self.d

    def basis(self) -> List[ContourDiagram]:
        return enum_contour(self.n, self.k, self.d)

    def product(self, a: ContourDiagram, b: ContourDiagram) -> Dict[ContourDiagram, sympy.Expr]:
        outer, loops = stack_blocks(
            a.pair.arcs, b.pair.arcs, list(a.blobs), list(b.blobs), self._combine, 0
        )
        pair = PairDiagram.build(self.n, self.n, [points for points, _ in outer])
        counts = _aligned(pair, outer)
        for count, level in zip(counts, cover_levels(pair)):
            if count and level >= self.k:
                raise DecorationError(f"Blob at level {level} in {pair.disk_word()}")
        scalar = prod(contour_delta(count) for count in loops)
        return {ContourDiagram(pair, tuple(counts)): sympy.Integer(1) * scalar}

    def propagating(self, d: ContourDiagram) -> int:
        return d.pair.propagating_count

    def one_terms(self) -> Dict[ContourDiagram, sympy.Expr]:
        identity = identity_diagram(self.n)
        return {ContourDiagram(identity, (0,) * len(identity.arcs)): sympy.Integer(1)}

    def half_family(self) -> Tuple[PascalFamily, int]:
        return ContourFamily(self.d, self.k), self.n

    def encode(self, d: ContourDiagram) -> str:
        return d.encode()

    def decode(self, text: str) -> ContourDiagram:
        d = _sized(self, ContourDiagram.decode(text))
        for count, level in zip(d.blobs, cover_levels(d.pair)):
            if not 0 <= count < self.d or (count and level >= self.k):
                raise DecorationError(f"{text!r} is not a level-{self.k} diagram")
        return d


def get_algebra(name: str, n: int, **params: Any) -> DiagramAlgebra:
    """Algebra by name: tl, blob, partition, brauer, dn, contour or contour:d,k"""
    if name.startswith("contour"):
        if ":" in name:
            try:
                d, k = (int(x) for x in name.split(":", 1)[1].split(","))
            except ValueError as exc:
                raise InvalidSpecError(f"Malformed contour algebra {name!r}") from exc
            params = {"d": d, "k": k, **params}
        return ContourAlgebra(n, **params)
    algebras = {
        "tl": TemperleyLieb,
        "blob": BlobAlgebra,
        "partition": PartitionAlgebra,
        "brauer": BrauerAlgebra,
        "dn": DnAlgebra,
    }
    if name not in algebras:
        raise InvalidSpecError(f"Unknown algebra {name!r}")
    return algebras[name](n)


def dimension_identity(algebra: DiagramAlgebra) -> IdentityReport:
    """Basis size against the sum of squared half-diagram counts"""
    family, layer = algebra.half_family()
    sizes = layer_sizes(family, layer)
    basis_count = len(algebra.basis())
    total = sum(c * c for c in sizes.values())
    if basis_count != total:
        logger.warning(
            f"Dimension identity fails for {algebra.name}({algebra.n}): {basis_count} != {total}"
        )
    return IdentityReport(
        algebra=algebra.name,
        n=algebra.n,
        basis_count=basis_count,
        half_counts={format_label(v): c for v, c in sizes.items()},
        sum_of_squares=total,
        status=CheckStatus.PASSED if basis_count == total else CheckStatus.FAILED,
    )


# Standard modules and Gram matrices


def standard_action(d: PairDiagram, h: HalfDiagram) -> Optional[Tuple[sympy.Expr, HalfDiagram]]:
    """D acting on a standard-module basis element; None when lines are lost"""
    if d.n != d.m or d.m != h.n:
        raise SizeMismatchError(f"Diagram on {d.n}+{d.m} points cannot act on {h.n} points")
    lower = [arc for arc in h.arcs] + [(p, -j) for j, p in enumerate(h.propagating, start=1)]
    outer, loops = stack_blocks(d.arcs, lower)
    arcs, props = [], []
    for points, _ in outer:
        tops = sorted(p for p in points if p > 0)
        if len(tops) == 2:
            arcs.append(tuple(tops))
        elif len(tops) == 1:
            props.append(tops[0])
        else:
            return None
    if len(props) < h.l:
        return None
    return DELTA ** len(loops), HalfDiagram(d.n, tuple(sorted(arcs)), tuple(sorted(props)))


def pairing(h1: HalfDiagram, h2: HalfDiagram) -> sympy.Expr:
    """⟨h1|h2⟩: δ per closed loop, 0 when two lines of one half meet"""
    if (h1.n, h1.l) != (h2.n, h2.l):
        raise SizeMismatchError("Half-diagrams of different shapes cannot be paired")
    upper = [(-a, -b) for a, b in h1.arcs]
    upper += [(j, -p) for j, p in enumerate(h1.propagating, start=1)]
    lower = list(h2.arcs) + [(p, -j) for j, p in enumerate(h2.propagating, start=1)]
    outer, loops = stack_blocks(upper, lower)
    if any(not min(points) < 0 < max(points) for points, _ in outer):
        return sympy.Integer(0)
    return DELTA ** len(loops)


def _check_module(n: int, l: int) -> None:
    if not 0 <= l <= n or (n - l) % 2:
        raise InvalidSpecError(f"No standard module with n={n}, l={l}")


def gram(n: int, l: int) -> sympy.Matrix:
    _check_module(n, l)
    halves = half_diagrams(n, l)
    return sympy.Matrix(len(halves), len(halves), lambda i, j: pairing(halves[i], halves[j]))


def gram_det(n: int, l: int) -> sympy.Expr:
    return sympy.expand(gram(n, l).det())


def gram_rank(n: int, l: int, value: Any) -> int:
    """Rank of the Gram matrix with δ specialized to `value`"""
    return gram(n, l).subs(DELTA, sympy.sympify(value)).rank()


def tl_lemma_violations(n: int) -> List[str]:
    """Pairs D, D' with l lines each whose product is not ⟨b|c⟩·|a⟩⟨d|"""
    algebra = TemperleyLieb(n)
    violations = []
    for d1 in algebra.basis():
        a, b = tl_cut(d1)
        for d2 in algebra.basis():
            c, d = tl_cut(d2)
            if b.l != c.l:
                continue
            result = algebra.element(d1) * algebra.element(d2)
            value = pairing(b, c)
            if value != 0:
                expected = value * algebra.element(tl_join(a, d))
                if result != expected:
                    violations.append(f"{d1} · {d2} = {result}")
            elif result.max_propagating() >= b.l:
                violations.append(f"{d1} · {d2} keeps {b.l} lines")
    return violations


# Simple modules as restricted walks


def rollet_simple_graph(l: int) -> RootedGraph:
    """μ → μ+1 always; μ → μ−1 unless μ−1 ≡ l−2, doubled when μ−1 ≡ l−1 (mod l)"""
    if l < 2:
        raise InvalidSpecError("The Rollet graph needs l ≥ 2")

    def neighbours(mu: int) -> List[int]:
        down = mu - 1
        result = []
        if down >= 0 and down % l != l - 2:
            result.extend([down] * (2 if down % l == l - 1 else 1))
        result.append(mu + 1)
        return result

    return RootedGraph(
        f"rollet:{l}",
        0,
        neighbours,
        contains=lambda v: isinstance(v, int) and v >= 0,
    )


def tl_simple_constraint(lam: int, l: int) -> WalkConstraint:
    """Never touch ml−1 unless (m−1)l−1 is visited later, m minimal with λ < ml−1"""
    if l < 2 or lam < 0:
        raise InvalidSpecError("TL simple dimensions need l ≥ 2 and λ ≥ 0")
    m = 1
    while not lam < m * l - 1:
        m += 1
    return WalkConstraint(forbidden=frozenset({-1}), rules=((m * l - 1, (m - 1) * l - 1),))


def tl_simple_dim(n: int, lam: int, l: int, method: str = "auto") -> int:
    return restricted_count(a_inf_inf(), n, lam, tl_simple_constraint(lam, l), method)


def blob_simple_dim(n: int, lam: int, l0: int, method: str = "auto") -> int:
    """Walks on A∞^∞ from 0 to λ avoiding l0"""
    if l0 >= 0:
        raise InvalidSpecError("The avoided vertex must be negative")
    if lam <= l0:
        return 0
    return restricted_count(
        a_inf_inf(), n, lam, WalkConstraint(forbidden=frozenset({l0})), method
    )


def blob_simple_dim_shifted(n: int, lam: int, l0: int) -> int:
    """The same count on A∞ rooted at −l0−1"""
    if lam <= l0:
        return 0
    shift = -l0 - 1
    return layer_counts(a_inf().rerooted(shift), n).get(n, lam + shift)


def brauer_delta_one_graph() -> RootedGraph:
    """Young graph restricted to the vertices ∅ and (1)"""
    return truncate(young(), [(2,), (1, 1)])
