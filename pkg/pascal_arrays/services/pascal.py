"""
Pascal array framework: layered families with per-edge injections
"""
import logging
from abc import ABC, abstractmethod
from collections import defaultdict
from dataclasses import dataclass
from typing import Any, DefaultDict, Dict, Iterable, List, Optional, Tuple

from pascal_arrays.core.exceptions import (
    CorruptFamilyError,
    IncompatibleFamiliesError,
    InvalidSpecError,
    PascalArrayError,
)
from pascal_arrays.schemas.element import ElementSchema
from pascal_arrays.schemas.report import (
    CatalanReport,
    CellReport,
    CheckName,
    CheckStatus,
    Failure,
    VerificationReport,
)
from pascal_arrays.services.graphs import (
    RootedGraph,
    Walk,
    enumerate_walks,
    format_label,
    label_key,
    layer_counts,
    opposite,
    parse_label,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Element:
    """A member of Y(n; vertex) of some family"""

    family: str
    n: int
    vertex: Any
    payload: Any


class PascalFamily(ABC):
    """A layered family of finite sets indexed by walks on a rooted graph"""

    name: str = "family"
    cap: int = 8

    def __init__(self, graph: RootedGraph):
        self.graph = graph
        self._preimages: Dict[int, Dict[Any, List[Tuple[Element, int]]]] = {}

    @abstractmethod
    def origin(self) -> Any:
        """Payload of the single layer-0 element"""

    @abstractmethod
    def edge_map(self, x: Element, key: int, target: Any) -> Any:
        """Payload of the image of x under edge `key` of its vertex"""

    @abstractmethod
    def classify(self, payload: Any) -> Tuple[int, Any]:
        """Layer and vertex of a payload"""

    @abstractmethod
    def universe(self, n: int) -> Iterable[Any]:
        """All layer-n payloads, enumerated without edge maps"""

    def encode(self, payload: Any) -> str:
        return str(payload)

    def decode(self, text: str) -> Any:
        return text

    def render(self, payload: Any) -> str:
        return self.encode(payload)

    def element(self, payload: Any) -> Element:
        n, vertex = self.classify(payload)
        return Element(self.name, n, vertex, payload)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name!r} on {self.graph.name!r})"


def apply_edge(f: PascalFamily, x: Element, key: int) -> Element:
    """Image of x under the edge map of edge `key` out of x.vertex"""
    target = f.graph.step(x.vertex, key)
    return Element(f.name, x.n + 1, target, f.edge_map(x, key, target))


def origin_element(f: PascalFamily) -> Element:
    return Element(f.name, 0, f.graph.root, f.origin())


def element_of(f: PascalFamily, walk: Walk) -> Element:
    """Apply edge maps along a walk starting from the layer-0 element"""
    if walk.graph != f.graph.name:
        raise IncompatibleFamiliesError(
            f"Walk on {walk.graph} cannot index family {f.name} on {f.graph.name}"
        )
    x = origin_element(f)
    for key in walk.steps:
        x = apply_edge(f, x, key)
    return x


def layer(f: PascalFamily, n: int, vertex: Optional[Any] = None) -> List[Element]:
    """Layer n (optionally one vertex) in lexicographic walk order"""
    return [element_of(f, walk) for walk in enumerate_walks(f.graph, n, vertex)]


def layer_sizes(f: PascalFamily, n: int) -> Dict[Any, int]:
    """Cell sizes of layer n from the family's own enumeration"""
    sizes: DefaultDict[Any, int] = defaultdict(int)
    for payload in f.universe(n):
        sizes[f.classify(payload)[1]] += 1
    return {v: sizes[v] for v in sorted(sizes, key=label_key)}


def _preimage_index(f: PascalFamily, n: int) -> Dict[Any, List[Tuple[Element, int]]]:
    index = f._preimages.get(n)
    if index is None:
        index = defaultdict(list)
        for payload in f.universe(n - 1):
            x = f.element(payload)
            for key, _ in f.graph.out(x.vertex):
                index[apply_edge(f, x, key).payload].append((x, key))
        index = dict(index)
        f._preimages[n] = index
        logger.debug(f"Built preimage index for {f.name} layer {n}")
    return index


def walk_of(f: PascalFamily, x: Element) -> Walk:
    """Locate the unique edge-map preimage of x layer by layer"""
    steps: List[int] = []
    current = x
    while current.n > 0:
        sources = _preimage_index(f, current.n).get(current.payload, [])
        if len(sources) != 1:
            raise CorruptFamilyError(
                f"{f.name} element has {len(sources)} preimages",
                errors=[{"n": current.n, "payload": f.encode(current.payload)}],
            )
        current, key = sources[0]
        steps.append(key)
    if current.payload != f.origin():
        raise CorruptFamilyError(f"{f.name} element does not descend from the origin")
    return Walk(f.graph.name, tuple(reversed(steps)), x.vertex)


def transport(f1: PascalFamily, f2: PascalFamily, x: Element) -> Element:
    """Carry x across families indexed by the same graph"""
    if f1.graph.name != f2.graph.name:
        raise IncompatibleFamiliesError(
            f"{f1.name} lives on {f1.graph.name}, {f2.name} on {f2.graph.name}"
        )
    return element_of(f2, walk_of(f1, x))


def verify_family(f: PascalFamily, n_max: int) -> VerificationReport:
    """Check injectivity, disjointness and exact cover cell by cell"""
    if n_max < 0:
        raise InvalidSpecError("n_max must be nonnegative")
    table = layer_counts(f.graph, n_max)
    report = VerificationReport(family=f.name, graph=f.graph.name, n_max=n_max)

    previous = [f.element(p) for p in f.universe(0)]
    cell = CellReport(
        n=0, vertex=format_label(f.graph.root), size=len(previous), expected=1
    )
    if [x.payload for x in previous] != [f.origin()]:
        cell.failures.append(
            Failure(
                check=CheckName.CARDINALITY,
                detail="layer 0 must be exactly the origin",
                witness=", ".join(f.encode(x.payload) for x in previous),
            )
        )
    if any((x.n, x.vertex) != (0, f.graph.root) for x in previous):
        cell.failures.append(
            Failure(check=CheckName.CLASSIFIER, detail="origin misclassified")
        )
    report.cells.append(cell)

    for n in range(1, n_max + 1):
        members: DefaultDict[Any, List[Any]] = defaultdict(list)
        for payload in f.universe(n):
            x = f.element(payload)
            members[x.vertex].append(payload)

        images: DefaultDict[Any, DefaultDict[Any, List[Tuple[Any, int, Any]]]] = (
            defaultdict(lambda: defaultdict(list))
        )
        classifier_failures: DefaultDict[Any, List[Failure]] = defaultdict(list)
        for x in previous:
            for key, target in f.graph.out(x.vertex):
                y = apply_edge(f, x, key)
                images[target][y.payload].append((x.vertex, key, x.payload))
                if f.classify(y.payload) != (n, target):
                    classifier_failures[target].append(
                        Failure(
                            check=CheckName.CLASSIFIER,
                            detail=f"image classified as {f.classify(y.payload)}",
                            witness=f.encode(y.payload),
                        )
                    )

        vertices = set(table.layer(n)) | set(members) | set(images)
        for v in sorted(vertices, key=label_key):
            cell_members = members.get(v, [])
            cell_images = images.get(v, {})
            cell = CellReport(
                n=n,
                vertex=format_label(v),
                size=len(cell_members),
                expected=table.get(n, v),
            )
            cell.failures.extend(classifier_failures.get(v, []))
            for payload, sources in cell_images.items():
                edges = {(source_vertex, key) for source_vertex, key, _ in sources}
                if len(edges) < len(sources):
                    cell.failures.append(
                        Failure(
                            check=CheckName.INJECTIVITY,
                            detail="one edge map sends two elements to one image",
                            witness=f.encode(payload),
                        )
                    )
                if len(edges) > 1:
                    cell.failures.append(
                        Failure(
                            check=CheckName.DISJOINTNESS,
                            detail="images of distinct edges overlap",
                            witness=f.encode(payload),
                        )
                    )
            member_set = set(cell_members)
            for payload in cell_members:
                if payload not in cell_images:
                    cell.failures.append(
                        Failure(
                            check=CheckName.EXACT_COVER,
                            detail="member is not the image of any edge map",
                            witness=f.encode(payload),
                        )
                    )
            for payload in cell_images:
                if payload not in member_set:
                    cell.failures.append(
                        Failure(
                            check=CheckName.EXACT_COVER,
                            detail="edge map image is not a member of the layer",
                            witness=f.encode(payload),
                        )
                    )
            if cell.size != cell.expected:
                cell.failures.append(
                    Failure(
                        check=CheckName.CARDINALITY,
                        detail=f"{cell.size} members against {cell.expected} walks",
                    )
                )
            report.cells.append(cell)
        previous = [f.element(p) for cell_payloads in members.values() for p in cell_payloads]

    if any(not cell.ok for cell in report.cells):
        report.status = CheckStatus.FAILED
        logger.warning(
            f"Family {f.name} failed verification",
            extra={"failures": len(report.failures)},
        )
    return report


def element_to_schema(f: PascalFamily, x: Element) -> ElementSchema:
    return ElementSchema(
        family=f.name, n=x.n, vertex=format_label(x.vertex), payload=f.encode(x.payload)
    )


def element_from_schema(f: PascalFamily, data: ElementSchema) -> Element:
    """Decode an element and check its stated cell"""
    if data.family != f.name:
        raise IncompatibleFamiliesError(f"Element of {data.family} given to {f.name}")
    x = f.element(f.decode(data.payload))
    if (x.n, x.vertex) != (data.n, parse_label(data.vertex)):
        raise InvalidSpecError(
            f"Payload {data.payload!r} lies over ({x.n}, {format_label(x.vertex)})"
        )
    return x


class CatalanSequence(ABC):
    """Members of size 2n paired with (bra, ket) elements over a common vertex"""

    name: str = "sequence"
    cap: int = 6

    def __init__(self, bra: PascalFamily, ket: PascalFamily):
        self.bra = bra
        self.ket = ket

    @abstractmethod
    def members(self, n: int) -> Iterable[Any]:
        """All members of index n"""

    @abstractmethod
    def decompose(self, n: int, x: Any) -> Tuple[Element, Element]:
        """Bra-ket pair of a member"""

    @abstractmethod
    def compose(self, n: int, bra: Element, ket: Element) -> Any:
        """Member with the given bra-ket pair"""

    def encode(self, x: Any) -> str:
        return str(x)

    def decode(self, text: str) -> Any:
        return text


def catalan_decompose(cs: CatalanSequence, n: int, x: Any) -> Tuple[Element, Element]:
    bra, ket = cs.decompose(n, x)
    if bra.vertex != ket.vertex or bra.n != n or ket.n != n:
        raise CorruptFamilyError(
            f"{cs.name} split a member over different cells",
            errors=[{"bra": format_label(bra.vertex), "ket": format_label(ket.vertex)}],
        )
    return bra, ket


def catalan_compose(cs: CatalanSequence, n: int, bra: Element, ket: Element) -> Any:
    if bra.vertex != ket.vertex:
        raise IncompatibleFamiliesError("Bra and ket lie over different vertices")
    return cs.compose(n, bra, ket)


def verify_catalan(cs: CatalanSequence, n_max: int) -> CatalanReport:
    """Round trip every member and compare counts with walk counts"""
    bra_table = layer_counts(cs.bra.graph, n_max)
    ket_table = layer_counts(opposite(cs.ket.graph), n_max)
    report = CatalanReport(sequence=cs.name, graph=cs.bra.graph.name, n_max=n_max)
    for n in range(n_max + 1):
        count = 0
        seen = set()
        for x in cs.members(n):
            count += 1
            try:
                bra, ket = catalan_decompose(cs, n, x)
            except PascalArrayError as exc:
                report.failures.append(
                    Failure(
                        check=CheckName.DECOMPOSE,
                        detail=f"{exc.error_code}: {exc.detail}",
                        witness=cs.encode(x),
                    )
                )
                continue
            if (bra.payload, ket.payload) in seen:
                report.failures.append(
                    Failure(
                        check=CheckName.INJECTIVITY,
                        detail=f"two members of index {n} share a bra-ket pair",
                        witness=cs.encode(x),
                    )
                )
            seen.add((bra.payload, ket.payload))
            if cs.bra.classify(bra.payload) != (n, bra.vertex) or cs.ket.classify(
                ket.payload
            ) != (n, ket.vertex):
                report.failures.append(
                    Failure(
                        check=CheckName.CLASSIFIER,
                        detail="half lies outside its stated cell",
                        witness=cs.encode(x),
                    )
                )
            try:
                back = catalan_compose(cs, n, bra, ket)
            except PascalArrayError as exc:
                back, detail = None, f"compose failed with {exc.error_code}: {exc.detail}"
            else:
                detail = "compose does not invert decompose"
            if back != x:
                report.failures.append(
                    Failure(
                        check=CheckName.ROUND_TRIP,
                        detail=detail,
                        witness=cs.encode(x),
                    )
                )
        expected = sum(
            c * ket_table.get(n, v) for v, c in bra_table.layer(n).items()
        )
        report.member_counts.append(count)
        report.expected_counts.append(expected)
        if count != expected:
            report.failures.append(
                Failure(
                    check=CheckName.CARDINALITY,
                    detail=f"{count} members of index {n} against {expected}",
                )
            )
    if report.failures:
        report.status = CheckStatus.FAILED
        logger.warning(f"Catalan sequence {cs.name} failed verification")
    return report
