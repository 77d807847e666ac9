"""
Lookup of Pascal families and Catalan sequences by name
"""
from typing import Callable, Dict, List, Tuple

from pascal_arrays.core.exceptions import InvalidSpecError
from pascal_arrays.services.clusters import ClusterFamily, ClusterSequence
from pascal_arrays.services.decorated import (
    BlobFamily,
    BlobSequence,
    ColouredTreeFamily,
    ContourFamily,
    ContourSequence,
    DBlobFamily,
    DBlobSequence,
    LambdaBracketFamily,
    LambdaBracketSequence,
)
from pascal_arrays.services.partitions import (
    BellFamily,
    BellSequence,
    BrauerFamily,
    BrauerSequence,
)
from pascal_arrays.services.pascal import CatalanSequence, PascalFamily
from pascal_arrays.services.typea import (
    BracketFamily,
    BracketSequence,
    IntervalFamily,
    IntervalSequence,
    NCPFamily,
    NCPSequence,
    TLFamily,
    TLSequence,
    TreeFamily,
    TreeSequence,
)

FAMILIES: Dict[str, Callable[[], PascalFamily]] = {
    "tl": TLFamily,
    "brackets": BracketFamily,
    "trees": TreeFamily,
    "intervals": IntervalFamily,
    "ncp": NCPFamily,
    "blob": BlobFamily,
    "dblob": DBlobFamily,
    "bell": BellFamily,
    "brauer": BrauerFamily,
    "cluster": ClusterFamily,
}

SEQUENCES: Dict[str, Callable[[], CatalanSequence]] = {
    "tl": TLSequence,
    "brackets": BracketSequence,
    "trees": TreeSequence,
    "intervals": IntervalSequence,
    "ncp": NCPSequence,
    "blob": BlobSequence,
    "dblob": DBlobSequence,
    "bell": BellSequence,
    "brauer": BrauerSequence,
    "cluster": ClusterSequence,
}

TYPE_A = ("tl", "brackets", "trees", "intervals", "ncp")


def _integers(spec: str, body: str) -> Tuple[int, ...]:
    try:
        return tuple(int(x) for x in body.split(",") if x.strip())
    except ValueError as exc:
        raise InvalidSpecError(f"Malformed parameters in {spec!r}") from exc


def _split(spec: str) -> Tuple[str, str]:
    name, _, body = spec.strip().partition(":")
    return name, body


def get_family(spec: str) -> PascalFamily:
    """
    Build a family from its name

    Args:
        spec: a plain name such as "tl", or a parametrized one:
            "lambda:2,2,1", "coloured:2,1", "contour:d,k"

    Returns:
        A fresh PascalFamily instance
    """
    name, body = _split(spec)
    if name == "lambda":
        return LambdaBracketFamily(_integers(spec, body))
    if name == "coloured":
        return ColouredTreeFamily(_integers(spec, body))
    if name == "contour":
        values = _integers(spec, body)
        if len(values) != 2:
            raise InvalidSpecError(f"Contour families take d,k: {spec!r}")
        return ContourFamily(*values)
    if name not in FAMILIES or body:
        raise InvalidSpecError(f"Unknown family {spec!r}")
    return FAMILIES[name]()


def get_sequence(spec: str) -> CatalanSequence:
    """Build a Catalan sequence from its name; same grammar as get_family"""
    name, body = _split(spec)
    if name == "lambda":
        return LambdaBracketSequence(_integers(spec, body))
    if name == "contour":
        values = _integers(spec, body)
        if len(values) != 2:
            raise InvalidSpecError(f"Contour sequences take d,k: {spec!r}")
        return ContourSequence(*values)
    if name not in SEQUENCES or body:
        raise InvalidSpecError(f"Unknown sequence {spec!r}")
    return SEQUENCES[name]()


def family_names() -> List[str]:
    return sorted(FAMILIES) + ["coloured:λ", "contour:d,k", "lambda:λ"]
