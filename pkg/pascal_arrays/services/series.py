"""
Generating functions for closed-walk counts as exact truncated power series
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, List, Sequence, Tuple, Union

from pascal_arrays.core.exceptions import InconsistentCountError, InvalidSpecError
from pascal_arrays.services.graphs import RootedGraph, catalan_numbers, validate_lambda

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]


@dataclass(frozen=True)
class Series:
    """Coefficients c_0..c_m of a power series truncated after x^m"""

    coefficients: Tuple[Fraction, ...]

    @classmethod
    def of(cls, values: Iterable[Scalar]) -> "Series":
        coefficients = tuple(Fraction(v) for v in values)
        if not coefficients:
            raise InvalidSpecError("A series needs at least its constant term")
        return cls(coefficients)

    @classmethod
    def one(cls, m: int) -> "Series":
        return cls.of([1] + [0] * m)

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coefficients[k]

    def truncate(self, m: int) -> "Series":
        return Series(self.coefficients[: m + 1])

    def __add__(self, other: "Series") -> "Series":
        m = min(self.order, other.order)
        return Series.of(self[k] + other[k] for k in range(m + 1))

    def __sub__(self, other: "Series") -> "Series":
        m = min(self.order, other.order)
        return Series.of(self[k] - other[k] for k in range(m + 1))

    def __mul__(self, other: Union["Series", Scalar]) -> "Series":
        if not isinstance(other, Series):
            return Series.of(c * other for c in self.coefficients)
        m = min(self.order, other.order)
        return Series.of(
            sum((self[i] * other[k - i] for i in range(k + 1)), Fraction(0))
            for k in range(m + 1)
        )

    __rmul__ = __mul__

    def shift(self) -> "Series":
        """x · self, keeping the truncation order"""
        return Series.of((Fraction(0),) + self.coefficients[:-1])

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coefficients)

    def integers(self) -> List[int]:
        """Coefficients as ints; every one must be integral"""
        result = []
        for k, c in enumerate(self.coefficients):
            if c.denominator != 1:
                raise InconsistentCountError(
                    f"Coefficient {k} is {c}, not an integer", errors=[{"index": k}]
                )
            result.append(c.numerator)
        return result


def _check_order(m: int) -> None:
    if m < 0:
        raise InvalidSpecError("Truncation order must be nonnegative")


def quadratic_series(a: Scalar, m: int) -> Series:
    """The root of H = 1 + a·x·H² with H(0) = 1"""
    _check_order(m)
    h = [Fraction(1)]
    for k in range(1, m + 1):
        h.append(a * sum((h[i] * h[k - 1 - i] for i in range(k)), Fraction(0)))
    return Series.of(h)


def series_h0(m: int) -> Series:
    """H₀ = 1 + x·H₀², the Catalan numbers"""
    return quadratic_series(1, m)


def series_hlambda(lam: Sequence[int], m: int) -> Series:
    """H^λ = 1 + λ₁·x·H^{λ′}·H^λ; the last entry of λ repeats, ∅ gives H₀"""
    _check_order(m)
    values = validate_lambda(lam) if len(tuple(lam)) else ()
    if not values:
        return series_h0(m)
    if len(values) == 1:
        return quadratic_series(values[0], m)
    tail = series_hlambda(values[1:], m)
    h = [Fraction(1)]
    for k in range(1, m + 1):
        h.append(values[0] * sum((tail[i] * h[k - 1 - i] for i in range(k)), Fraction(0)))
    return Series.of(h)


def series_sqrt(s: Series) -> Series:
    """Square root of a series with constant term 1"""
    if s[0] != 1:
        raise InvalidSpecError("Only series with constant term 1 have a rational square root")
    f = [Fraction(1)]
    for k in range(1, s.order + 1):
        f.append((s[k] - sum((f[i] * f[k - i] for i in range(1, k)), Fraction(0))) / 2)
    return Series.of(f)


def series_exp(g: Series) -> Series:
    """exp(g) for g(0) = 0, from f' = g'·f"""
    if g[0] != 0:
        raise InvalidSpecError("exp needs a series without constant term")
    f = [Fraction(1)]
    for k in range(g.order):
        f.append(
            sum(((i + 1) * g[i + 1] * f[k - i] for i in range(k + 1)), Fraction(0)) / (k + 1)
        )
    return Series.of(f)


def bell_numbers(m: int) -> List[int]:
    """b(0..m) by b(k+1) = Σ_i C(k, i)·b(i)"""
    _check_order(m)
    b = [1]
    for k in range(m):
        b.append(sum(comb(k, i) * b[i] for i in range(k + 1)))
    return b


def series_bell_egf(m: int) -> List[int]:
    """Bell numbers, cross-checked against k!·[x^k] exp(exp(x) − 1)"""
    recurrence = bell_numbers(m)
    inner = Series.of([0] + [Fraction(1, factorial(k)) for k in range(1, m + 1)])
    egf = series_exp(inner)
    extracted = (Series.of(egf[k] * factorial(k) for k in range(m + 1))).integers()
    if extracted != recurrence:
        raise InconsistentCountError(
            "Bell recurrence and exponential generating function disagree",
            errors=[{"recurrence": recurrence, "egf": extracted}],
        )
    return recurrence


def series_matches_walks(g: RootedGraph, s: Series, m: int) -> bool:
    """Whether s agrees with the closed-walk counts N(2n; root) for n ≤ m"""
    if s.order < m:
        raise InvalidSpecError(f"Series known to order {s.order}, asked for {m}")
    walks = catalan_numbers(g, m)
    matches = s.truncate(m).coefficients == tuple(Fraction(c) for c in walks)
    if not matches:
        logger.warning(f"Series {s.truncate(m).coefficients} does not match walks {walks} on {g.name}")
    return matches


def bfile(values: Sequence[int], offset: int = 0) -> str:
    """`n<TAB>a(n)` lines"""
    return "\n".join(f"{n}\t{a}" for n, a in enumerate(values, start=offset))
