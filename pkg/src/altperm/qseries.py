"""Exact integer polynomials in q and the closed-form generating functions."""
from __future__ import annotations

from collections import Counter
from itertools import zip_longest
from typing import Callable, Iterable

from .core import ColoredPermutation, GroupParams, require_alternating
from .errors import InvalidParams, NonIntegralHalving


class QPolynomial:
    """Polynomial with Python-int coefficients, ascending degree, trailing zeros trimmed."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients: Iterable[int] = ()):
        coeffs = [int(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coefficients: tuple[int, ...] = tuple(coeffs)

    @classmethod
    def zero(cls) -> QPolynomial:
        return cls()

    @classmethod
    def one(cls) -> QPolynomial:
        return cls((1,))

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> QPolynomial:
        if degree < 0:
            raise ValueError("negative degree")
        return cls([0] * degree + [coefficient])

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> QPolynomial:
        """sum of q^e over the given exponents."""
        counts = Counter(exponents)
        if not counts:
            return cls()
        coeffs = [0] * (max(counts) + 1)
        for e, k in counts.items():
            coeffs[e] += k
        return cls(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = QPolynomial((other,))
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self) -> int:
        return hash(self.coefficients)

    def __add__(self, other: QPolynomial | int) -> QPolynomial:
        if isinstance(other, int):
            other = QPolynomial((other,))
        return QPolynomial(a + b for a, b in zip_longest(self.coefficients, other.coefficients, fillvalue=0))

    __radd__ = __add__

    def __neg__(self) -> QPolynomial:
        return QPolynomial(-c for c in self.coefficients)

    def __sub__(self, other: QPolynomial | int) -> QPolynomial:
        if isinstance(other, int):
            other = QPolynomial((other,))
        return self + (-other)

    def __mul__(self, other: QPolynomial | int) -> QPolynomial:
        if isinstance(other, int):
            return self.scale(other)
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return QPolynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return QPolynomial(out)

    __rmul__ = __mul__

    def scale(self, k: int) -> QPolynomial:
        return QPolynomial(k * c for c in self.coefficients)

    def halve(self) -> QPolynomial:
        """Exact division by 2; raises if any coefficient is odd."""
        if any(c % 2 for c in self.coefficients):
            raise NonIntegralHalving(f"cannot halve {self}: odd coefficient present")
        return QPolynomial(c // 2 for c in self.coefficients)

    def evaluate_at(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def first_difference(self, other: QPolynomial) -> int | None:
        """Lowest degree at which the two coefficient arrays differ."""
        for d, (a, b) in enumerate(zip_longest(self.coefficients, other.coefficients, fillvalue=0)):
            if a != b:
                return d
        return None

    def __str__(self) -> str:
        terms = []
        for d, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if d == 0:
                body = str(c)
            else:
                var = "q" if d == 1 else f"q^{d}"
                body = var if c == 1 else f"-{var}" if c == -1 else f"{c}{var}"
            terms.append(body)
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    def __repr__(self) -> str:
        return f"QPolynomial({list(self.coefficients)})"


def q_int(m: int) -> QPolynomial:
    """[m]_q = 1 + q + ... + q^{m-1}."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    return QPolynomial([1] * m)


def q_factorial(n: int) -> QPolynomial:
    if n < 0:
        raise ValueError("n must be nonnegative")
    result = QPolynomial.one()
    for k in range(1, n + 1):
        result = result * q_int(k)
    return result


def add(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    return a + b


def mul(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    return a * b


def scale(a: QPolynomial, k: int) -> QPolynomial:
    return a.scale(k)


def evaluate_at(a: QPolynomial, x: int) -> int:
    return a.evaluate_at(x)


# -- closed forms -------------------------------------------------------------

def genfun_length_unhalved(params: GroupParams) -> QPolynomial:
    """[n]!_q prod_j (1 + q^{j-1}(1 + 2q + ... + 2q^{r/2-1})), before the factor 1/2."""
    require_alternating(params)
    half = params.r // 2
    inner = QPolynomial([1] + [2] * (half - 1))
    result = q_factorial(params.n)
    for j in range(1, params.n + 1):
        result = result * (QPolynomial.one() + QPolynomial.monomial(j - 1) * inner)
    return result


def genfun_length_formula(params: GroupParams) -> QPolynomial:
    return genfun_length_unhalved(params).halve()


def genfun_finv_formula(params: GroupParams) -> QPolynomial:
    """2^{n-1} prod_i [(r/2) i]_q."""
    require_alternating(params)
    result = QPolynomial.one().scale(2 ** (params.n - 1))
    for i in range(1, params.n + 1):
        result = result * q_int(params.r // 2 * i)
    return result


def genfun_rtlmin_formula(params: GroupParams) -> QPolynomial:
    """2^{n-1} prod_i ((r/2)(q + i - 1) + 1 - q)."""
    require_alternating(params)
    half = params.r // 2
    result = QPolynomial.one().scale(2 ** (params.n - 1))
    for i in range(1, params.n + 1):
        # (r/2)(q + i - 1) + 1 - q = (half (i - 1) + 1) + (half - 1) q
        result = result * QPolynomial([half * (i - 1) + 1, half - 1])
    return result


def _statistics() -> dict[str, Callable[[ColoredPermutation], int]]:
    from .canonical import length_LA
    from .covering import fibral_length, finv_a, rtlmin_a

    return {"length": length_LA, "finv": finv_a, "rtlmin": rtlmin_a, "fibral": fibral_length}


STATISTICS = ("length", "finv", "rtlmin", "fibral")


def genfun_bruteforce(params: GroupParams, statistic: str) -> QPolynomial:
    """sum over A(r, n) of q^{stat(pi)} by full enumeration."""
    from .canonical import enumerate_alternating

    require_alternating(params)
    stats = _statistics()
    if statistic not in stats:
        raise InvalidParams(f"unknown statistic {statistic!r}; choose from {', '.join(STATISTICS)}")
    f = stats[statistic]
    return QPolynomial.from_exponents(f(pi) for pi in enumerate_alternating(params))


def genfun_formula(params: GroupParams, statistic: str) -> QPolynomial:
    """Closed form for ``statistic``; the fibral one sums the per-coset products."""
    formulas = {
        "length": genfun_length_formula,
        "finv": genfun_finv_formula,
        "rtlmin": genfun_rtlmin_formula,
        "fibral": _fibral_coset_sum,
    }
    if statistic not in formulas:
        raise InvalidParams(f"unknown statistic {statistic!r}; choose from {', '.join(STATISTICS)}")
    return formulas[statistic](params)


def _fibral_coset_sum(params: GroupParams) -> QPolynomial:
    from .core import enumerate_group
    from .covering import fiber_genfun, section

    require_alternating(params)
    total = QPolynomial.zero()
    for sigma in enumerate_group(params.halved()):
        total = total + fiber_genfun(section(sigma))
    return total
