"""The 2^(n-1)-to-1 covering p: A(r, n) -> G(r/2, n) and lifted statistics."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .canonical import _require_member, length_LA
from .core import (
    ColoredPermutation,
    GroupParams,
    colored_offset,
    format_window,
    inv_colored,
    inv_plain,
    multiply,
    oslash,
    require_alternating,
)
from .errors import InvalidParams
from .qseries import QPolynomial


def project(pi: ColoredPermutation) -> ColoredPermutation:
    """Halve every window color; the underlying permutation is kept."""
    _require_member(pi)
    r = pi.r
    return ColoredPermutation._raw(r // 2, pi.digits, tuple(oslash(c, r) for c in pi.colors))


def section(sigma: ColoredPermutation) -> ColoredPermutation:
    """Lift ``sigma`` in G(m, n), m odd, to its coset representative in A(2m, n).

    Colors are doubled; when |sigma| is odd, m more colors go on digit 1.
    """
    if sigma.r % 2 == 0:
        raise InvalidParams(f"section needs an odd number of colors, got {sigma.r}")
    r = 2 * sigma.r
    colors = [(2 * c) % r for c in sigma.colors]
    if inv_plain(sigma.digits) % 2:
        j = sigma.digits.index(1)
        colors[j] = (colors[j] + r // 2) % r
    return ColoredPermutation._raw(r, sigma.digits, tuple(colors))


def kernel_elements(params: GroupParams) -> list[ColoredPermutation]:
    """Identity permutation colored by {0, r/2} on an even number of digits."""
    require_alternating(params)
    n, half = params.n, params.r // 2
    digits = tuple(range(1, n + 1))
    out = []
    for size in range(0, n + 1, 2):
        for support in combinations(range(n), size):
            colors = tuple(half if j in support else 0 for j in range(n))
            out.append(ColoredPermutation._raw(params.r, digits, colors))
    return out


def fiber(pi: ColoredPermutation) -> list[ColoredPermutation]:
    """All elements with the same projection: r/2 added at an even number of positions."""
    _require_member(pi)
    r, n, half = pi.r, pi.n, pi.r // 2
    out = []
    for size in range(0, n + 1, 2):
        for support in combinations(range(n), size):
            colors = tuple((c + half) % r if j in support else c for j, c in enumerate(pi.colors))
            out.append(ColoredPermutation._raw(r, pi.digits, colors))
    return out


def fiber_via_kernel(pi: ColoredPermutation) -> list[ColoredPermutation]:
    _require_member(pi)
    return [multiply(pi, k) for k in kernel_elements(pi.params)]


def length_g(sigma: ColoredPermutation) -> int:
    """Length of sigma in G(r, n) over s_0, ..., s_{n-1}."""
    return colored_offset(sigma) + inv_colored(sigma) + sum(sigma.colors)


def lehmer_code(tau: ColoredPermutation | Sequence[int]) -> tuple[int, ...]:
    """l_i = number of digits smaller than i standing to the right of i.

    Indexed by digit: element ``i - 1`` is l_i.
    """
    digits = tau.digits if isinstance(tau, ColoredPermutation) else tuple(tau)
    out = [0] * len(digits)
    for pos, d in enumerate(digits):
        out[d - 1] = sum(1 for e in digits[pos + 1:] if e < d)
    return tuple(out)


def tinv(pi: ColoredPermutation) -> int:
    """Pairs (i, j), i > j, with z_i = r/2 and i standing left of j."""
    require_alternating(pi.params)
    half = pi.r // 2
    count = 0
    for pos, (d, c) in enumerate(zip(pi.digits, pi.colors)):
        if c == half:
            count += sum(1 for e in pi.digits[pos + 1:] if e < d)
    return count


def fibral_length(pi: ColoredPermutation) -> int:
    """2 * sum(i - 1 over digits colored r/2) - 2 * tinv."""
    _require_member(pi)
    half = pi.r // 2
    return 2 * sum(d - 1 for d, c in zip(pi.digits, pi.colors) if c == half) - 2 * tinv(pi)


def fibral_length_definitional(pi: ColoredPermutation) -> int:
    return length_LA(pi) - length_LA(section(project(pi)))


def fiber_genfun(pi: ColoredPermutation) -> QPolynomial:
    """prod_{i=2}^{n} (1 + q^{2 delta_i (i - 1 - l_i)}), delta_i = [z_i in {0, r/2}]."""
    _require_member(pi)
    half = pi.r // 2
    z = pi.z
    code = lehmer_code(pi.digits)
    result = QPolynomial.one()
    for i in range(2, pi.n + 1):
        delta = 1 if z[i - 1] in (0, half) else 0
        result = result * (QPolynomial.one() + QPolynomial.monomial(2 * delta * (i - 1 - code[i - 1])))
    return result


def fiber_genfun_bruteforce(pi: ColoredPermutation) -> QPolynomial:
    return QPolynomial.from_exponents(fibral_length(s) for s in fiber(pi))


@dataclass
class FiberReport:
    base: ColoredPermutation
    members: list[tuple[ColoredPermutation, int]]
    formula_poly: QPolynomial
    bruteforce_poly: QPolynomial
    definitional_lengths: list[int] = field(default_factory=list)

    @property
    def formula_matches(self) -> bool:
        return self.formula_poly == self.bruteforce_poly

    def to_dict(self) -> dict:
        return {
            "base": format_window(self.base),
            "members": [
                {"element": format_window(m), "fibral_length": ell} for m, ell in self.members
            ],
            "formula_poly": list(self.formula_poly.coefficients),
            "bruteforce_poly": list(self.bruteforce_poly.coefficients),
            "formula_matches": self.formula_matches,
        }


def fiber_report(pi: ColoredPermutation) -> FiberReport:
    members = fiber(pi)
    return FiberReport(
        base=project(pi),
        members=[(m, fibral_length(m)) for m in members],
        formula_poly=fiber_genfun(pi),
        bruteforce_poly=fiber_genfun_bruteforce(pi),
        definitional_lengths=[fibral_length_definitional(m) for m in members],
    )


# -- lifted statistics --------------------------------------------------------

def finv_g(sigma: ColoredPermutation) -> int:
    """Flag-inversion number r * inv(|sigma|) + csum(sigma)."""
    return sigma.r * inv_plain(sigma.digits) + sum(sigma.colors)


def finv_a(pi: ColoredPermutation) -> int:
    _require_member(pi)
    r = pi.r
    return (r // 2) * inv_plain(pi.digits) + sum(oslash(c, r) for c in pi.colors)


def _rtl_minima_positions(digits: Sequence[int]) -> list[int]:
    out = []
    smallest = len(digits) + 1
    for pos in range(len(digits) - 1, -1, -1):
        if digits[pos] < smallest:
            out.append(pos)
            smallest = digits[pos]
    return out


def rtlmin_g(sigma: ColoredPermutation) -> int:
    """Right-to-left minima (natural digit order) carrying a nonzero color."""
    return sum(1 for pos in _rtl_minima_positions(sigma.digits) if sigma.colors[pos] != 0)


def rtlmin_a(pi: ColoredPermutation) -> int:
    """Right-to-left minima whose color is neither 0 nor r/2."""
    _require_member(pi)
    half = pi.r // 2
    return sum(1 for pos in _rtl_minima_positions(pi.digits) if pi.colors[pos] not in (0, half))


__all__ = [
    "FiberReport",
    "fiber",
    "fiber_genfun",
    "fiber_genfun_bruteforce",
    "fiber_report",
    "fiber_via_kernel",
    "fibral_length",
    "fibral_length_definitional",
    "finv_a",
    "finv_g",
    "kernel_elements",
    "lehmer_code",
    "length_g",
    "project",
    "rtlmin_a",
    "rtlmin_g",
    "section",
    "tinv",
]
