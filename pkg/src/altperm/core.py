"""Colored permutations in G(r, n) = Z_r wr S_n.

Elements are stored in window notation: ``digits[j]`` is the image of
position ``j + 1`` and ``colors[j]`` the color carried by that entry.
Products act on the right, so ``pi * s(i)`` swaps window positions ``i``
and ``i + 1`` and ``pi * s(0)`` adds one color to the first entry.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator, NamedTuple, Sequence

from .errors import IndexOutOfRange, InvalidParams, ParamMismatch, ParseError


@dataclass(frozen=True)
class GroupParams:
    r: int
    n: int

    @property
    def half(self) -> int:
        return self.r // 2

    @property
    def alternating(self) -> bool:
        """True when r = 2 (mod 4), the case the alternating machinery handles."""
        return self.r % 4 == 2

    @property
    def degenerate(self) -> bool:
        # r = 2 makes a_0 = s_0^2 the identity
        return self.r == 2

    @property
    def order(self) -> int:
        return self.r ** self.n * math.factorial(self.n)

    @property
    def alternating_order(self) -> int:
        return self.order // 2

    def halved(self) -> GroupParams:
        return GroupParams(self.r // 2, self.n)

    def __str__(self) -> str:
        return f"(r={self.r}, n={self.n})"


def validate_params(r: int, n: int, require_alternating: bool = False) -> GroupParams:
    if not isinstance(r, int) or r < 1:
        raise InvalidParams(f"r must be a positive integer, got {r!r}")
    if not isinstance(n, int) or n < 1:
        raise InvalidParams(f"n must be a positive integer, got {n!r}")
    if require_alternating and r % 4 != 2:
        raise InvalidParams(f"r must be ≡ 2 mod 4, got r={r}")
    return GroupParams(r, n)


def require_alternating(params: GroupParams) -> None:
    if not params.alternating:
        raise InvalidParams(f"r must be ≡ 2 mod 4, got r={params.r}")


class ColoredValue(NamedTuple):
    digit: int
    color: int


class ColoredPermutation:
    """An element of G(r, n) in window notation.

    >>> pi = ColoredPermutation(6, [1, 2, 4, 5, 3], [0, 2, 0, 1, 3])
    >>> str(pi)
    '1 2^2 4 5^1 3^3'
    """

    __slots__ = ("r", "digits", "colors", "_hash")

    def __init__(self, r: int, digits: Sequence[int], colors: Sequence[int] | None = None):
        digits = tuple(int(d) for d in digits)
        n = len(digits)
        if colors is None:
            colors = (0,) * n
        colors = tuple(int(c) for c in colors)
        if r < 1:
            raise InvalidParams(f"r must be positive, got {r}")
        if n < 1:
            raise InvalidParams("a window needs at least one entry")
        if len(colors) != n:
            raise InvalidParams("digits and colors differ in length")
        if sorted(digits) != list(range(1, n + 1)):
            raise InvalidParams(f"digits {digits} are not a permutation of 1..{n}")
        if any(not 0 <= c < r for c in colors):
            raise InvalidParams(f"colors {colors} outside 0..{r - 1}")
        self.r = r
        self.digits = digits
        self.colors = colors
        self._hash = None

    @classmethod
    def _raw(cls, r: int, digits: tuple[int, ...], colors: tuple[int, ...]) -> ColoredPermutation:
        # trusted constructor for hot loops; inputs already valid
        obj = cls.__new__(cls)
        obj.r = r
        obj.digits = digits
        obj.colors = colors
        obj._hash = None
        return obj

    @classmethod
    def identity(cls, params: GroupParams) -> ColoredPermutation:
        return cls._raw(params.r, tuple(range(1, params.n + 1)), (0,) * params.n)

    @classmethod
    def from_z(cls, r: int, digits: Sequence[int], z: Sequence[int]) -> ColoredPermutation:
        """Build from the underlying permutation and the digit-indexed colors."""
        return cls(r, digits, [z[d - 1] for d in digits])

    @property
    def n(self) -> int:
        return len(self.digits)

    @property
    def params(self) -> GroupParams:
        return GroupParams(self.r, len(self.digits))

    @property
    def window(self) -> tuple[ColoredValue, ...]:
        return tuple(ColoredValue(d, c) for d, c in zip(self.digits, self.colors))

    @property
    def z(self) -> tuple[int, ...]:
        """Colors indexed by digit: z[i - 1] is the color of digit i."""
        out = [0] * len(self.digits)
        for d, c in zip(self.digits, self.colors):
            out[d - 1] = c
        return tuple(out)

    @property
    def c(self) -> tuple[int, ...]:
        """Colors indexed by window position."""
        return self.colors

    def underlying(self) -> tuple[int, ...]:
        return self.digits

    def is_identity(self) -> bool:
        return not any(self.colors) and all(d == j for j, d in enumerate(self.digits, 1))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ColoredPermutation):
            return NotImplemented
        return self.r == other.r and self.digits == other.digits and self.colors == other.colors

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.r, self.digits, self.colors))
        return self._hash

    def __mul__(self, other: ColoredPermutation) -> ColoredPermutation:
        return multiply(self, other)

    def __pow__(self, k: int) -> ColoredPermutation:
        return power(self, k)

    def __invert__(self) -> ColoredPermutation:
        return inverse(self)

    def __str__(self) -> str:
        return format_window(self)

    def __repr__(self) -> str:
        return f"ColoredPermutation(r={self.r}, '{format_window(self)}')"


def identity(params: GroupParams) -> ColoredPermutation:
    return ColoredPermutation.identity(params)


def multiply(left: ColoredPermutation, right: ColoredPermutation) -> ColoredPermutation:
    """Product in G(r, n): z(left*right)_i = z(left)_i + z(right)_{tau_left^-1(i)}.

    In window terms, position j of the product holds left applied to the
    colored value right(j), colors adding mod r.
    """
    if left.r != right.r or len(left.digits) != len(right.digits):
        raise ParamMismatch(f"cannot multiply {left.params} by {right.params}")
    r = left.r
    ld, lc = left.digits, left.colors
    digits = tuple(ld[d - 1] for d in right.digits)
    colors = tuple((lc[d - 1] + c) % r for d, c in zip(right.digits, right.colors))
    return ColoredPermutation._raw(r, digits, colors)


def inverse(pi: ColoredPermutation) -> ColoredPermutation:
    r, n = pi.r, len(pi.digits)
    digits = [0] * n
    colors = [0] * n
    for j, (d, c) in enumerate(zip(pi.digits, pi.colors), 1):
        digits[d - 1] = j
        colors[d - 1] = (-c) % r
    return ColoredPermutation._raw(r, tuple(digits), tuple(colors))


def power(pi: ColoredPermutation, k: int) -> ColoredPermutation:
    if k < 0:
        return power(inverse(pi), -k)
    result = identity(pi.params)
    base = pi
    while k:
        if k & 1:
            result = multiply(result, base)
        base = multiply(base, base)
        k >>= 1
    return result


def generator_s(params: GroupParams, i: int) -> ColoredPermutation:
    n, r = params.n, params.r
    if not 0 <= i <= n - 1:
        raise IndexOutOfRange(f"generator index {i} outside 0..{n - 1}")
    digits = list(range(1, n + 1))
    colors = [0] * n
    if i == 0:
        colors[0] = 1 % r
    else:
        digits[i - 1], digits[i] = digits[i], digits[i - 1]
    return ColoredPermutation._raw(r, tuple(digits), tuple(colors))


def half_twist(params: GroupParams) -> ColoredPermutation:
    """s_0^(r/2)."""
    if params.r % 2:
        raise InvalidParams(f"r must be even, got r={params.r}")
    colors = (params.r // 2,) + (0,) * (params.n - 1)
    return ColoredPermutation._raw(params.r, tuple(range(1, params.n + 1)), colors)


def conjugate_by_half_twist(pi: ColoredPermutation) -> ColoredPermutation:
    t = half_twist(pi.params)
    return multiply(multiply(t, pi), t)


# -- the length order --------------------------------------------------------

def length_order_key(digit: int, color: int) -> tuple[int, int, int]:
    """Sort key realising n^[r-1] < ... < 1^[1] < 1 < 2 < ... < n."""
    if color:
        return (0, -digit, -color)
    return (1, digit, 0)


def length_order_less(a: ColoredValue | tuple[int, int], b: ColoredValue | tuple[int, int]) -> bool:
    return length_order_key(*a) < length_order_key(*b)


def inv_colored(pi: ColoredPermutation) -> int:
    """Inversions of the window under the length order."""
    keys = [length_order_key(d, c) for d, c in zip(pi.digits, pi.colors)]
    n = len(keys)
    return sum(1 for i in range(n) for j in range(i + 1, n) if keys[i] > keys[j])


def inv_plain(tau: ColoredPermutation | Sequence[int]) -> int:
    """Ordinary inversion number of a permutation (colors ignored)."""
    digits = tau.digits if isinstance(tau, ColoredPermutation) else tuple(tau)
    n = len(digits)
    return sum(1 for i in range(n) for j in range(i + 1, n) if digits[i] > digits[j])


def csum(pi: ColoredPermutation) -> int:
    return sum(pi.colors)


def col_set(pi: ColoredPermutation) -> tuple[int, ...]:
    return tuple(sorted(d for d, c in zip(pi.digits, pi.colors) if c))


def colored_offset(pi: ColoredPermutation) -> int:
    """Sum of (i - 1) over the colored digits i."""
    return sum(d - 1 for d, c in zip(pi.digits, pi.colors) if c)


def oslash(a: int, r: int) -> int:
    """Halve a color: Z_r -> Z_{r/2}, defined for r = 2 (mod 4)."""
    if r % 4 != 2:
        raise InvalidParams(f"halving needs r ≡ 2 mod 4, got r={r}")
    if a < 0:
        raise InvalidParams(f"halving needs a nonnegative integer, got {a}")
    half = r // 2
    if a % 2 == 0:
        return (a // 2) % half
    return ((a + half) // 2) % half


# -- ranking -----------------------------------------------------------------

def _perm_rank(digits: Sequence[int]) -> int:
    n = len(digits)
    rank = 0
    for i in range(n):
        smaller = sum(1 for j in range(i + 1, n) if digits[j] < digits[i])
        rank += smaller * math.factorial(n - 1 - i)
    return rank


def _perm_unrank(n: int, k: int) -> tuple[int, ...]:
    pool = list(range(1, n + 1))
    out = []
    for i in range(n - 1, -1, -1):
        q, k = divmod(k, math.factorial(i))
        out.append(pool.pop(q))
    return tuple(out)


def rank(pi: ColoredPermutation) -> int:
    """Permutation lex rank, then the z-vector in base r with z_1 most significant."""
    r = pi.r
    code = 0
    for zi in pi.z:
        code = code * r + zi
    return _perm_rank(pi.digits) * r ** len(pi.digits) + code


def unrank(params: GroupParams, k: int) -> ColoredPermutation:
    if not 0 <= k < params.order:
        raise IndexOutOfRange(f"rank {k} outside 0..{params.order - 1}")
    r, n = params.r, params.n
    perm_k, code = divmod(k, r ** n)
    z = [0] * n
    for i in range(n - 1, -1, -1):
        code, z[i] = divmod(code, r)
    digits = _perm_unrank(n, perm_k)
    return ColoredPermutation._raw(r, digits, tuple(z[d - 1] for d in digits))


def enumerate_group(params: GroupParams) -> Iterator[ColoredPermutation]:
    """Every element of G(r, n) in ascending rank order."""
    r, n = params.r, params.n
    zs = list(product(range(r), repeat=n))
    for digits in permutations(range(1, n + 1)):
        for z in zs:
            yield ColoredPermutation._raw(r, digits, tuple(z[d - 1] for d in digits))


# -- text form ---------------------------------------------------------------

def format_window(pi: ColoredPermutation) -> str:
    return " ".join(f"{d}^{c}" if c else str(d) for d, c in zip(pi.digits, pi.colors))


def parse_window(text: str, r: int, n: int | None = None) -> ColoredPermutation:
    """Parse ``"1 2^2 4 5^1 3^3"``; a missing ``^c`` means color 0."""
    tokens = text.replace(",", " ").split()
    if not tokens:
        raise ParseError("empty window")
    if n is not None and n != len(tokens):
        raise ParseError(f"--n {n} does not match the {len(tokens)} tokens given")
    digits, colors = [], []
    for tok in tokens:
        head, sep, tail = tok.partition("^")
        try:
            digits.append(int(head))
            colors.append(int(tail) if sep else 0)
        except ValueError:
            raise ParseError(f"malformed token {tok!r}") from None
        if sep and not tail:
            raise ParseError(f"malformed token {tok!r}")
    try:
        return ColoredPermutation(r, digits, colors)
    except InvalidParams as exc:
        raise ParseError(str(exc)) from None
