"""Canonical words for the alternating subgroup A(r, n), r = 2 (mod 4).

Every element is first written over s_0, ..., s_{n-1} by a coloring pass
followed by an ordering pass, then the word is cut into consecutive pairs
and each pair is rewritten over the generators a_0, a_1, a_1^{-1},
a_2, ..., a_{n-1} (a_0 = s_0^2, a_i = s_0^{r/2} s_i).

Letters of an :class:`AWord` are integers: ``0`` is a_0, ``1`` is a_1,
``-1`` is a_1^{-1} and ``i >= 2`` is a_i.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .core import (
    ColoredPermutation,
    GroupParams,
    colored_offset,
    csum,
    enumerate_group,
    generator_s,
    identity,
    inv_colored,
    inv_plain,
    length_order_key,
    multiply,
    oslash,
    require_alternating,
)
from .errors import IndexOutOfRange, InvalidParams, NotAlternating, OddLength, ParseError

A0, A1, A1INV = 0, 1, -1


def _runs(letters: Sequence[int]) -> Iterator[tuple[int, int]]:
    i = 0
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        yield letters[i], j - i
        i = j


_TOKEN = re.compile(r"^([as])(\d+)('|\^-1)?(?:\^(\d+))?$")


def _parse_letters(text: str, kind: str) -> list[int]:
    out: list[int] = []
    for tok in text.replace("·", " ").split():
        m = _TOKEN.match(tok)
        if not m or m.group(1) != kind:
            raise ParseError(f"malformed {kind}-letter {tok!r}")
        index = int(m.group(2))
        inv = m.group(3) is not None
        count = int(m.group(4)) if m.group(4) else 1
        if inv and (kind != "a" or index != 1):
            raise ParseError(f"only a1 has an inverse letter, got {tok!r}")
        out.extend([-1 if inv else index] * count)
    return out


class SWord(tuple):
    """A word over s_0, ..., s_{n-1}, one integer per letter."""

    def __new__(cls, letters: Iterable[int] = ()):
        return super().__new__(cls, letters)

    @classmethod
    def parse(cls, text: str) -> SWord:
        return cls(_parse_letters(text, "s"))

    def __str__(self) -> str:
        return " ".join(f"s{x}^{k}" if k > 1 else f"s{x}" for x, k in _runs(self))

    def __repr__(self) -> str:
        return f"SWord('{self}')"


class AWord(tuple):
    """A word over the alternating generators; a_0^m is stored as m letters."""

    def __new__(cls, letters: Iterable[int] = ()):
        return super().__new__(cls, letters)

    @classmethod
    def parse(cls, text: str) -> AWord:
        return cls(_parse_letters(text, "a"))

    def inverse(self) -> AWord:
        """Formal inverse; valid because a_i (i >= 2) are involutions.

        a_0 has no inverse letter, so only a_0-free words can be inverted.
        """
        if A0 in self:
            raise ValueError("a_0 has no inverse letter in the generating set")
        return AWord(-x if abs(x) == 1 else x for x in reversed(self))

    def __add__(self, other) -> AWord:
        return AWord(tuple(self) + tuple(other))

    def __str__(self) -> str:
        parts = []
        for x, k in _runs(self):
            name = "a1'" if x == A1INV else f"a{x}"
            parts.append(f"{name}^{k}" if k > 1 else name)
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"AWord('{self}')"


# -- generators and evaluation ----------------------------------------------

@lru_cache(maxsize=None)
def _gen_s(params: GroupParams, i: int) -> ColoredPermutation:
    return generator_s(params, i)


@lru_cache(maxsize=None)
def _gen_a(params: GroupParams, letter: int) -> ColoredPermutation:
    r, n = params.r, params.n
    twist = ColoredPermutation._raw(r, tuple(range(1, n + 1)), (r // 2,) + (0,) * (n - 1))
    if letter == A0:
        return ColoredPermutation._raw(r, tuple(range(1, n + 1)), (2 % r,) + (0,) * (n - 1))
    if letter == A1INV:
        return multiply(_gen_s(params, 1), twist)
    return multiply(twist, _gen_s(params, letter))


def generator_a(params: GroupParams, letter: int) -> ColoredPermutation:
    """a_0 = s_0^2, a_i = s_0^{r/2} s_i, and a_1^{-1} = s_1 s_0^{r/2}."""
    require_alternating(params)
    if letter not in (A0, A1INV) and not 1 <= letter <= params.n - 1:
        raise IndexOutOfRange(f"a-letter {letter} invalid for n={params.n}")
    if letter == A1INV and params.n < 2:
        raise IndexOutOfRange("a_1 needs n >= 2")
    return _gen_a(params, letter)


def eval_s_word(params: GroupParams, word: Iterable[int]) -> ColoredPermutation:
    result = identity(params)
    for x in word:
        if not 0 <= x <= params.n - 1:
            raise IndexOutOfRange(f"s-letter {x} invalid for n={params.n}")
        result = multiply(result, _gen_s(params, x))
    return result


def eval_a_word(params: GroupParams, word: Iterable[int]) -> ColoredPermutation:
    result = identity(params)
    for x in word:
        result = multiply(result, generator_a(params, x))
    return result


# -- membership and the S-word ------------------------------------------------

def is_alternating(pi: ColoredPermutation) -> bool:
    """Membership in A(r, n): csum + inv(|pi|) is even."""
    if pi.r % 2:
        raise InvalidParams(f"A(r, n) needs even r, got r={pi.r}")
    return (csum(pi) + inv_plain(pi.digits)) % 2 == 0


def _require_member(pi: ColoredPermutation) -> None:
    require_alternating(pi.params)
    if not is_alternating(pi):
        raise NotAlternating(f"{pi} is not in A{pi.params}")


def enumerate_alternating(params: GroupParams) -> Iterator[ColoredPermutation]:
    require_alternating(params)
    for pi in enumerate_group(params):
        if (sum(pi.colors) + inv_plain(pi.digits)) % 2 == 0:
            yield pi


def ordered_target(pi: ColoredPermutation) -> ColoredPermutation:
    """The same colored values sorted ascending in the length order."""
    pairs = sorted(zip(pi.digits, pi.colors), key=lambda v: length_order_key(*v))
    return ColoredPermutation._raw(pi.r, tuple(d for d, _ in pairs), tuple(c for _, c in pairs))


@dataclass(frozen=True)
class Push:
    """One ordering step: the digit at position ``start`` moves to ``target``."""

    target: int
    start: int
    letters: SWord


def _coloring_factors(pi: ColoredPermutation) -> list[tuple[int, int, SWord]]:
    """(digit, color, s_{i-1} ... s_1 s_0^z) for each colored digit, ascending."""
    z = pi.z
    out = []
    for i in range(1, pi.n + 1):
        if z[i - 1]:
            out.append((i, z[i - 1], SWord(list(range(i - 1, 0, -1)) + [0] * z[i - 1])))
    return out


def _pushes(pi: ColoredPermutation) -> list[Push]:
    sigma = ordered_target(pi)
    current = list(pi.digits)
    pushes = []
    for k in range(1, pi.n):
        p = current.index(sigma.digits[k - 1]) + 1
        letters = list(range(p - 1, k - 1, -1))
        for x in letters:
            current[x - 1], current[x] = current[x], current[x - 1]
        pushes.append(Push(k, p, SWord(letters)))
    return pushes


def _ordering_word(pushes: Sequence[Push]) -> SWord:
    recorded = [x for push in pushes for x in push.letters]
    return SWord(reversed(recorded))


def canonical_s_word(pi: ColoredPermutation) -> SWord:
    coloring = [x for _, _, f in _coloring_factors(pi) for x in f]
    return SWord(coloring + list(_ordering_word(_pushes(pi))))


# -- translation into the alternating generators ----------------------------

def _raw_pairs(params: GroupParams, word: Sequence[int]) -> list[tuple[int, int]]:
    """Unnormalized pair images as (letter, multiplicity) items."""
    if len(word) % 2:
        raise OddLength(f"word of length {len(word)} cannot be paired")
    k = (params.r + 2) // 4
    items: list[tuple[int, int]] = []
    for x, y in zip(word[0::2], word[1::2]):
        # x s_0^{r/2} on the left, s_0^{r/2} y on the right
        items.append((A0, k) if x == 0 else (A1INV, 1) if x == 1 else (x, 1))
        items.append((A0, k) if y == 0 else (y, 1))
    return items


def _normalize(params: GroupParams, items: Iterable[tuple[int, int]]) -> AWord:
    half = params.r // 2
    out: list[int] = []
    run = 0
    for letter, mult in items:
        if letter == A0:
            run += mult
            continue
        out.extend([A0] * (run % half))
        run = 0
        out.extend([letter] * mult)
    out.extend([A0] * (run % half))
    return AWord(out)


def normalize_a_word(params: GroupParams, word: Iterable[int]) -> AWord:
    """Merge adjacent a_0 runs and reduce each exponent mod r/2."""
    return _normalize(params, ((x, 1) for x in word))


def translate_pairs(params: GroupParams, word: Sequence[int]) -> AWord:
    require_alternating(params)
    return _normalize(params, _raw_pairs(params, word))


def a0_run_exponents(params: GroupParams, word: Sequence[int]) -> list[tuple[int, int]]:
    """For each maximal s_0 run of length z, the a_0 exponent (mod r/2) its letters produce."""
    require_alternating(params)
    items = _raw_pairs(params, word)
    half = params.r // 2
    out = []
    i = 0
    while i < len(word):
        if word[i] != 0:
            i += 1
            continue
        j = i
        while j < len(word) and word[j] == 0:
            j += 1
        exponent = sum(items[t][1] for t in range(i, j)) % half
        out.append((j - i, exponent))
        i = j
    return out


def length_LA(pi: ColoredPermutation) -> int:
    """Length over the alternating generators, in closed form."""
    _require_member(pi)
    r = pi.r
    return colored_offset(pi) + inv_colored(pi) + sum(oslash(zi, r) for zi in pi.colors)


def canonical_a_word(pi: ColoredPermutation) -> AWord:
    _require_member(pi)
    return translate_pairs(pi.params, canonical_s_word(pi))


# -- structured decomposition -------------------------------------------------

TRIVIAL = "trivial"
WITH_PREFIX = "with-s0-prefix"
WITHOUT_PREFIX = "without-s0-prefix"

# sign of the a_1 letter in a coloring factor, keyed by (i - 1 odd, has s_0 prefix)
_A1_SIGN = {
    (True, True): A1,
    (True, False): A1INV,
    (False, True): A1INV,
    (False, False): A1,
}


def gamma_pattern(params: GroupParams, i: int, branch: str, exponent: int) -> AWord:
    """The member of the coloring family C_i named by (branch, exponent).

    ``i = n + 1`` denotes the closing family {1, a_0^{(r+2)/4}}; its
    nontrivial member uses branch WITH_PREFIX.
    """
    k = (params.r + 2) // 4
    if branch == TRIVIAL:
        return AWord()
    if i == params.n + 1:
        return normalize_a_word(params, [A0] * k)
    letters: list[int] = [A0] * k if branch == WITH_PREFIX else []
    if i >= 2:
        letters += list(range(i - 1, 1, -1))
        letters.append(_A1_SIGN[((i - 1) % 2 == 1, branch == WITH_PREFIX)])
    letters += [A0] * exponent
    return normalize_a_word(params, letters)


def ordering_pattern(params: GroupParams, k: int, start: int) -> AWord:
    """a_{p-1} ... a_k for k >= 2; for k = 1 the last letter is a_1^{+-1} by parity of p - 1."""
    letters = list(range(start - 1, k - 1, -1))
    if k == 1 and letters:
        letters[-1] = A1INV if (start - 1) % 2 else A1
    return AWord(letters)


@dataclass(frozen=True)
class Gamma:
    index: int
    branch: str
    exponent: int
    word: AWord
    s_letters: SWord

    def __str__(self) -> str:
        return str(self.word) or "1"


@dataclass(frozen=True)
class OrderingFactor:
    index: int
    start: int
    word: AWord

    def __str__(self) -> str:
        return str(self.word) or "1"


@dataclass(frozen=True)
class CanonicalDecomposition:
    """pi = gamma_1 ... gamma_{n+1} . o_{n-1}^{-1} ... o_1^{-1}."""

    params: GroupParams
    gammas: tuple[Gamma, ...]
    orderings: tuple[OrderingFactor, ...]

    def factors(self) -> list[AWord]:
        """Words of the factors in product order."""
        return [g.word for g in self.gammas] + [o.word.inverse() for o in reversed(self.orderings)]

    def word(self) -> AWord:
        return normalize_a_word(self.params, [x for w in self.factors() for x in w])

    @property
    def letter_count(self) -> int:
        return len(self.word())

    def evaluate(self) -> ColoredPermutation:
        result = identity(self.params)
        for w in self.factors():
            result = multiply(result, eval_a_word(self.params, w))
        return result

    def key(self) -> tuple:
        return tuple(g.word for g in self.gammas) + tuple(o.word for o in self.orderings)

    def is_valid(self) -> bool:
        p = self.params
        half = p.r // 2
        if len(self.gammas) != p.n + 1 or len(self.orderings) != max(p.n - 1, 0):
            return False
        for g in self.gammas[:-1]:
            if g.branch not in (TRIVIAL, WITH_PREFIX, WITHOUT_PREFIX):
                return False
            if g.index == 1 and g.branch == WITH_PREFIX:
                return False
            if not 0 <= g.exponent < half:
                return False
            if g.word != gamma_pattern(p, g.index, g.branch, g.exponent):
                return False
        last = self.gammas[-1]
        if last.index != p.n + 1 or last.word not in (AWord(), gamma_pattern(p, p.n + 1, WITH_PREFIX, 0)):
            return False
        for k, o in enumerate(self.orderings, 1):
            if o.index != k or not k <= o.start <= p.n:
                return False
            if o.word != ordering_pattern(p, k, o.start):
                return False
        return True

    def to_dict(self) -> dict:
        return {
            "gammas": [
                {"index": g.index, "branch": g.branch, "exponent": g.exponent, "word": str(g.word)}
                for g in self.gammas
            ],
            "orderings": [
                {"index": o.index, "start": o.start, "end": o.index, "word": str(o.word)}
                for o in self.orderings
            ],
            "letter_count": self.letter_count,
        }


def structured_decomposition(pi: ColoredPermutation) -> CanonicalDecomposition:
    """Split the canonical word into coloring factors gamma_i and ordering factors o_j.

    A coloring factor of odd S-length leaves its final s_0 as a debt that
    is prepended to the next colored digit's factor, or closes the coloring
    part as gamma_{n+1} = a_0^{(r+2)/4}.
    """
    _require_member(pi)
    params = pi.params
    k = (params.r + 2) // 4
    half = params.r // 2
    factors = {i: f for i, _, f in _coloring_factors(pi)}
    gammas = []
    debt = False
    for i in range(1, params.n + 1):
        if i not in factors:
            gammas.append(Gamma(i, TRIVIAL, 0, AWord(), SWord()))
            continue
        prefix = debt
        chunk = ([0] if prefix else []) + list(factors[i])
        debt = len(chunk) % 2 == 1
        if debt:
            chunk.pop()
        trailing = len(chunk) - _strip_trailing_zeros(chunk)
        gammas.append(Gamma(
            i,
            WITH_PREFIX if prefix else WITHOUT_PREFIX,
            (trailing * k) % half,
            translate_pairs(params, chunk),
            SWord(chunk),
        ))
    tail_prefix = [0] if debt else []
    gammas.append(Gamma(
        params.n + 1,
        WITH_PREFIX if debt else TRIVIAL,
        0,
        normalize_a_word(params, [A0] * k) if debt else AWord(),
        SWord(tail_prefix),
    ))

    pushes = _pushes(pi)
    ordering = _ordering_word(pushes)
    tail = translate_pairs(params, tail_prefix + list(ordering))
    letters = list(tail[len(tail) - len(ordering):]) if ordering else []
    orderings: list[OrderingFactor] = [None] * len(pushes)  # type: ignore[list-item]
    pos = 0
    for push in reversed(pushes):
        m = len(push.letters)
        segment = AWord(letters[pos:pos + m])
        pos += m
        orderings[push.target - 1] = OrderingFactor(push.target, push.start, segment.inverse())
    return CanonicalDecomposition(params, tuple(gammas), tuple(orderings))


def _strip_trailing_zeros(chunk: Sequence[int]) -> int:
    """Length of ``chunk`` without its trailing s_0 run."""
    end = len(chunk)
    while end and chunk[end - 1] == 0:
        end -= 1
    return end
