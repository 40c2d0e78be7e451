"""Brute-force ground truth: Cayley-graph BFS and exhaustive verification suites.

Distances are computed over the whole rank space of G(r, n) with numpy,
one generator table per letter, so a BFS over ~10^6 elements finishes in
seconds. Every closed form in the library is compared against these
tables or against direct enumeration.
"""
from __future__ import annotations

import json
import math
import random
import time
from collections.abc import Mapping
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Callable, Iterable, Iterator

import numpy as np

from . import canonical as can
from . import covering as cov
from .core import (
    ColoredPermutation,
    GroupParams,
    colored_offset,
    enumerate_group,
    format_window,
    generator_s,
    identity,
    inv_colored,
    inv_plain,
    multiply,
    power,
    rank,
    require_alternating,
)
from .errors import CapExceeded, InvalidParams, UnknownSuite
from .qseries import STATISTICS, genfun_bruteforce, genfun_formula, genfun_length_unhalved

DEFAULT_CAP = 10 ** 6
ALTERNATING = "alternating"
FULL = "full"
SUITES = ("presentation", "order", "decomposition", "covering", "genfun")

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


# -- batch arithmetic on the rank space ----------------------------------------

def _check_cap(params: GroupParams, cap: int) -> None:
    if params.order > cap:
        raise CapExceeded(f"|G{params}| = {params.order} exceeds the cap {cap}")


@lru_cache(maxsize=8)
def _all_elements(params: GroupParams) -> tuple[np.ndarray, np.ndarray]:
    """Window digits and colors of every element, rows in rank order."""
    r, n = params.r, params.n
    perms = np.array(list(permutations(range(1, n + 1))), dtype=np.int64)
    zs = np.indices((r,) * n).reshape(n, -1).T.astype(np.int64)
    digits = np.repeat(perms, len(zs), axis=0)
    z = np.tile(zs, (len(perms), 1))
    colors = np.take_along_axis(z, digits - 1, axis=1)
    return digits, colors


def batch_rank(digits: np.ndarray, colors: np.ndarray, r: int) -> np.ndarray:
    """Vectorized :func:`altperm.core.rank` over rows of window arrays."""
    n = digits.shape[1]
    perm_rank = np.zeros(len(digits), dtype=np.int64)
    for i in range(n):
        smaller = (digits[:, i + 1:] < digits[:, i:i + 1]).sum(axis=1)
        perm_rank += smaller * math.factorial(n - 1 - i)
    positions = np.argsort(digits, axis=1)
    z = np.take_along_axis(colors, positions, axis=1)
    code = np.zeros(len(digits), dtype=np.int64)
    for i in range(n):
        code = code * r + z[:, i]
    return perm_rank * r ** n + code


def batch_right_multiply(digits: np.ndarray, colors: np.ndarray, g: ColoredPermutation) -> tuple[np.ndarray, np.ndarray]:
    """Rows times g, by the window rule: position j holds row(g(j)) with colors added."""
    idx = np.array(g.digits, dtype=np.int64) - 1
    return digits[:, idx], (colors[:, idx] + np.array(g.colors, dtype=np.int64)) % g.r


@lru_cache(maxsize=32)
def _successor_table(params: GroupParams, g: ColoredPermutation) -> np.ndarray:
    digits, colors = _all_elements(params)
    table = batch_rank(*batch_right_multiply(digits, colors, g), params.r)
    table.setflags(write=False)
    return table


def generating_set(params: GroupParams, target: str) -> list[tuple[str, ColoredPermutation]]:
    if target == FULL:
        return [(f"s{i}", generator_s(params, i)) for i in range(params.n)]
    if target == ALTERNATING:
        require_alternating(params)
        letters = [can.A0] if not params.degenerate else []
        if params.n >= 2:
            letters += [can.A1, can.A1INV] + list(range(2, params.n))
        # a_0^{-1} is not a generator: the set is not inverse-closed
        return [(str(can.AWord([x])), can.generator_a(params, x)) for x in letters]
    raise InvalidParams(f"unknown BFS target {target!r}")


class DistanceTable(Mapping):
    """Rank -> word length for every element reached from the identity."""

    def __init__(self, params: GroupParams, target: str, dist: np.ndarray):
        self.params = params
        self.target = target
        self.array = dist

    def __getitem__(self, key: int) -> int:
        d = int(self.array[key]) if 0 <= key < len(self.array) else -1
        if d < 0:
            raise KeyError(key)
        return d

    def __iter__(self) -> Iterator[int]:
        return iter(np.flatnonzero(self.array >= 0).tolist())

    def __len__(self) -> int:
        return int((self.array >= 0).sum())

    def distance(self, pi: ColoredPermutation) -> int:
        return self[rank(pi)]

    def max_distance(self) -> int:
        return int(self.array.max())


@lru_cache(maxsize=16)
def _bfs(params: GroupParams, target: str) -> np.ndarray:
    tables = [_successor_table(params, g) for _, g in generating_set(params, target)]
    dist = np.full(params.order, -1, dtype=np.int32)
    dist[0] = 0
    frontier = np.array([0], dtype=np.int64)
    level = 0
    while frontier.size:
        level += 1
        found = []
        for table in tables:
            nb = table[frontier]
            nb = nb[dist[nb] < 0]
            dist[nb] = level
            found.append(nb)
        frontier = np.unique(np.concatenate(found))
    dist.setflags(write=False)
    return dist


def bfs_lengths(params: GroupParams, target: str = ALTERNATING, cap: int = DEFAULT_CAP) -> DistanceTable:
    """Breadth-first distances from the identity under right multiplication."""
    _check_cap(params, cap)
    return DistanceTable(params, target, _bfs(params, target))


# -- reports ----------------------------------------------------------------------

@dataclass
class Check:
    check_id: str
    status: str
    counterexample: str | None = None
    detail: str = ""


@dataclass
class VerificationReport:
    suite: str
    params: GroupParams | None
    checks: list[Check] = field(default_factory=list)
    elapsed: float = 0.0
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status == FAIL]

    def add(self, check_id: str, ok: bool, counterexample: str | None = None, detail: str = "") -> None:
        self.checks.append(Check(check_id, PASS if ok else FAIL, None if ok else counterexample, detail))

    def skip(self, check_id: str, detail: str) -> None:
        self.checks.append(Check(check_id, SKIPPED, None, detail))

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "params": None if self.params is None else {"r": self.params.r, "n": self.params.n},
            "passed": self.passed,
            "elapsed": round(self.elapsed, 6),
            "notes": list(self.notes),
            "checks": [
                {"id": c.check_id, "status": c.status, "counterexample": c.counterexample, "detail": c.detail}
                for c in self.checks
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def render(self) -> str:
        head = f"suite {self.suite} {self.params or ''}".rstrip()
        lines = [head]
        width = max((len(c.check_id) for c in self.checks), default=10)
        for c in self.checks:
            line = f"  {c.status.upper():7} {c.check_id:<{width}}  {c.detail}".rstrip()
            if c.counterexample:
                line += f"  [counterexample: {c.counterexample}]"
            lines.append(line)
        for note in self.notes:
            lines.append(f"  note: {note}")
        verdict = "PASS" if self.passed else "FAIL"
        lines.append(f"  {verdict} ({len(self.checks)} checks, {self.elapsed:.2f}s)")
        return "\n".join(lines)


def _sweep(report: VerificationReport, check_id: str, items: Iterable, predicate: Callable, describe: Callable = str) -> None:
    """Record one check that holds for every item, keeping the first witness on failure."""
    count = 0
    for item in items:
        count += 1
        if not predicate(item):
            report.add(check_id, False, describe(item), f"failed after {count} cases")
            return
    report.add(check_id, True, detail=f"{count} cases")


def _timed(suite: str, params: GroupParams | None):
    report = VerificationReport(suite, params)
    report.elapsed = -time.perf_counter()
    if params is not None and params.degenerate:
        report.notes.append("degenerate r=2: a_0 is the identity and is left out of the generating set")
    return report


def _finish(report: VerificationReport) -> VerificationReport:
    report.elapsed += time.perf_counter()
    return report


def _alternating_with_rank(params: GroupParams) -> Iterator[tuple[int, ColoredPermutation]]:
    for k, pi in enumerate(enumerate_group(params)):
        if (sum(pi.colors) + inv_plain(pi.digits)) % 2 == 0:
            yield k, pi


# -- presentation -----------------------------------------------------------------

def _relations(params: GroupParams) -> list[tuple[str, list[tuple[str, list, list]]]]:
    """Relation families as (family id, [(instance id, lhs, rhs)]).

    Words are lists of ('a', letter) / ('s', index) tokens.
    """
    n, r = params.n, params.r
    k = (r + 2) // 4
    a = lambda *xs: [("a", x) for x in xs]  # noqa: E731
    s = lambda *xs: [("s", x) for x in xs]  # noqa: E731
    rng = range(2, n)
    fam = []
    fam.append(("A1 a0^(r/2)=1", [("", a(*[0] * (r // 2)), [])]))
    fam.append(("A2 a1^4=1", [("", a(1, 1, 1, 1), [])] if n >= 2 else []))
    fam.append(("A3 ai^2=1 (i>1)", [(f"i={i}", a(i, i), []) for i in rng]))
    idx = [0] + list(rng)
    fam.append(("A4 ai aj=aj ai (|i-j|>1, i,j!=1)",
                [(f"i={i},j={j}", a(i, j), a(j, i)) for i in idx for j in idx if j - i > 1]))
    fam.append(("A5 (ai ai+1)^3=1 (i>=1)", [(f"i={i}", a(i, i + 1) * 3, []) for i in range(1, n - 1)]))
    fam.append(("A6 (a0 a1)^(2r)=1", [("", a(0, 1) * (2 * r), [])] if n >= 2 else []))
    fam.append(("A7 (a0 a1')^(2r)=1", [("", a(0, -1) * (2 * r), [])] if n >= 2 else []))
    fam.append(("A8 a0 a1^2=a1^2 a0", [("", a(0, 1, 1), a(1, 1, 0))] if n >= 2 else []))
    fam.append(("A9 a1 ai=ai a1' (i>2)", [(f"i={i}", a(1, i), a(i, -1)) for i in range(3, n)]))
    fam.append(("R1 (a1' a2)^3=1", [("", a(-1, 2) * 3, [])] if n >= 3 else []))
    fam.append(("R2 a1' a0 a1'=a1 a0 a1", [("", a(-1, 0, -1), a(1, 0, 1))] if n >= 2 else []))
    fam.append(("R3 a1' a0 a1=a1 a0 a1'", [("", a(-1, 0, 1), a(1, 0, -1))] if n >= 2 else []))
    fam.append(("T1 si sj=ai aj (i,j>=2)", [(f"i={i},j={j}", s(i, j), a(i, j)) for i in rng for j in rng]))
    fam.append(("T2 s1 si=a1' ai (i>=2)", [(f"i={i}", s(1, i), a(-1, i)) for i in rng]))
    fam.append(("T3 si s1=ai a1 (i>=2)", [(f"i={i}", s(i, 1), a(i, 1)) for i in rng]))
    fam.append(("T4 s0 s1=a0^((r+2)/4) a1", [("", s(0, 1), a(*[0] * k, 1))] if n >= 2 else []))
    fam.append(("T5 s1 s0=a1' a0^((r+2)/4)", [("", s(1, 0), a(-1, *[0] * k))] if n >= 2 else []))
    fam.append(("T6 a0^(r/2)=1", [("", a(*[0] * (r // 2)), [])]))
    fam.append(("T7 s0 si=a0^((r+2)/4) ai", [(f"i={i}", s(0, i), a(*[0] * k, i)) for i in range(1, n)]))
    fam.append(("G1 s0^r=1", [("", s(*[0] * r), [])]))
    fam.append(("G2 si^2=1", [(f"i={i}", s(i, i), []) for i in range(1, n)]))
    fam.append(("G3 si si+1 si=si+1 si si+1", [(f"i={i}", s(i, i + 1, i), s(i + 1, i, i + 1)) for i in range(1, n - 1)]))
    fam.append(("G4 si sj=sj si (j-i>1)",
                [(f"i={i},j={j}", s(i, j), s(j, i)) for i in range(1, n) for j in range(i + 2, n)]))
    fam.append(("G5 (s0 s1)^(2r)=1", [("", s(0, 1) * (2 * r), [])] if n >= 2 else []))
    return fam


def _eval_tokens(params: GroupParams, word: list) -> ColoredPermutation:
    result = identity(params)
    for kind, x in word:
        g = can.generator_a(params, x) if kind == "a" else generator_s(params, x)
        result = multiply(result, g)
    return result


def check_presentation(params: GroupParams) -> VerificationReport:
    """Evaluate every defining, derived and translation relation as an identity."""
    require_alternating(params)
    report = _timed("presentation", params)
    for family, instances in _relations(params):
        if not instances:
            report.skip(family, f"no valid indices for n={params.n}")
            continue
        for inst, lhs, rhs in instances:
            left, right = _eval_tokens(params, lhs), _eval_tokens(params, rhs)
            cid = f"{family} [{inst}]" if inst else family
            report.add(cid, left == right, f"{format_window(left)} != {format_window(right)}")
    return _finish(report)


# -- group order ------------------------------------------------------------------

def check_group_order(params: GroupParams, cap: int = DEFAULT_CAP) -> VerificationReport:
    require_alternating(params)
    _check_cap(params, cap)
    report = _timed("order", params)
    members = [k for k, _ in _alternating_with_rank(params)]
    report.add("order |A| = r^n n!/2", len(members) == params.alternating_order,
               detail=f"{len(members)} vs {params.alternating_order}")
    reached = bfs_lengths(params, ALTERNATING, cap).array >= 0
    expected = np.zeros(params.order, dtype=bool)
    expected[members] = True
    diff = np.flatnonzero(reached != expected)
    report.add("closure of generators = parity-criterion set", diff.size == 0,
               None if diff.size == 0 else format_window(_unrank(params, int(diff[0]))),
               f"{int(reached.sum())} reached")
    full = bfs_lengths(params, FULL, cap).array
    even = (full % 2 == 0)
    diff = np.flatnonzero(even != expected)
    report.add("parity criterion <=> even S-length", diff.size == 0,
               None if diff.size == 0 else format_window(_unrank(params, int(diff[0]))),
               f"{params.order} elements")
    return _finish(report)


def _unrank(params: GroupParams, k: int) -> ColoredPermutation:
    from .core import unrank
    return unrank(params, k)


# -- lengths and decompositions ---------------------------------------------------------

def check_length_oracle(params: GroupParams, cap: int = DEFAULT_CAP) -> VerificationReport:
    """BFS distance over the alternating generators equals the closed-form length."""
    require_alternating(params)
    report = _timed("length-oracle", params)
    dist = bfs_lengths(params, ALTERNATING, cap).array
    _sweep(report, "BFS distance = L_A", _alternating_with_rank(params),
           lambda item: int(dist[item[0]]) == can.length_LA(item[1]),
           lambda item: f"{format_window(item[1])} (bfs {int(dist[item[0]])}, L_A {can.length_LA(item[1])})")
    return _finish(report)


def check_decomposition(params: GroupParams, cap: int = DEFAULT_CAP) -> VerificationReport:
    require_alternating(params)
    report = _timed("decomposition", params)
    dist = bfs_lengths(params, ALTERNATING, cap).array
    seen: dict[tuple, ColoredPermutation] = {}
    failures: dict[str, str] = {}
    count = 0
    for k, pi in _alternating_with_rank(params):
        count += 1
        word = can.canonical_a_word(pi)
        dec = can.structured_decomposition(pi)
        ell = can.length_LA(pi)
        tests = {
            "round trip eval(canonical word) = pi": can.eval_a_word(params, word) == pi,
            "letter count = L_A": len(word) == ell,
            "L_A = BFS distance": ell == int(dist[k]),
            "decomposition structurally valid": dec.is_valid(),
            "decomposition product reconstructs": dec.evaluate() == pi,
            "decomposition letter count = L_A": dec.letter_count == ell,
        }
        for name, ok in tests.items():
            if not ok and name not in failures:
                failures[name] = format_window(pi)
        key = dec.key()
        if key in seen and "decomposition injective" not in failures:
            failures["decomposition injective"] = f"{format_window(seen[key])} and {format_window(pi)}"
        seen[key] = pi
    names = list(tests) + ["decomposition injective"] if count else ["decomposition injective"]
    for name in names:
        report.add(name, name not in failures, failures.get(name), f"{count} elements")
    report.add("distinct decompositions = r^n n!/2", len(seen) == params.alternating_order,
               detail=f"{len(seen)} vs {params.alternating_order}")
    return _finish(report)


# -- covering -----------------------------------------------------------------------

PAIRWISE_LIMIT = 100
SAMPLED_PAIRS = 2000


def check_fiber_fixed(params: GroupParams) -> VerificationReport:
    """finv_A and RtlMin_A are constant on fibers and equal the statistic of the projection."""
    require_alternating(params)
    report = _timed("fiber-fixed", params)
    for name, fa, fg in (("finv", cov.finv_a, cov.finv_g), ("rtlmin", cov.rtlmin_a, cov.rtlmin_g)):
        _sweep(report, f"{name}_A(pi) = {name}(p(pi))", can.enumerate_alternating(params),
               lambda pi: fa(pi) == fg(cov.project(pi)), format_window)
        _sweep(report, f"{name}_A constant on fibers", _coset_reps(params),
               lambda pi: len({fa(m) for m in cov.fiber(pi)}) == 1, format_window)
    return _finish(report)


def _coset_reps(params: GroupParams) -> Iterator[ColoredPermutation]:
    for sigma in enumerate_group(params.halved()):
        yield cov.section(sigma)


def _normal_closure(params: GroupParams, seed: ColoredPermutation) -> set[ColoredPermutation]:
    conj = {multiply(multiply(g, seed), g.__invert__()) for g in can.enumerate_alternating(params)}
    group = {identity(params)}
    frontier = list(group)
    while frontier:
        nxt = []
        for x in frontier:
            for c in conj:
                y = multiply(x, c)
                if y not in group:
                    group.add(y)
                    nxt.append(y)
        frontier = nxt
    return group


def check_covering(params: GroupParams, cap: int = DEFAULT_CAP, seed: int = 0) -> VerificationReport:
    require_alternating(params)
    _check_cap(params, cap)
    report = _timed("covering", params)
    elements = list(can.enumerate_alternating(params))
    half_params = params.halved()
    gens = [g for _, g in generating_set(params, ALTERNATING)]
    ident_half = identity(half_params)

    # homomorphism: checking p(x g) = p(x) p(g) on a generating set covers all products
    _sweep(report, "homomorphism on generators (complete)", ((x, g) for x in elements for g in gens),
           lambda xg: cov.project(multiply(*xg)) == multiply(cov.project(xg[0]), cov.project(xg[1])),
           lambda xg: f"{format_window(xg[0])} * {format_window(xg[1])}")
    if len(elements) <= PAIRWISE_LIMIT:
        pairs: Iterable = ((x, y) for x in elements for y in elements)
        label = "homomorphism on all pairs"
    else:
        rnd = random.Random(seed)
        pairs = [(rnd.choice(elements), rnd.choice(elements)) for _ in range(SAMPLED_PAIRS)]
        label = f"homomorphism on {SAMPLED_PAIRS} sampled pairs"
    _sweep(report, label, pairs,
           lambda xy: cov.project(multiply(*xy)) == multiply(cov.project(xy[0]), cov.project(xy[1])),
           lambda xy: f"{format_window(xy[0])} * {format_window(xy[1])}")

    image = {cov.project(pi) for pi in elements}
    report.add("surjective onto G(r/2, n)", len(image) == half_params.order,
               detail=f"{len(image)} of {half_params.order}")

    kernel = {pi for pi in elements if cov.project(pi) == ident_half}
    expected = set(cov.kernel_elements(params))
    report.add("kernel = even {0, r/2} colorings", kernel == expected,
               None if kernel == expected else format_window(next(iter(kernel ^ expected))),
               f"{len(kernel)} elements, 2^(n-1) = {2 ** (params.n - 1)}")
    if params.n >= 2 and params.n <= 3:
        a1sq = power(can.generator_a(params, can.A1), 2)
        closure = _normal_closure(params, a1sq)
        report.add("kernel = normal closure of a1^2", closure == expected, detail=f"{len(closure)} elements")
    elif params.n == 1:
        report.skip("kernel = normal closure of a1^2", "a1 needs n >= 2")
    else:
        report.skip("kernel = normal closure of a1^2", "closure computed only for n <= 3")

    _sweep(report, "fiber by color toggling = coset of kernel", _coset_reps(params),
           lambda pi: set(cov.fiber(pi)) == set(cov.fiber_via_kernel(pi)), format_window)
    reps = list(_coset_reps(params))
    covered = set()
    for pi in reps:
        covered.update(cov.fiber(pi))
    report.add("fibers partition A(r, n)", len(covered) == len(elements) and len(reps) * 2 ** (params.n - 1) == len(elements),
               detail=f"{len(reps)} cosets")

    _sweep(report, "p o s = id, s lands in A(r, n)", enumerate_group(half_params),
           lambda sg: can.is_alternating(cov.section(sg)) and cov.project(cov.section(sg)) == sg, format_window)

    def lengths_ok(pi: ColoredPermutation) -> dict[str, bool]:
        base = cov.project(pi)
        pi0 = cov.section(base)
        ell_f = cov.fibral_length(pi)
        return {
            "L_A(pi0) = l_G(p(pi))": can.length_LA(pi0) == cov.length_g(base),
            "L_A = l_F + l_G o p": can.length_LA(pi) == ell_f + cov.length_g(base),
            "l_F >= 0 and even": ell_f >= 0 and ell_f % 2 == 0,
            "l_F formula = definitional difference": ell_f == cov.fibral_length_definitional(pi),
            "l_F = c(pi) - c(pi0) + inv(pi) - inv(pi0)":
                ell_f == colored_offset(pi) - colored_offset(pi0) + inv_colored(pi) - inv_colored(pi0),
            "tinv = sum l_i eps_i": cov.tinv(pi) == sum(
                l for l, zi in zip(cov.lehmer_code(pi.digits), pi.z) if zi == params.r // 2),
        }

    failures: dict[str, str] = {}
    names: list[str] = []
    for pi in elements:
        results = lengths_ok(pi)
        names = list(results)
        for name, ok in results.items():
            if not ok and name not in failures:
                failures[name] = format_window(pi)
    for name in names:
        report.add(name, name not in failures, failures.get(name), f"{len(elements)} elements")

    _sweep(report, "F(pi) product = brute-force fiber sum", reps,
           lambda pi: cov.fiber_genfun(pi) == cov.fiber_genfun_bruteforce(pi), format_window)

    full = bfs_lengths(half_params, FULL, cap).array
    _sweep(report, "l_G = S-BFS distance on G(r/2, n)", enumerate(enumerate_group(half_params)),
           lambda item: cov.length_g(item[1]) == int(full[item[0]]), lambda item: format_window(item[1]))

    fixed = check_fiber_fixed(params)
    report.checks.extend(fixed.checks)
    return _finish(report)


# -- generating functions -----------------------------------------------------------

def check_genfun(params: GroupParams) -> VerificationReport:
    require_alternating(params)
    report = _timed("genfun", params)
    for stat in STATISTICS:
        formula = genfun_formula(params, stat)
        brute = genfun_bruteforce(params, stat)
        d = formula.first_difference(brute)
        report.add(f"{stat}: formula = brute force", d is None,
                   None if d is None else f"degree {d}: {formula.coefficients[d:d + 1]} vs {brute.coefficients[d:d + 1]}",
                   str(formula))
        report.add(f"{stat}: value at q=1 = |A|", formula.evaluate_at(1) == params.alternating_order,
                   detail=str(formula.evaluate_at(1)))
    unhalved = genfun_length_unhalved(params)
    report.add("length: pre-halving coefficients even", all(c % 2 == 0 for c in unhalved.coefficients))
    return _finish(report)


# -- aggregate ----------------------------------------------------------------------

_RUNNERS: dict[str, Callable[..., VerificationReport]] = {
    "presentation": lambda p, cap: check_presentation(p),
    "order": check_group_order,
    "decomposition": check_decomposition,
    "covering": check_covering,
    "genfun": lambda p, cap: check_genfun(p),
}


def run_suite(params: GroupParams, selection: Iterable[str] = SUITES, cap: int = DEFAULT_CAP) -> VerificationReport:
    chosen: list[str] = []
    for name in selection:
        names = SUITES if name == "all" else (name,)
        for s in names:
            if s not in _RUNNERS:
                raise UnknownSuite(f"unknown suite {s!r}; choose from {', '.join(SUITES)} or all")
            if s not in chosen:
                chosen.append(s)
    report = _timed("+".join(chosen) or "empty", params)
    if chosen:
        require_alternating(params)
    for s in chosen:
        sub = _RUNNERS[s](params, cap)
        for c in sub.checks:
            report.checks.append(Check(f"{s}: {c.check_id}", c.status, c.counterexample, c.detail))
        report.notes.extend(n for n in sub.notes if n not in report.notes)
    return _finish(report)
