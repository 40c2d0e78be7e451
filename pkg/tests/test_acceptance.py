"""The nine acceptance criteria, each timed against its budget.

Every test appends one PASS/FAIL line, printed in the pytest terminal
summary (and immediately with ``-s``). Caches of the BFS machinery are
cleared first so a criterion never benefits from work done by another.
"""
import subprocess
import sys
import time
from pathlib import Path

from altperm import (
    GroupParams,
    canonical_a_word,
    canonical_s_word,
    enumerate_group,
    is_alternating,
    parse_window,
)
from altperm import oracle
from altperm.qseries import genfun_bruteforce, genfun_formula

from conftest import ACCEPTANCE_LINES, WORKED_A_WORD, WORKED_S_WORD

GOLDEN = Path(__file__).parent / "golden" / "decompose_worked_example.txt"


def _fresh_caches():
    oracle._bfs.cache_clear()
    oracle._successor_table.cache_clear()
    oracle._all_elements.cache_clear()


def _record(number, title, ok, elapsed, budget, detail=""):
    within = elapsed < budget
    verdict = "PASS" if ok and within else "FAIL"
    line = f"{verdict} criterion {number}: {title} ({elapsed:.3f}s, budget {budget:g}s)"
    if detail:
        line += f" {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line
    assert within, line


def test_criterion_1_worked_example():
    pi = parse_window("1 2^2 4 5^1 3^3", 6)
    s_word, a_word = str(canonical_s_word(pi)), str(canonical_a_word(pi))
    best = float("inf")
    for _ in range(5):
        start = time.perf_counter()
        s_word, a_word = str(canonical_s_word(pi)), str(canonical_a_word(pi))
        best = min(best, time.perf_counter() - start)
    ok = s_word == WORKED_S_WORD and a_word == WORKED_A_WORD and len(canonical_a_word(pi)) == 17
    _record(1, "worked example S-word and 17-letter A-word", ok, best, 1e-3)


def test_criterion_2_length_oracle():
    _fresh_caches()
    cases = [(6, 2), (6, 3), (6, 4), (10, 2), (10, 3), (6, 5)]
    start = time.perf_counter()
    reports = [oracle.check_length_oracle(GroupParams(r, n)) for r, n in cases]
    elapsed = time.perf_counter() - start
    failed = [str(rep.params) for rep in reports if not rep.passed]
    total = sum(GroupParams(r, n).alternating_order for r, n in cases)
    _record(2, f"BFS distance = L_A on {total} elements", not failed, elapsed, 60, " ".join(failed))


def test_criterion_3_generating_functions():
    cases = [(6, 1), (6, 2), (6, 3), (6, 4), (10, 1), (10, 2), (10, 3)]
    start = time.perf_counter()
    bad = []
    for r, n in cases:
        p = GroupParams(r, n)
        for stat in ("length", "finv", "rtlmin"):
            formula = genfun_formula(p, stat)
            if formula != genfun_bruteforce(p, stat) or formula.evaluate_at(1) != p.alternating_order:
                bad.append(f"{stat}{p}")
    elapsed = time.perf_counter() - start
    _record(3, "length, finv, rtlmin generating functions", not bad, elapsed, 30, " ".join(bad))


def test_criterion_4_presentation():
    start = time.perf_counter()
    reports = [oracle.check_presentation(GroupParams(r, n)) for r in (6, 10) for n in (2, 3, 4, 5)]
    elapsed = time.perf_counter() - start
    failed = [f"{c.check_id}{rep.params}" for rep in reports for c in rep.failures()]
    checked = sum(1 for rep in reports for c in rep.checks if c.status == oracle.PASS)
    _record(4, f"presentation relations ({checked} instances)", not failed, elapsed, 1, " ".join(failed))


def test_criterion_5_canonical_decomposition():
    _fresh_caches()
    start = time.perf_counter()
    reports = [oracle.check_decomposition(GroupParams(6, 3)), oracle.check_decomposition(GroupParams(10, 2))]
    elapsed = time.perf_counter() - start
    failed = [f"{c.check_id}{rep.params}" for rep in reports for c in rep.failures()]
    _record(5, "decompositions valid, injective, reconstructing", not failed, elapsed, 10, " ".join(failed))


def test_criterion_6_covering():
    _fresh_caches()
    start = time.perf_counter()
    reports = [oracle.check_covering(GroupParams(r, n)) for r, n in ((6, 3), (6, 4), (10, 2))]
    elapsed = time.perf_counter() - start
    failed = [f"{c.check_id}{rep.params}" for rep in reports for c in rep.failures()]
    _record(6, "covering suite", not failed, elapsed, 60, " ".join(failed))


def test_criterion_7_fiber_fixedness():
    start = time.perf_counter()
    reports = [oracle.check_fiber_fixed(GroupParams(6, 3)), oracle.check_fiber_fixed(GroupParams(10, 2))]
    elapsed = time.perf_counter() - start
    failed = [f"{c.check_id}{rep.params}" for rep in reports for c in rep.failures()]
    _record(7, "finv_A and RtlMin_A fiber-fixed", not failed, elapsed, 10, " ".join(failed))


def test_criterion_8_membership_parity():
    _fresh_caches()
    start = time.perf_counter()
    bad = []
    for p in (GroupParams(6, 3), GroupParams(10, 2)):
        table = oracle.bfs_lengths(p, oracle.FULL)
        for k, pi in enumerate(enumerate_group(p)):
            if is_alternating(pi) != (table[k] % 2 == 0):
                bad.append(str(pi))
                break
    elapsed = time.perf_counter() - start
    _record(8, "parity criterion = S-length parity", not bad, elapsed, 10, " ".join(bad))


def _cli(*argv):
    return subprocess.run([sys.executable, "-m", "altperm", *argv], capture_output=True, text=True)


def test_criterion_9_cli_contract():
    start = time.perf_counter()
    golden = _cli("decompose", "1 2^2 4 5^1 3^3", "--r", "6")
    rejected = _cli("verify", "--suite", "all", "--r", "4", "--n", "2")
    verify = _cli("verify", "--suite", "all", "--r", "6", "--n", "3")
    elapsed = time.perf_counter() - start
    checks = {
        "golden": golden.returncode == 0 and golden.stdout == GOLDEN.read_text(),
        "r=4 rejected": rejected.returncode == 2 and "r must be ≡ 2 mod 4" in rejected.stderr,
        "verify exit 0": verify.returncode == 0,
    }
    failed = [k for k, ok in checks.items() if not ok]
    _record(9, "CLI golden output and exit codes", not failed, elapsed, 60, " ".join(failed))
