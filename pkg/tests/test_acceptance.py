"""Acceptance criteria, one test (and one printed PASS/FAIL line) per criterion.

Tolerances are exact for every arithmetic claim; wall-clock budgets are
pinned below.  Lines are collected into the pytest terminal summary.
"""

import time

from rm3 import family, geometry
from rm3.curves import load_table
from rm3.rmfield import OKElem, canonical, expand_factor, rm_factor
from rm3.verify import verify_identities, verify_table
from rm3.zeta import count_points, count_points_naive, newton_assemble, verify_functional_equation

BUDGET_TABLE = 15 * 60      # criterion 1, full run, single thread
BUDGET_SMALL_PRIME = 5.0    # criterion 1, per prime p <= 31
BUDGET_BAD_PRIMES = 60.0    # criterion 2
BUDGET_N4 = 60.0            # criterion 4
BUDGET_IDENTITIES = 120.0   # criterion 5
BUDGET_TRANSLATION = 1.0    # criterion 6

RESULTS = []


def record(number, title, ok, detail):
    line = f"criterion {number} [{'PASS' if ok else 'FAIL'}] {title}: {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


def test_criterion_1_table_reproduction(quartic):
    start = time.perf_counter()
    report = verify_table(89, quartic, threads=1)
    elapsed = time.perf_counter() - start
    table = load_table()
    passed = [int(r.name[2:]) for r in report.rows if r.status == "PASS"]
    skipped = {int(r.name[2:]): r.detail for r in report.rows if r.status == "SKIP"}
    slow = [r.name for r in report.rows
            if r.status == "PASS" and int(r.name[2:]) <= 31 and r.seconds > BUDGET_SMALL_PRIME]
    ok = (sorted(passed) == sorted(table) and report.ok and not slow
          and skipped.get(7) == skipped.get(73) == "singular reduction"
          and elapsed < BUDGET_TABLE)
    record(1, "factor table reproduction", ok,
           f"{len(passed)}/{len(table)} primes match, skipped {sorted(skipped)}, {elapsed:.1f}s")


def test_criterion_2_bad_primes(quartic):
    start = time.perf_counter()
    bad = {p: geometry.quartic_smooth_mod_p(quartic, p) for p in (73, 109, 829, 967)}
    good = {p: geometry.quartic_smooth_mod_p(quartic, p) for p in load_table()}
    elapsed = time.perf_counter() - start
    ok = not any(bad.values()) and all(good.values()) and elapsed < BUDGET_BAD_PRIMES
    record(2, "bad-prime detection", ok,
           f"singular at {sorted(p for p, s in bad.items() if not s)}, "
           f"{sum(good.values())}/{len(good)} table primes smooth, {elapsed:.1f}s")


def test_criterion_3_end_to_end_p5(quartic):
    n1 = count_points_naive(quartic, 5, 1)
    counts = [count_points(quartic, 5, nu) for nu in (1, 2, 3)]
    h = newton_assemble(5, counts)
    symbolic = expand_factor(-OKElem.t(), 5)
    row = load_table()[5]
    alpha = rm_factor(h).alpha
    ok = (n1 == counts[0] == 7 and (h.a, h.b, h.c) == (1, 13, 9)
          and symbolic.coefficients() == h.coefficients()
          and canonical(OKElem(*row.alpha)) == canonical(alpha) == canonical(-OKElem.t())
          and row.trace == h.trace)
    record(3, "end-to-end fixture p=5", ok,
           f"N1={n1}, h=(1, {h.a}, {h.b}, {h.c}), alpha={alpha} ~ -t")


def test_criterion_4_functional_equation(quartic):
    start = time.perf_counter()
    details = []
    ok = True
    for p in (5, 11):
        counts = [count_points(quartic, p, nu) for nu in (1, 2, 3, 4)]
        h = newton_assemble(p, counts[:3])
        predicted = h.predicted_counts(4)[3]
        ok &= predicted == counts[3] and verify_functional_equation(h, counts[3])
        details.append(f"p={p}: N4={counts[3]} predicted {predicted}")
    ok &= count_points_naive(quartic, 5, 4) == 563
    elapsed = time.perf_counter() - start
    ok &= elapsed < BUDGET_N4
    record(4, "N4 cross-check", ok, "; ".join(details) + f", {elapsed:.1f}s")


def test_criterion_5_identity_suite():
    start = time.perf_counter()
    report = verify_identities()
    elapsed = time.perf_counter() - start
    failed = [r.name for r in report.rows if r.status != "PASS"]
    ok = not failed and elapsed < BUDGET_IDENTITIES
    record(5, "symbolic identity suite", ok,
           f"{report.count('PASS')}/{len(report.rows)} identities"
           + (f", not passing {failed}" if failed else "") + f", {elapsed:.1f}s")


def test_criterion_6_translation_invariance():
    start = time.perf_counter()
    checked = [family.translation_invariance(-2, p) for p in (5, 13, 29)]
    elapsed = time.perf_counter() - start
    ok = all(n > 0 for n in checked) and elapsed < BUDGET_TRANSLATION
    record(6, "translation invariance", ok,
           f"{checked} affine points for p = 5, 13, 29, {elapsed:.2f}s")
