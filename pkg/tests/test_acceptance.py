"""Acceptance criteria 1-9, all exact.

Each check returns ``(passed, detail)``; the pytest wrappers assert on it and a
summary hook in conftest prints one PASS/FAIL line per criterion. Running this
file directly prints the same lines.
"""

from __future__ import annotations

import pytest

from _oracles import brute_force_order_ideals, partition_counts
from hilbsmooth.arrow import Arrow, equivalent, is_zero, minimal_arrows
from hilbsmooth.bunch import build_bunch, promote_shadow, verify_bunch
from hilbsmooth.census import (check_addbox, check_thicken, check_truncations,
                               random_addbox_args, random_constructor_outputs, _rng)
from hilbsmooth.classify import is_compound_box, rigid_nonstandard_witnesses
from hilbsmooth.cotangent import class_report, condition_a, cotangent_dimension, is_smooth
from hilbsmooth.oracle import distraction_points, tangent_dimension
from hilbsmooth.staircase import enumerate_basis_sets, from_monomials, two_box_union

RESULTS: dict[int, tuple[bool, str]] = {}

TETRA = from_monomials([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)], 3)
CBOX = from_monomials([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, 1, 0), (0, 0, 1)], 3)
FIG2 = from_monomials([(0, 0), (1, 0), (0, 1), (0, 2)], 2)


def census_instances():
    out = [b for n in range(1, 9) for b in enumerate_basis_sets(2, n)]
    out += [b for n in range(1, 7) for b in enumerate_basis_sets(3, n)]
    return out


def criterion_1():
    rep = class_report(TETRA)
    got = (rep.dim, tangent_dimension(TETRA), rep.smooth,
           len(rigid_nonstandard_witnesses(TETRA)), rep.zero_count, len(minimal_arrows(TETRA)))
    want = (18, 18, False, 3, 6, 24)
    return got == want, f"(dim, tangent, smooth, witnesses, zero arrows, minimal arrows) = {got}"


def criterion_2():
    rep = class_report(CBOX)
    nonstd = rep.zero_nonstandard + rep.nonzero_nonstandard
    got = (rep.dim, tangent_dimension(CBOX), rep.smooth, len(nonstd),
           len(rep.zero_nonstandard), len(rep.zero_standard),
           equivalent(CBOX, Arrow((1, 0, 1), (1, 0, 0)), Arrow((0, 1, 1), (0, 1, 0))))
    want = (15, 15, True, 4, 4, 5, True)
    return got == want, f"(dim, tangent, smooth, nonstd, nonstd zero, std zero, equiv) = {got}"


def criterion_3():
    got = (FIG2.widths,
           equivalent(FIG2, Arrow((1, 1), (0, 1)), Arrow((1, 2), (0, 2))),
           is_zero(FIG2, Arrow((1, 2), (0, 0))),
           promote_shadow(FIG2, {Arrow((2, 0), (0, 1))}, 0))
    want = ((2, 3), True, True, frozenset({Arrow((1, 1), (0, 2))}))
    return got == want, f"widths {got[0]}, equivalence {got[1]}, zero {got[2]}, promotion ok {got[3] == want[3]}"


def criterion_4():
    p = partition_counts(8)
    counts, bad = [], 0
    for n in range(1, 9):
        sets = list(enumerate_basis_sets(2, n))
        counts.append(len(sets))
        bad += sum(1 for b in sets if not is_smooth(b) or cotangent_dimension(b) != 2 * n)
    ok = counts == p[1:] and bad == 0
    return ok, f"counts {counts} vs p(n) {p[1:]}, non-smooth {bad}"


def criterion_5():
    bad_compound = bad_zero = 0
    total = 0
    for n in range(1, 7):
        for b in enumerate_basis_sets(3, n):
            total += 1
            smooth = is_smooth(b)
            bad_compound += smooth != is_compound_box(b)[0]
            bad_zero += smooth != condition_a(b)
    counts = [sum(1 for _ in enumerate_basis_sets(3, n)) for n in (3, 4)]
    brute = [len(brute_force_order_ideals(3, n)) for n in (3, 4)]
    ok = bad_compound == 0 and bad_zero == 0 and counts == brute == [6, 13]
    return ok, (f"{total} staircases, compound mismatches {bad_compound}, "
                f"non-standard mismatches {bad_zero}, counts {counts} vs brute force {brute}")


def criterion_6():
    instances = census_instances()
    random = random_constructor_outputs(seed=0, count=200, r_max=4, n_max=20)
    bad = [b for b in instances + [b for _, b in random]
           if tangent_dimension(b) != cotangent_dimension(b)]
    ok = not bad and len(random) == 200 and all(b.r <= 4 and b.n <= 20 for _, b in random)
    return ok, f"{len(instances)} census + {len(random)} random instances, disagreements {len(bad)}"


def criterion_7():
    bad = 0
    instances = census_instances()
    for b in instances:
        bunch = build_bunch(b)
        bad += len(bunch) != b.rn or not verify_bunch(b, bunch).ok
    return bad == 0, f"{len(instances)} instances, bunch failures {bad}"


def criterion_8():
    failures, checked = [], 0
    base = [b for n in range(1, 6) for r in (2, 3) for b in enumerate_basis_sets(r, n)]
    for idx, b in enumerate(base):
        rng = _rng(0, "acceptance", idx)
        for w in (1, 2):
            checked += 1
            if check_thicken(b, w):
                failures.append(("thicken", b))
        for _ in range(2):
            checked += 1
            if check_addbox(b, *random_addbox_args(b, rng)):
                failures.append(("addbox", b))
        if is_smooth(b):
            n_checked, msg = check_truncations(b)
            checked += n_checked
            if msg:
                failures.append(("truncate", b))
    singular_thickened = sum(1 for b in base if not is_smooth(b))
    rng = _rng(0, "acceptance-unions")
    for _ in range(40):
        r = rng.randint(2, 4)
        u = two_box_union([rng.randint(1, 3) for _ in range(r)],
                          [rng.randint(1, 3) for _ in range(r)])
        checked += 1
        if cotangent_dimension(u) != u.rn:
            failures.append(("union", u))
    special = two_box_union((2, 2, 1, 1), (1, 1, 2, 2))
    special_ok = cotangent_dimension(special) == 28 and not is_compound_box(special)[0]
    ok = not failures and special_ok and singular_thickened > 0
    return ok, (f"{checked} checks, failures {len(failures)}, "
                f"special union dim {cotangent_dimension(special)} compound {is_compound_box(special)[0]}")


def criterion_9():
    bad = 0
    instances = census_instances()
    for b in instances:
        pts = distraction_points(b, range(b.n), 1)
        bad += len(pts) != b.n or len(set(pts)) != b.n
    return bad == 0, f"{len(instances)} instances, failures {bad}"


CRITERIA = {k: globals()[f"criterion_{k}"] for k in range(1, 10)}


def run(k):
    ok, detail = CRITERIA[k]()
    RESULTS[k] = (ok, detail)
    return ok, detail


@pytest.mark.parametrize("k", range(1, 10))
def test_criterion(k):
    ok, detail = run(k)
    assert ok, detail


if __name__ == "__main__":
    for k in CRITERIA:
        ok, detail = run(k)
        print(f"criterion {k}: {'PASS' if ok else 'FAIL'}  {detail}")
