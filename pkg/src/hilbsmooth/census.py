"""Exhaustive census of small staircases plus seeded constructor property suites.

Every instance is analysed by a pure top-level function so the census can fan
out over processes; results are gathered and sorted before anything is
emitted, so output does not depend on ``jobs``.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Iterable, Optional

from .bunch import build_bunch, verify_bunch
from .classify import classify, rigid_nonstandard_witnesses
from .cotangent import condition_a, cotangent_dimension
from .oracle import tangent_dimension
from .staircase import (BasisSet, add_box, box, dump, enumerate_basis_sets, hypothesis81,
                        thicken, truncate, two_box_union)

SUITES = ("oracle", "bunch", "2var", "3var", "boxes", "thicken", "truncate", "addbox", "union")


@dataclass
class CensusRow:
    r: int
    n: int
    total: int = 0
    smooth_count: int = 0
    singular_count: int = 0
    compound_box_count: int = 0
    witness_count: int = 0
    oracle_agreements: int = 0


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: int = 0


@dataclass
class Violation:
    suite: str
    message: str
    staircase: str

    def render(self) -> str:
        return f"[{self.suite}] {self.message}\n{self.staircase}"


@dataclass
class CensusResult:
    r: int
    n_max: int
    seed: int
    suites: tuple[str, ...]
    rows: list[CensusRow] = field(default_factory=list)
    suite_results: dict[str, SuiteResult] = field(default_factory=dict)
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        first = self.violations[0] if self.violations else None
        return {
            "schema": 1,
            "r": self.r,
            "n_max": self.n_max,
            "seed": self.seed,
            "verify": list(self.suites),
            "rows": [asdict(row) for row in self.rows],
            "suites": [asdict(res) for res in self.suite_results.values()],
            "ok": self.ok,
            "counterexample": None if first is None else asdict(first),
        }

    def render(self) -> str:
        head = ("r", "n", "total", "smooth", "singular", "compound", "witness", "oracle_ok")
        lines = ["  ".join(f"{h:>9}" for h in head)]
        for row in self.rows:
            vals = (row.r, row.n, row.total, row.smooth_count, row.singular_count,
                    row.compound_box_count, row.witness_count, row.oracle_agreements)
            lines.append("  ".join(f"{v:>9}" for v in vals))
        lines.append("")
        for s, res in self.suite_results.items():
            status = "ok" if res.failures == 0 else "FAIL"
            lines.append(f"{s:<9} checked={res.checked} failures={res.failures} {status}")
        if self.violations:
            lines.append("")
            lines.append("first counterexample:")
            lines.append(self.violations[0].render())
        return "\n".join(lines) + "\n"


def parse_suites(text: str) -> tuple[str, ...]:
    names = [s.strip() for s in text.split(",") if s.strip()]
    if not names or "all" in names:
        return SUITES
    bad = [s for s in names if s not in SUITES]
    if bad:
        raise ValueError(f"unknown verification suite(s): {', '.join(bad)}")
    return tuple(s for s in SUITES if s in names)


def _rng(seed: int, *tags) -> random.Random:
    # string seeds hash deterministically across processes and runs
    return random.Random(":".join(str(t) for t in (seed,) + tags))


# -- per-instance checks -------------------------------------------------------

def _smooth(beta: BasisSet) -> bool:
    return cotangent_dimension(beta) == beta.rn


def check_thicken(beta: BasisSet, w: int) -> Optional[str]:
    thick = thicken(beta, w)
    if _smooth(thick) != _smooth(beta):
        return f"thickening by {w} changes smoothness"
    return None


def check_addbox(beta: BasisSet, j: int, h: int, widths) -> Optional[str]:
    bigger = add_box(beta, j, h, widths)
    if _smooth(bigger) != _smooth(beta):
        return f"adding box {tuple(widths)} at x{j + 1}-height {h} changes smoothness"
    return None


def check_truncations(beta: BasisSet) -> tuple[int, Optional[str]]:
    """Every truncation of a smooth staircase kills its non-standard arrows, and
    truncations meeting the degree hypothesis stay smooth."""
    checked = 0
    for j in range(beta.r):
        for h in range(1, beta.widths[j]):
            t = truncate(beta, j, h)
            checked += 1
            if not condition_a(t):
                return checked, f"truncation at x{j + 1}-height {h} has a live non-standard arrow"
            if hypothesis81(beta, j, h) and not _smooth(t):
                return checked, f"truncation at x{j + 1}-height {h} meets the hypothesis but is singular"
    return checked, None


def random_addbox_args(beta: BasisSet, rng: random.Random):
    j = rng.randrange(beta.r)
    h = rng.randint(1, 2)
    widths = tuple(h if k == j else beta.widths[k] + rng.randint(0, 1) for k in range(beta.r))
    return j, h, widths


@dataclass
class InstanceResult:
    index: int
    smooth: bool
    compound: bool
    witness: bool
    oracle_agree: Optional[bool]
    counts: dict[str, int]
    violations: list[Violation]


def analyze_instance(args) -> InstanceResult:
    index, members, r, suites, seed = args
    beta = BasisSet(members, r, validate=False)
    text = dump(beta)
    violations: list[Violation] = []
    counts = {s: 0 for s in suites}

    def fail(suite, msg, where=None):
        violations.append(Violation(suite, msg, dump(where) if where is not None else text))

    try:
        report = classify(beta)
    except AssertionError as exc:
        suite = "3var" if r == 3 else "2var"
        fail(suite, str(exc))
        report = None
    smooth = report.smooth if report else _smooth(beta)
    compound = report.is_compound_box if report else False
    witness = bool(report.rigid_nonstandard_witnesses) if report else bool(
        rigid_nonstandard_witnesses(beta))
    if r == 2 and "2var" in suites:
        counts["2var"] += 1
        if not smooth or not compound:
            fail("2var", "two-variable staircase is singular or not a compound box")
    if r == 3 and "3var" in suites:
        counts["3var"] += 1
    agree = None
    if "oracle" in suites:
        counts["oracle"] += 1
        tangent = tangent_dimension(beta)
        agree = tangent == report.dim if report else tangent == cotangent_dimension(beta)
        if not agree:
            fail("oracle", f"tangent dimension {tangent} differs from class count")
    if "bunch" in suites:
        counts["bunch"] += 1
        try:
            check = verify_bunch(beta, build_bunch(beta))
            if not check.ok:
                fail("bunch", "; ".join(check.violations))
        except AssertionError as exc:
            fail("bunch", str(exc))
    rng = _rng(seed, r, beta.n, index)
    if "thicken" in suites and r <= 3:
        counts["thicken"] += 1
        msg = check_thicken(beta, rng.randint(1, 2))
        if msg:
            fail("thicken", msg)
    if "addbox" in suites:
        counts["addbox"] += 1
        msg = check_addbox(beta, *random_addbox_args(beta, rng))
        if msg:
            fail("addbox", msg)
    if "truncate" in suites and smooth:
        n_checked, msg = check_truncations(beta)
        counts["truncate"] += n_checked
        if msg:
            fail("truncate", msg)
    return InstanceResult(index, smooth, compound, witness, agree, counts, violations)


# -- random constructor outputs ------------------------------------------------

def random_box(rng: random.Random, r_max: int = 4, n_max: int = 20) -> BasisSet:
    r = rng.randint(1, r_max)
    widths = [1] * r
    for _ in range(rng.randint(0, 6)):
        k = rng.randrange(r)
        widths[k] += 1
        if _prod(widths) > n_max:
            widths[k] -= 1
    return box(widths)


def random_union(rng: random.Random, r_max: int = 4, n_max: int = 20) -> BasisSet:
    while True:
        r = rng.randint(2, r_max)
        w1 = [rng.randint(1, 3) for _ in range(r)]
        w2 = [rng.randint(1, 3) for _ in range(r)]
        beta = two_box_union(w1, w2)
        if beta.n <= n_max:
            return beta


def random_chain(rng: random.Random, r_max: int = 4, n_max: int = 20) -> BasisSet:
    beta = random_box(rng, r_max, max(1, n_max // 3))
    for _ in range(rng.randint(1, 3)):
        j, h, widths = random_addbox_args(beta, rng)
        nxt = add_box(beta, j, h, widths)
        if nxt.n > n_max:
            break
        beta = nxt
    return beta


def random_thickening(rng: random.Random, r_max: int = 4, n_max: int = 20) -> BasisSet:
    r0 = rng.randint(1, r_max - 1)
    n0 = rng.randint(1, 5 if r0 > 1 else 6)
    base = list(enumerate_basis_sets(r0, n0))
    beta = rng.choice(base)
    w = rng.randint(1, max(1, min(3, n_max // beta.n)))
    return thicken(beta, w)


CONSTRUCTORS = {"box": random_box, "thicken": random_thickening,
                "chain": random_chain, "union": random_union}


def random_constructor_outputs(seed: int, count: int, r_max: int = 4,
                               n_max: int = 20) -> list[tuple[str, BasisSet]]:
    """``count`` seeded staircases, cycling through the four constructors."""
    rng = _rng(seed, "constructors")
    kinds = sorted(CONSTRUCTORS)
    out = []
    for k in range(count):
        kind = kinds[k % len(kinds)]
        out.append((kind, CONSTRUCTORS[kind](rng, r_max, n_max)))
    return out


def _prod(xs: Iterable[int]) -> int:
    p = 1
    for x in xs:
        p *= x
    return p


def _random_suite(name: str, seed: int, samples: int) -> tuple[int, list[Violation]]:
    rng = _rng(seed, name)
    maker = random_box if name == "boxes" else random_union
    violations = []
    for _ in range(samples):
        beta = maker(rng)
        dim, tangent = cotangent_dimension(beta), tangent_dimension(beta)
        if dim != beta.rn or tangent != beta.rn:
            violations.append(Violation(name, f"dim {dim}, tangent {tangent}, rn {beta.rn}",
                                        dump(beta)))
    return samples, violations


def run_census(r: int, n_max: int, suites: Iterable[str] = SUITES, *, jobs: int = 1,
               seed: int = 0, samples: int = 50) -> CensusResult:
    suites = tuple(s for s in SUITES if s in set(suites))
    if r < 1 or n_max < 1:
        raise ValueError("r and n_max must be positive")
    result = CensusResult(r, n_max, seed, suites,
                          suite_results={s: SuiteResult(s) for s in suites})
    tasks = []
    for n in range(1, n_max + 1):
        for idx, beta in enumerate(enumerate_basis_sets(r, n)):
            tasks.append((idx, beta.sorted_members, r, suites, seed))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(analyze_instance, tasks, chunksize=8))
    else:
        outcomes = [analyze_instance(t) for t in tasks]
    rows = {n: CensusRow(r, n) for n in range(1, n_max + 1)}
    for task, res in zip(tasks, outcomes):
        row = rows[len(task[1])]
        row.total += 1
        row.smooth_count += res.smooth
        row.singular_count += not res.smooth
        row.compound_box_count += res.compound
        row.witness_count += res.witness
        row.oracle_agreements += bool(res.oracle_agree)
        for s, c in res.counts.items():
            result.suite_results[s].checked += c
        for v in res.violations:
            result.suite_results.setdefault(v.suite, SuiteResult(v.suite)).failures += 1
            result.violations.append(v)
    result.rows = [rows[n] for n in sorted(rows)]
    for name in ("boxes", "union"):
        if name in suites:
            checked, violations = _random_suite(name, seed, samples)
            result.suite_results[name].checked += checked
            result.suite_results[name].failures += len(violations)
            result.violations.extend(violations)
    return result
