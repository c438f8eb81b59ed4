from hilbsmooth.census import (analyze_instance, parse_suites, random_constructor_outputs,
                               run_census)
from hilbsmooth.staircase import box


def test_two_variable_rows():
    result = run_census(2, 8, ("oracle", "2var"))
    assert result.ok
    assert all(row.singular_count == 0 for row in result.rows)
    assert [row.total for row in result.rows] == [1, 2, 3, 5, 7, 11, 15, 22]


def test_three_variable_rows():
    result = run_census(3, 6)
    assert result.ok
    for row in result.rows:
        assert row.smooth_count == row.compound_box_count
        assert row.smooth_count + row.singular_count == row.total
        assert row.oracle_agreements == row.total
    assert result.rows[3].total == 13


def test_violation_is_serialised():
    res = analyze_instance((0, box((1, 1, 1)).sorted_members, 3, ("oracle",), 0))
    assert res.smooth and not res.violations


def test_suites():
    assert parse_suites("all") == parse_suites("")
    assert parse_suites("union,oracle") == ("oracle", "union")


def test_random_outputs_deterministic():
    a = random_constructor_outputs(7, 40)
    b = random_constructor_outputs(7, 40)
    assert a == b
    assert {kind for kind, _ in a} == {"box", "chain", "thicken", "union"}
    assert all(beta.r <= 4 and beta.n <= 20 for _, beta in a)
