import math

import pytest

from irrbound.errors import ParameterError
from irrbound.study import (
    CSV_COLUMNS,
    family_asymptotics,
    find_t15_candidates,
    tree_bound_study,
)
from irrbound.trees import free_trees

# frozen from the Jacobi/explicit-edge oracle run over P5, S5 and the fork
N5_ROWS = {  # (p, I) -> (new_raw, new_trunc, pendant_bound, winner)
    (2, 2): (4.167321, 4, 2, "tree"),
    (4, 12): (12.0, 12, 12, "equal"),
    (3, 6): (7.305964, 6, 6, "equal"),
}


def test_study_n2():
    out = tree_bound_study(2)
    assert (out.new_better, out.equal, out.tree_better) == (1, 0, 0)
    (row,) = out.rows
    assert (row.I, row.pendant_bound, row.new_raw, row.new_trunc) == (0, 2, 0.0, 0)


def test_study_n5_matches_oracle():
    out = tree_bound_study(5)
    assert (out.new_better, out.equal, out.tree_better) == (0, 2, 1)
    for row in out.rows:
        new_raw, new_trunc, pendant, winner = N5_ROWS[(row.p, row.I)]
        assert row.new_raw == pytest.approx(new_raw, abs=1e-6)
        assert (row.new_trunc, row.pendant_bound, row.winner) == (new_trunc, pendant, winner)


def test_study_n1():
    out = tree_bound_study(1)
    assert len(out.rows) == 1 and out.rows[0].new_raw == 0


@pytest.mark.parametrize("n", range(1, 13))
def test_study_totals_and_row_soundness(n):
    out = tree_bound_study(n)
    assert out.new_better + out.equal + out.tree_better == len(out.rows)
    assert len(out.rows) == sum(1 for _ in free_trees(n))
    for r in out.rows:
        assert r.I <= r.new_trunc
        assert r.I <= r.pendant_bound
        assert r.new_raw <= r.zl_raw + 1e-9


def test_study_csv_deterministic_and_shaped():
    a, b = tree_bound_study(10).to_csv(), tree_bound_study(10).to_csv()
    assert a == b
    lines = a.splitlines()
    assert lines[0].split(",") == list(CSV_COLUMNS)
    assert len(lines) == 107


def test_summary():
    out = tree_bound_study(10)
    assert out.summary_line() == "new_better=46 equal=18 tree_better=42"
    assert out.summary()["counts"] == {"new_better": 46, "equal": 18, "tree_better": 42}


def test_worked_example_tree_on_ten_vertices():
    (row,) = find_t15_candidates(10)
    assert (row.p, row.I, row.new_trunc, row.pendant_bound) == (7, 22, 26, 42)
    assert round(row.new_raw, 4) == 27.8614
    # centre of degree 3 carrying one leaf and two vertices with three leaves each
    assert sorted(row.edges) == sorted(
        [(0, 1), (0, 5), (0, 9), (1, 2), (1, 3), (1, 4), (5, 6), (5, 7), (5, 8)])


def test_asymptotics_yoke_n12():
    (row,) = family_asymptotics("yoke-balanced", [12])
    assert row.zhou_luo == pytest.approx(math.sqrt(260), rel=1e-12)
    assert row.zl_closed == pytest.approx(math.sqrt(260), rel=1e-12)
    assert row.I == 4
    assert row.laplacian_new <= row.new_closed + 1e-12


def test_asymptotics_path_uses_closed_lambda():
    (row,) = family_asymptotics("path", [10])
    assert row.lambda_used == pytest.approx(2 * (1 + math.cos(math.pi / 10)), abs=1e-10)
    assert row.laplacian_new == pytest.approx(row.new_closed, abs=1e-6)


def test_asymptotics_closed_matches_computed():
    for fam, ns in (("path", [2, 3, 8, 40]), ("yoke-balanced", [6, 7, 30])):
        comp = family_asymptotics(fam, ns)
        closed = family_asymptotics(fam, ns, closed_form_only=True)
        for c, k in zip(comp, closed):
            assert (c.I, c.zhou_luo) == (k.I, pytest.approx(k.zhou_luo, rel=1e-12))
            assert c.laplacian_new <= k.laplacian_new + 1e-9


def test_asymptotics_yoke_scaling():
    small, big = family_asymptotics("yoke-balanced", [250, 1000], closed_form_only=True)
    assert big.laplacian_new / small.laplacian_new == pytest.approx(2, rel=0.05)
    assert big.zhou_luo / small.zhou_luo == pytest.approx(4, rel=0.05)


def test_asymptotics_yoke_gap_grows():
    rows = family_asymptotics("yoke-balanced", [12, 48, 192])
    for r in rows:
        gap = r.zhou_luo / r.laplacian_new
        assert gap == pytest.approx(math.sqrt(r.n / r.lambda_used), rel=1e-9)
        assert gap >= math.sqrt(3 * r.n / 16) * (1 - 0.05)
    gaps = [r.zhou_luo / r.laplacian_new for r in rows]
    assert gaps[0] < gaps[1] < gaps[2]


def test_asymptotics_errors():
    with pytest.raises(ParameterError):
        family_asymptotics("cycle", [10])
    with pytest.raises(ParameterError):
        family_asymptotics("yoke-balanced", [5])
    with pytest.raises(ParameterError):
        family_asymptotics("path", [1])
