import numpy as np
import pytest

import oracles
from irrbound import generators
from irrbound.errors import CycleTooShortError, ParameterError, SizeTooSmallError
from irrbound.graph import degree_profile, irregularity, is_tree


def test_yoke_7_5():
    g = generators.yoke(7, 5)
    assert (g.n, g.m) == (12, 13)
    cubic = [v for v in range(g.n) if g.degree(v) == 3]
    assert len(cubic) == 2 and g.has_edge(*cubic)


def test_yoke_3_3_brute_force():
    g = generators.yoke(3, 3)
    assert (g.n, g.m) == (6, 7)
    assert oracles.irregularity_by_matrix(g.n, g.edges) == 4 == irregularity(g)


def test_yoke_closed_forms():
    for n1 in range(3, 21):
        for n2 in range(3, 21):
            g = generators.yoke(n1, n2)
            n = n1 + n2
            prof = degree_profile(g)
            assert (prof.m, prof.zagreb, irregularity(g)) == (n + 1, 4 * n + 10, 4)


@pytest.mark.parametrize("args", [(2, 5), (5, 2), (0, 0)])
def test_yoke_too_short(args):
    with pytest.raises(CycleTooShortError):
        generators.yoke(*args)


def test_path_10():
    prof = degree_profile(generators.path(10))
    assert (prof.m, prof.zagreb) == (9, 34)


def test_standard_families():
    assert irregularity(generators.complete(5)) == 0
    assert irregularity(generators.star(4)) == 6 == oracles.irregularity_by_matrix(
        4, generators.star(4).edges)
    assert generators.cycle(5).m == 5
    kb = generators.complete_bipartite(2, 3)
    assert kb.m == 6 and sorted(kb.degrees) == [2, 2, 2, 3, 3]
    assert generators.star(1).m == 0 and generators.path(1).m == 0
    assert is_tree(generators.star(7))


@pytest.mark.parametrize("fn,arg", [
    (generators.path, 0),
    (generators.star, 0),
    (generators.complete, 0),
])
def test_size_too_small(fn, arg):
    with pytest.raises(SizeTooSmallError):
        fn(arg)


def test_cycle_and_bipartite_limits():
    with pytest.raises(CycleTooShortError):
        generators.cycle(2)
    with pytest.raises(SizeTooSmallError):
        generators.complete_bipartite(0, 3)


def test_splitmix64_reference_stream():
    # published first outputs of SplitMix64 seeded with 0
    assert [int(x) for x in generators.splitmix64(0, 3)] == [
        0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]


def test_splitmix64_random_access():
    full = generators.splitmix64(123, 10)
    assert (generators.splitmix64(123, 4, start=6) == full[6:]).all()


def test_splitmix64_negative_seed_wraps():
    assert (generators.splitmix64(-1, 3) == generators.splitmix64(2**64 - 1, 3)).all()


def test_uniform_range():
    u = generators.uniform01(5, 10_000)
    assert u.min() >= 0 and u.max() < 1
    assert abs(u.mean() - 0.5) < 0.02


def test_random_graph_extremes():
    assert generators.random_graph(12, 0.0, 3).m == 0
    assert generators.random_graph(12, 1.0, 3) == generators.complete(12)
    assert generators.random_graph(0, 0.5, 1).n == 0


def test_random_graph_anchor():
    g = generators.random_graph(20, 0.3, 42)
    assert g.m == 58
    assert g.edges[:5] == ((0, 2), (0, 3), (0, 5), (0, 7), (0, 11))


def test_random_graph_reproducible():
    assert generators.random_graph(30, 0.5, 9) == generators.random_graph(30, 0.5, 9)
    assert generators.random_graph(30, 0.5, 9) != generators.random_graph(30, 0.5, 10)


def test_random_graph_density():
    g = generators.random_graph(200, 0.3, 1)
    assert g.m / (200 * 199 / 2) == pytest.approx(0.3, abs=0.02)


def test_random_graph_bad_probability():
    with pytest.raises(ParameterError):
        generators.random_graph(5, 1.5, 0)


def test_family_generators_are_deterministic():
    for fn in (generators.path, generators.star, generators.complete):
        assert fn(9) == fn(9)
    assert np.array_equal(generators.uniform01(1, 5), generators.uniform01(1, 5))
