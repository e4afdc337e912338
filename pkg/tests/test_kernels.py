"""Backend parity: the compiled kernels must match the pure ones bit for bit."""

import numpy as np
import pytest

from conftest import rand_instance

from tspkit import kernels
from tspkit.kernels import pure
from tspkit.solvers.base import make_rng

compiled = kernels.available_backends().get("compiled")
needs_compiled = pytest.mark.skipif(compiled is None, reason="compiled kernels not built")


def _case(n: int, seed: int):
    inst = rand_instance(n, seed)
    rng = make_rng(seed + 1)
    order = rng.permutation(n).astype(np.int64)
    return inst, order


@needs_compiled
@pytest.mark.parametrize("n,seed", [(5, 0), (9, 1), (17, 2), (40, 3)])
def test_tour_length_bit_identical(n, seed):
    inst, order = _case(n, seed)
    D = inst.distance_matrix()
    assert pure.tour_length(inst.coords, order, D) == compiled.tour_length(inst.coords, order, D)
    assert pure.tour_length(inst.coords, order, None) == compiled.tour_length(inst.coords, order, None)


@needs_compiled
def test_batch_lengths_bit_identical():
    inst, _ = _case(23, 5)
    rng = make_rng(99)
    orders = np.stack([rng.permutation(23).astype(np.int64) for _ in range(40)])
    D = inst.distance_matrix()
    assert np.array_equal(
        pure.batch_tour_lengths(inst.coords, orders, D),
        compiled.batch_tour_lengths(inst.coords, orders, D),
    )
    assert np.array_equal(
        pure.batch_tour_lengths(inst.coords, orders, None),
        compiled.batch_tour_lengths(inst.coords, orders, None),
    )


@needs_compiled
@pytest.mark.parametrize("first", [True, False])
@pytest.mark.parametrize("n,seed", [(6, 0), (12, 7), (30, 8), (64, 9)])
def test_two_opt_identical_tours(n, seed, first):
    inst, order = _case(n, seed)
    D = inst.distance_matrix()
    t_pure, p_pure = pure.two_opt(inst.coords, order, D, first_improvement=first)
    t_comp, p_comp = compiled.two_opt(inst.coords, order, D, first_improvement=first)
    assert np.array_equal(t_pure, t_comp)
    assert p_pure == p_comp


@needs_compiled
def test_two_opt_coords_path_matches_matrix_path():
    inst, order = _case(24, 11)
    D = inst.distance_matrix()
    via_matrix, _ = compiled.two_opt(inst.coords, order, D)
    via_coords, _ = compiled.two_opt(inst.coords, order, None)
    assert np.array_equal(via_matrix, via_coords)
    pure_coords, _ = pure.two_opt(inst.coords, order, None)
    assert np.array_equal(pure_coords, via_coords)


@needs_compiled
@pytest.mark.parametrize("n,seed", [(5, 2), (7, 3), (8, 4), (9, 5)])
def test_exact_search_identical(n, seed):
    inst, _ = _case(n, seed)
    D = inst.distance_matrix()
    order_p, len_p = pure.exact_search(inst.coords, D)
    order_c, len_c = compiled.exact_search(inst.coords, D)
    assert np.array_equal(order_p, order_c)
    assert len_p == len_c


@needs_compiled
@pytest.mark.parametrize("n,seed", [(8, 1), (25, 2), (80, 3)])
def test_greedy_scan_identical(n, seed):
    from tspkit.solvers.greedy import _sorted_edges

    inst, _ = _case(n, seed)
    u, v = _sorted_edges(inst.coords)
    assert np.array_equal(pure.greedy_scan(u, v, n), compiled.greedy_scan(u, v, n))


def test_backend_module_reports_name():
    assert kernels.BACKEND in ("pure", "compiled")
    assert pure.NAME == "pure"
    assert "pure" in kernels.available_backends()
