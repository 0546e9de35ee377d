import math

import numpy as np
import pytest

from susy_hbs.ansatz import make_ansatz
from susy_hbs.errors import DomainError, NodeDetected, NonPositiveScale
from susy_hbs.numerov import DEFAULT_GRID, Grid
from susy_hbs.partner import (build_pair, mirror_point, mirror_residual, scale,
                              tanh_closed_form, zero_energy_residual)

ALL_SEEDS = [("gaussian", 0.5), ("gaussian", 1.0), ("gaussian", -2.0),
             ("tanh", 2.0), ("erf", 2.0), ("xgauss", 2.0), ("tanh", -3.0), ("erf", -1.5)]


def test_gaussian_values_at_origin(gauss_pairs):
    pair = gauss_pairs[0.5]
    i = DEFAULT_GRID.n_points // 2
    assert pair.x[i] == 0.0
    # W(0) = 0 and W'(0) = 2/(A + 1)
    assert pair.v_minus[i] == pytest.approx(-4.0 / 3.0, rel=1e-14)
    assert pair.v_plus[i] == pytest.approx(4.0 / 3.0, rel=1e-14)


def test_tanh_vminus_vanishes_at_origin():
    pair = build_pair(make_ansatz("tanh", 2.0))
    assert pair.v_minus[DEFAULT_GRID.n_points // 2] == pytest.approx(0.0, abs=1e-15)


def test_constant_seed_gives_zero_partners():
    pair = build_pair(make_ansatz("constant", 1.0))
    assert not pair.v_minus.any() and not pair.v_plus.any()


@pytest.mark.parametrize("family,offset", ALL_SEEDS)
def test_pair_invariants(family, offset):
    pair = build_pair(make_ansatz(family, offset))
    assert np.abs(pair.v_plus - pair.v_minus - 2 * pair.w_prime).max() <= 1e-14
    assert np.array_equal(pair.v_minus, pair.w ** 2 - pair.w_prime)
    assert np.array_equal(pair.v_plus, pair.w ** 2 + pair.w_prime)
    for v in (pair.v_minus, pair.v_plus):
        assert max(abs(v[0]), abs(v[-1])) <= 1e-8


@pytest.mark.parametrize("family,offset", ALL_SEEDS)
def test_seed_is_zero_energy_solution_of_vminus(family, offset):
    assert zero_energy_residual(build_pair(make_ansatz(family, offset))) <= 1e-10


@pytest.mark.parametrize("offset", [0.5, 1.0, -2.0, 3.0])
def test_even_seed_gives_even_partners(offset):
    pair = build_pair(make_ansatz("gaussian", offset))
    assert np.abs(pair.w + pair.w[::-1]).max() <= 1e-12
    assert np.abs(pair.v_minus - pair.v_minus[::-1]).max() <= 1e-12
    assert np.abs(pair.v_plus - pair.v_plus[::-1]).max() <= 1e-12


def test_tanh_closed_form_special_points():
    g = mirror_point(2.0)
    vm0, _ = tanh_closed_form(2.0, 0.0)
    _, vpg = tanh_closed_form(2.0, g)
    assert vm0 == 0.0
    assert vpg == pytest.approx(0.0, abs=1e-15)


@pytest.mark.parametrize("offset", [2.0, -2.0, 1.2, 5.0])
def test_tanh_closed_form_matches_construction(offset):
    pair = build_pair(make_ansatz("tanh", offset))
    vm, vp = tanh_closed_form(offset, pair.x)
    assert np.abs(vm - pair.v_minus).max() <= 1e-12
    assert np.abs(vp - pair.v_plus).max() <= 1e-12
    i = np.searchsorted(pair.x, 1.0)
    assert pair.x[i] == pytest.approx(1.0)
    assert tanh_closed_form(offset, 1.0)[0] == pytest.approx(pair.v_minus[i], abs=1e-12)


def test_tanh_closed_form_rejects_small_offset():
    with pytest.raises(NodeDetected):
        tanh_closed_form(0.9, 0.0)


def test_mirror_point_values():
    assert mirror_point(2.0) == pytest.approx(0.5 * math.log(1.0 / 3.0), rel=1e-15)
    assert mirror_point(2.0) == pytest.approx(-0.549306, abs=1e-6)
    assert mirror_point(-2.0) == pytest.approx(0.549306, abs=1e-6)
    assert abs(mirror_point(1e8)) < 1e-7
    assert mirror_point(math.inf) == 0.0
    with pytest.raises(DomainError):
        mirror_point(1.0)


@pytest.mark.parametrize("offset", [2.0, -2.0, 1.5, 4.0])
def test_mirror_identity(offset):
    pair = build_pair(make_ansatz("tanh", offset))
    assert mirror_residual(pair) <= 1e-10


def test_mirror_identity_exact_closed_form():
    g = mirror_point(2.0)
    x = np.linspace(-8, 8, 1001)
    vm, _ = tanh_closed_form(2.0, x)
    _, vp = tanh_closed_form(2.0, g - x)
    assert np.abs(vp - vm).max() <= 1e-14


def test_scale(gauss_pairs):
    pair = gauss_pairs[0.5]
    assert np.array_equal(scale(pair, "plus", 1.0).values, pair.v_plus)
    s2 = scale(pair, "minus", 2.0)
    assert np.array_equal(s2.values, 2.0 * pair.v_minus)
    assert s2.c == 2.0 and s2.side == "minus"
    for bad in (0.0, -1.0):
        with pytest.raises(NonPositiveScale):
            scale(pair, "plus", bad)


def test_scaled_potential_resamples_analytically(gauss_pairs):
    s = scale(gauss_pairs[0.5], "plus", 1.1)
    g = Grid.symmetric(30.0, 6001)
    assert np.abs(s.potential.on(g).values - 1.1 * gauss_pairs[0.5].potential("plus").func(g.x)).max() == 0.0


def test_columns_order(gauss_pairs):
    assert list(gauss_pairs[1.0].columns()) == ["x", "W", "Wprime", "Vminus", "Vplus"]
