import math

import numpy as np
import pytest

from susy_hbs.ansatz import eval_state, make_ansatz
from susy_hbs.errors import GridMismatch, InvalidParams
from susy_hbs.numerov import Grid, Potential, integrate
from susy_hbs.partner import build_pair


def free_sine_error(h):
    n = int(round(10.0 / h)) + 1
    g = Grid(0.0, 10.0, n if n % 2 else n + 1)
    wt = integrate(np.zeros(g.n_points), 1.0, "forward", 0.0, math.sin(g.h), grid=g)
    return np.abs(wt.values.real - np.sin(g.x)).max()


def test_grid_validation():
    with pytest.raises(InvalidParams):
        Grid(0, 1, 4)
    with pytest.raises(InvalidParams):
        Grid(0, 1, 1)
    assert Grid.symmetric(12, 4801).h == pytest.approx(0.005)
    assert Grid.with_step(-1, 1, 0.3).n_points % 2 == 1


def test_free_oscillation():
    assert free_sine_error(0.005) <= 1e-9


def test_free_growth():
    g = Grid(-5.0, 5.0, 2001)
    wt = integrate(np.zeros(g.n_points), -1.0, "forward", math.exp(g.x_min), math.exp(g.x_min + g.h), grid=g)
    assert np.abs(wt.values.real / np.exp(g.x) - 1).max() <= 1e-9


def test_backward_free_growth():
    g = Grid(-5.0, 5.0, 2001)
    wt = integrate(np.zeros(g.n_points), -1.0, "backward", math.exp(-g.x_max), math.exp(-g.x_max + g.h), grid=g)
    assert np.abs(wt.values.real / np.exp(-g.x) - 1).max() <= 1e-9


def test_fourth_order_convergence():
    e1, e2 = free_sine_error(0.02), free_sine_error(0.01)
    assert e1 / e2 >= 14.0


@pytest.mark.parametrize("family,offset", [("gaussian", 0.5), ("tanh", 2.0), ("xgauss", 2.0)])
def test_reproduces_seed_at_zero_energy(family, offset):
    ans = make_ansatz(family, offset)
    pair = build_pair(ans)
    psi = eval_state(ans, pair.x)[0]
    wt = integrate(pair.potential("minus"), 0.0, "forward", psi[0], psi[1])
    assert np.abs(wt.values.real / psi - 1).max() <= 1e-7


def test_linearity():
    g = Grid(-6, 6, 2401)
    v = -3 * np.exp(-g.x ** 2)
    a = integrate(v, 0.4, "forward", 0.3, 0.31, grid=g)
    # power-of-two factors scale exactly in floating point
    b = integrate(v, 0.4, "forward", 4 * 0.3, 4 * 0.31, grid=g)
    assert np.array_equal(b.values, 4 * a.values)
    c = integrate(v, 0.4, "forward", 2.5 * 0.3, 2.5 * 0.31, grid=g)
    assert np.abs(c.values - 2.5 * a.values).max() <= 1e-10 * np.abs(c.values).max()


def test_rescaling_keeps_shape():
    # with V = 0 and psi = (1, r) the recurrence gives exactly r**n
    g = Grid(-15.0, 15.0, 6001)
    k = 20.0
    h2f = -(k * g.h) ** 2
    c, d = 1 + h2f / 12, 1 - 5 * h2f / 12
    r = (d + math.sqrt(d * d - c * c)) / c
    wt = integrate(np.zeros(g.n_points), -k * k, "forward", 1.0, r, grid=g)
    assert wt.log_scale > math.log(1e100)
    assert np.all(np.isfinite(wt.values))
    n = np.arange(g.n_points)
    logpsi = np.log(np.abs(wt.values.real)) + wt.log_scale
    np.testing.assert_allclose(logpsi[1:], n[1:] * math.log(r), rtol=1e-12)


def test_complex_plane_wave():
    g = Grid(0.0, 10.0, 2001)
    k = 2.0
    wt = integrate(np.zeros(g.n_points), k * k, "forward", 1.0, np.exp(1j * k * g.h), grid=g)
    assert np.abs(wt.values - np.exp(1j * k * g.x)).max() <= 1e-8


def test_grid_mismatch():
    g = Grid(0, 1, 11)
    with pytest.raises(GridMismatch):
        integrate(np.zeros(12), 1.0, "forward", 0, 1, grid=g)
    with pytest.raises(GridMismatch):
        Potential(g, np.zeros(3))
    with pytest.raises(InvalidParams):
        integrate(np.zeros(11), 1.0, "sideways", 0, 1, grid=g)


def test_potential_resampling_without_function_pads_zero():
    g = Grid(-1, 1, 5)
    p = Potential(g, np.ones(5))
    big = p.on(Grid(-2, 2, 9))
    assert big.values.tolist() == [0, 0, 1, 1, 1, 1, 1, 0, 0]
