import math

import numpy as np
import pytest

import lorentz_nets as ln


def test_grid_fixture_shapes_and_residuals():
    cc = ln.generate_grid(7, 5)
    assert (cc.width, cc.height) == (7, 5)
    assert cc.spheres.shape == (5, 7, 4)
    assert cc.isolines.shape == (4, 6, 10)
    assert ln.contact_residual(cc) < 1e-12
    assert ln.isothermic_residual(cc) < 1e-12


def test_arrays_rebuild_the_congruence():
    cc = ln.generate_isothermic(9, 9, 3)
    again = ln.ContactCongruence(cc.spheres, cc.isolines)
    assert np.array_equal(again.spheres, cc.spheres)
    refit = ln.ContactCongruence(cc.spheres)
    assert ln.contact_residual(refit) < 1e-9


def test_lift_round_trip():
    cc = ln.random_null_congruence(7, 7, 2)
    pattern = ln.project_circle_pattern(cc)
    assert ln.circle_pattern_residual(pattern) < 1e-9
    lifted = ln.lorentz_lift(pattern, face=(2, 3), height=0.1)
    back = ln.project_circle_pattern(lifted)
    assert np.allclose(back.circles, pattern.circles, atol=1e-9)
    assert np.allclose(back.points, pattern.points, atol=1e-9)


def test_null_lift_of_the_incircular_net():
    cc = ln.generate_isothermic(7, 7, 1)
    inc = ln.incircular_from_packing(ln.project_circle_pattern(cc))
    assert ln.incircular_residual(inc) < 1e-9
    lifted = ln.null_lift(inc)
    assert ln.contact_residual(lifted) < 1e-9
    assert np.abs(lifted.spheres[0, 0::2, 3]).max() < 1e-9  # black spheres are points


def test_black_sweep_is_an_involution():
    cc = ln.generate_isothermic(9, 9, 4)
    twice = ln.sweep_black(ln.sweep_black(cc))
    assert np.allclose(twice.spheres, ln.crop(cc, 2).spheres, atol=1e-9)


def test_x_variables_agree():
    cc = ln.generate_isothermic(9, 9, 2)
    plane = ln.x_vars(ln.projected_centers(cc))
    cyclo = ln.x_vars_cyclo(cc)
    null = ln.x_vars_null(cc)
    both = ~np.isnan(plane) & ~np.isnan(null)
    assert both.sum() > 0
    assert np.allclose(plane[both], null[both], rtol=1e-9)
    assert np.allclose(plane[~np.isnan(cyclo)], cyclo[~np.isnan(cyclo)], rtol=1e-9)
    assert np.nanmax(np.abs(ln.ising_residual(plane))) < 1e-9


def test_grid_has_unit_x_and_conformal_x():
    cc = ln.generate_grid(7, 7)
    x = ln.x_vars(ln.projected_centers(cc))
    assert np.nanmax(np.abs(x - 1.0)) < 1e-12
    c = ln.conformal_x(cc)
    assert np.isfinite(c).sum() > 0
    assert np.nanmax(np.abs(c - 1.0)) < 1e-12


def test_miquel_updates_are_inverse():
    net = ln.random_conical_net(9, 9, 7, jitter=0.05)
    x = ln.x_vars(net)
    y = ln.miq_update_black(ln.miq_update_black(x))
    keep = ~np.isnan(y)
    assert keep.sum() > 0
    assert np.allclose(y[keep], x[keep], rtol=1e-12)


def test_json_round_trip(tmp_path):
    cc = ln.generate_isothermic(6, 5, 3)
    back = ln.from_json(ln.to_json(cc))
    assert isinstance(back, ln.ContactCongruence)
    assert np.array_equal(back.spheres, cc.spheres)
    path = str(tmp_path / "x.json")
    field = ln.ScalarField(ln.x_vars(ln.projected_centers(cc)), "plane")
    ln.save(field, path)
    loaded = ln.load(path)
    assert loaded.label == "plane"
    assert np.array_equal(np.isnan(loaded.values), np.isnan(field.values))


def test_errors_carry_their_kind():
    with pytest.raises(ln.LnetError) as info:
        ln.from_json("{not json")
    assert info.value.kind == "ParseError"
    assert isinstance(info.value, ValueError)
    with pytest.raises(ValueError):
        ln.ContactCongruence(np.zeros((3, 3)))


def test_render_svg():
    pattern = ln.project_circle_pattern(ln.generate_grid(4, 4))
    svg = ln.render_svg(pattern, width=300)
    assert svg.startswith("<?xml")
    assert svg.count('class="circle"') == 16
    net = ln.ConicalNet(pattern.circles[:, :, :2])
    assert math.isclose(ln.x_vars(net)[1, 1], 1.0)
