import json
import math

import numpy as np
import pytest

from gaussent.epr import epr_from_photons
from gaussent.photons import insep_from_nmin
from gaussent.protocols import (
    NO_CLONING_FIDELITY,
    ChannelSpec,
    ContourGrid,
    capacity_ratio,
    contour_grid,
    dense_coding_capacity,
    exceeds_no_cloning_limit,
    maximize_squeezed_capacity,
    optimal_squeezed_capacity,
    shannon_capacity,
    squeezed_channel_capacity,
    squeezing_photons,
    teleport_fidelity,
)


class TestTeleportFidelity:
    def test_no_entanglement_bound(self):
        assert teleport_fidelity(1.0) == 0.5

    def test_anchor_strength(self):
        assert teleport_fidelity(0.44) == pytest.approx(1.0 / 1.44, abs=1e-12)
        assert teleport_fidelity(0.44) == pytest.approx(0.6944, abs=1e-4)

    def test_perfect_entanglement_limit(self):
        assert teleport_fidelity(1e-12) == pytest.approx(1.0, abs=1e-9)

    def test_strictly_decreasing(self):
        grid = np.linspace(0.01, 1.0, 50)
        values = [teleport_fidelity(float(i)) for i in grid]
        assert all(b < a for a, b in zip(values, values[1:]))

    def test_no_cloning_flag(self):
        assert exceeds_no_cloning_limit(teleport_fidelity(0.44))
        assert not exceeds_no_cloning_limit(teleport_fidelity(0.6))
        assert NO_CLONING_FIDELITY == pytest.approx(2.0 / 3.0)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            teleport_fidelity(0.0)


class TestShannonCapacity:
    def test_reference_points(self):
        assert shannon_capacity(0.0) == 0.0
        assert shannon_capacity(3.0) == pytest.approx(1.0, abs=1e-15)
        assert shannon_capacity(255.0) == pytest.approx(4.0, abs=1e-12)

    def test_rejects_negative_snr(self):
        with pytest.raises(ValueError):
            shannon_capacity(-1.0)


class TestSqueezedChannel:
    def test_coherent_state_channel(self):
        # No squeezing: all 3.375 photons encode signal at vacuum noise.
        assert squeezed_channel_capacity(3.375, 1.0) == pytest.approx(
            0.5 * math.log2(14.5), abs=1e-12
        )

    def test_optimum_variance_reproduces_closed_form(self):
        for n in (0.5, 3.375, 125.0):
            v_opt = 1.0 / (2.0 * n + 1.0)
            assert squeezed_channel_capacity(n, v_opt) == pytest.approx(
                optimal_squeezed_capacity(n), abs=1e-12
            )

    def test_budget_exhausted_by_squeezing(self):
        v = 0.25
        n_sqz = squeezing_photons(v)
        assert squeezed_channel_capacity(n_sqz, v) == 0.0
        with pytest.raises(ValueError, match="budget"):
            squeezed_channel_capacity(0.9 * n_sqz, v)

    def test_rejects_antisqueezed_noise(self):
        with pytest.raises(ValueError):
            squeezed_channel_capacity(1.0, 1.5)


class TestOptimalSqueezedCapacity:
    def test_reference_values(self):
        assert optimal_squeezed_capacity(0.0) == 0.0
        assert optimal_squeezed_capacity(3.375) == pytest.approx(
            math.log2(7.75), abs=1e-12
        )
        assert optimal_squeezed_capacity(3.375) == pytest.approx(2.954, abs=1e-3)
        assert optimal_squeezed_capacity(125.0) == pytest.approx(
            math.log2(251.0), abs=1e-12
        )
        assert optimal_squeezed_capacity(125.0) == pytest.approx(7.972, abs=1e-3)

    def test_matches_numeric_maximization(self):
        for n in (0.5, 3.375, 125.0):
            numeric, v_opt = maximize_squeezed_capacity(n)
            assert abs(numeric - optimal_squeezed_capacity(n)) <= 1e-6
            assert v_opt == pytest.approx(1.0 / (2.0 * n + 1.0), rel=1e-4)


class TestDenseCoding:
    def test_anchor_budget(self):
        value = dense_coding_capacity(125.0, 0.356, 1.944)
        noise = insep_from_nmin(0.356)
        assert value == pytest.approx(math.log2(1.0 + 123.85 / noise), abs=1e-12)
        assert value == pytest.approx(8.14, abs=5e-3)

    def test_no_signal_photons(self):
        assert dense_coding_capacity(1.15, 0.356, 1.944) == 0.0

    def test_budget_below_state_cost(self):
        with pytest.raises(ValueError, match="budget"):
            dense_coding_capacity(1.0, 0.356, 1.944)

    def test_decreasing_in_excess(self):
        values = [dense_coding_capacity(10.0, 0.356, e) for e in np.linspace(0, 4, 9)]
        assert all(b < a for a, b in zip(values, values[1:]))

    def test_increasing_in_budget(self):
        values = [dense_coding_capacity(n, 0.356, 1.944) for n in (2, 5, 20, 100)]
        assert all(b > a for a, b in zip(values, values[1:]))


class TestCapacityRatio:
    def test_anchor_budget(self):
        assert capacity_ratio(125.0, 0.356, 1.944) == pytest.approx(1.02, abs=5e-3)

    def test_no_entanglement_penalty(self):
        for n in (1.0, 10.0, 100.0):
            expected = math.log2(1.0 + n) / math.log2(1.0 + 2.0 * n)
            assert capacity_ratio(n, 0.0, 0.0) == pytest.approx(expected, abs=1e-12)
            assert capacity_ratio(n, 0.0, 0.0) < 1.0

    def test_small_budget_penalized_by_excess(self):
        ratios = [capacity_ratio(3.375, 0.356, e) for e in np.linspace(0.0, 4.0, 9)]
        assert all(b < a for a, b in zip(ratios, ratios[1:]))

    def test_large_budget_insensitive_to_excess(self):
        for n_min in (0.1, 0.356, 1.0):
            low = capacity_ratio(1e6, n_min, 0.0)
            high = capacity_ratio(1e6, n_min, 10.0)
            assert abs(low - high) < 1e-3


class TestChannelSpec:
    def test_snr(self):
        channel = ChannelSpec(signal_var=3.0, noise_var=0.5, n_encoding=1.0)
        assert channel.snr == 6.0

    def test_rejects_negative_fields(self):
        with pytest.raises(ValueError):
            ChannelSpec(signal_var=-1.0, noise_var=0.5, n_encoding=1.0)


class TestContourGrid:
    def test_epr_grid_node(self):
        grid = contour_grid("epr", (0.0, 3.56), (0.0, 19.44), resolution=11)
        assert grid.nmin_axis[1] == pytest.approx(0.356, abs=1e-12)
        assert grid.nexcess_axis[1] == pytest.approx(1.944, abs=1e-12)
        assert grid.values[1, 1] == pytest.approx(
            epr_from_photons(grid.nmin_axis[1], grid.nexcess_axis[1]), abs=1e-12
        )

    def test_fidelity_contours_are_vertical(self):
        grid = contour_grid("fidelity", resolution=16)
        for i in range(grid.values.shape[0]):
            assert np.all(grid.values[i, :] == grid.values[i, 0])
        assert grid.values[0, 0] == pytest.approx(0.5, abs=1e-12)

    def test_dense_ratio_node(self):
        grid = contour_grid(
            "dense_ratio", (0.0, 3.56), (0.0, 19.44), resolution=11,
            params={"n_encoding": 125.0},
        )
        assert grid.values[1, 1] == pytest.approx(
            capacity_ratio(125.0, 0.356, 1.944), rel=1e-9
        )

    def test_dense_ratio_infeasible_nodes_are_nan(self):
        grid = contour_grid(
            "dense_ratio", (0.0, 3.0), (0.0, 4.0), resolution=5,
            params={"n_encoding": 1.0},
        )
        assert np.isnan(grid.values[-1, -1])  # n_total/2 = 3.5 > 1
        assert np.isfinite(grid.values[0, 0])

    def test_dense_ratio_requires_budget_parameter(self):
        with pytest.raises(ValueError, match="n_encoding"):
            contour_grid("dense_ratio")

    def test_unknown_metric_rejected(self):
        with pytest.raises(ValueError, match="metric"):
            contour_grid("teleport_rate")

    def test_default_grid_shape(self):
        grid = contour_grid("fidelity")
        assert grid.values.shape == (200, 200)
        assert grid.nmin_axis[0] == 0.0
        assert grid.nmin_axis[-1] == 3.0
        assert grid.nexcess_axis[-1] == 4.0

    def test_axes_must_increase(self):
        with pytest.raises(ValueError):
            ContourGrid(
                metric="epr",
                nmin_axis=np.array([0.0, 0.0]),
                nexcess_axis=np.array([0.0, 1.0]),
                values=np.zeros((2, 2)),
            )

    def test_csv_round_trip(self):
        grid = contour_grid("epr", (0.0, 1.0), (0.0, 1.0), resolution=3)
        lines = grid.to_csv_text().strip().split("\n")
        assert lines[0] == "n_min,n_excess,value"
        assert len(lines) == 1 + 9
        nm, ne, value = (float(cell) for cell in lines[4].split(","))
        assert value == pytest.approx(epr_from_photons(nm, ne), abs=1e-15)

    def test_json_round_trip(self):
        grid = contour_grid(
            "dense_ratio", (0.0, 1.0), (0.0, 1.0), resolution=3,
            params={"n_encoding": 2.0},
        )
        data = json.loads(json.dumps(grid.to_json_dict()))
        assert data["metric"] == "dense_ratio"
        assert data["params"] == {"n_encoding": 2.0}
        assert np.allclose(np.array(data["values"]), grid.values)
