"""Protocol efficacy predictions on the photon-number diagram.

Unity-gain coherent-state teleportation fidelity, Shannon capacities of
squeezed-state and entanglement-based dense-coding channels at a fixed
photon budget, and dense efficacy grids over the (n_min, n_excess) plane
of the photon-number diagram.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize_scalar

from .epr import epr_from_photons
from .photons import insep_from_nmin

#: Fidelity above which a teleporter beats the no-cloning bound.
NO_CLONING_FIDELITY = 2.0 / 3.0

GRID_METRICS = ("epr", "fidelity", "dense_ratio")


@dataclass(frozen=True)
class ChannelSpec:
    """Signal/noise variances and photon budget of one Gaussian channel."""

    signal_var: float
    noise_var: float
    n_encoding: float

    def __post_init__(self) -> None:
        if self.signal_var < 0.0 or self.noise_var < 0.0 or self.n_encoding < 0.0:
            raise ValueError("channel variances and photon budget must be non-negative")

    @property
    def snr(self) -> float:
        return self.signal_var / self.noise_var


@dataclass(frozen=True)
class ContourGrid:
    """Dense table of one efficacy metric over the (n_min, n_excess) plane."""

    metric: str
    nmin_axis: np.ndarray
    nexcess_axis: np.ndarray
    values: np.ndarray
    params: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        nmin = np.asarray(self.nmin_axis, dtype=float)
        nexcess = np.asarray(self.nexcess_axis, dtype=float)
        values = np.asarray(self.values, dtype=float)
        if values.shape != (nmin.size, nexcess.size):
            raise ValueError(
                f"values shape {values.shape} does not match axes "
                f"({nmin.size}, {nexcess.size})"
            )
        if np.any(np.diff(nmin) <= 0.0) or np.any(np.diff(nexcess) <= 0.0):
            raise ValueError("grid axes must be strictly increasing")
        for arr in (nmin, nexcess, values):
            arr.setflags(write=False)
        object.__setattr__(self, "nmin_axis", nmin)
        object.__setattr__(self, "nexcess_axis", nexcess)
        object.__setattr__(self, "values", values)

    def to_csv_text(self) -> str:
        lines = ["n_min,n_excess,value"]
        for i, nm in enumerate(self.nmin_axis.tolist()):
            for j, ne in enumerate(self.nexcess_axis.tolist()):
                lines.append(f"{nm!r},{ne!r},{float(self.values[i, j])!r}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "metric": self.metric,
            "params": dict(self.params),
            "nmin_axis": self.nmin_axis.tolist(),
            "nexcess_axis": self.nexcess_axis.tolist(),
            "values": self.values.tolist(),
        }


def teleport_fidelity(insep: float) -> float:
    """Unity-gain coherent-state teleportation fidelity, F = 1/(1 + I).

    Depends only on the degree of inseparability, so efficacy contours on
    the photon-number diagram are vertical.  F = 0.5 without entanglement;
    values above :data:`NO_CLONING_FIDELITY` beat the no-cloning bound.
    """
    if insep <= 0.0:
        raise ValueError(f"degree of inseparability must be positive, got {insep}")
    return 1.0 / (1.0 + insep)


def exceeds_no_cloning_limit(fidelity: float) -> bool:
    return fidelity > NO_CLONING_FIDELITY


def shannon_capacity(snr: float) -> float:
    """Shannon capacity of one Gaussian channel, log2(1 + R)/2 bits per symbol."""
    if snr < 0.0:
        raise ValueError(f"signal-to-noise ratio must be non-negative, got {snr}")
    return 0.5 * math.log2(1.0 + snr)


def squeezing_photons(v_sqz: float) -> float:
    """Photons spent to hold a pure squeezed state at variance ``v_sqz``."""
    if v_sqz <= 0.0:
        raise ValueError(f"squeezed variance must be positive, got {v_sqz}")
    return 0.25 * (v_sqz + 1.0 / v_sqz - 2.0)


def squeezed_channel_capacity(n_encoding: float, v_sqz: float) -> float:
    """Capacity of a squeezed-state channel at a fixed photon budget.

    ``n_encoding`` photons are split between holding the squeezing and
    encoding signal on the squeezed quadrature; the signal variance is
    4 (n_encoding - n_sqz) against noise ``v_sqz``.

    Raises:
        ValueError: if the budget does not cover the squeezing photons, or
            if ``v_sqz`` lies outside (0, 1].
    """
    if not 0.0 < v_sqz <= 1.0:
        raise ValueError(f"squeezed variance must lie in (0, 1], got {v_sqz}")
    n_sqz = squeezing_photons(v_sqz)
    if n_encoding < n_sqz:
        raise ValueError(
            f"photon budget {n_encoding} is below the {n_sqz:.6g} needed for squeezing"
        )
    channel = ChannelSpec(
        signal_var=4.0 * (n_encoding - n_sqz), noise_var=v_sqz, n_encoding=n_encoding
    )
    return shannon_capacity(channel.snr)


def optimal_squeezed_capacity(n_encoding: float) -> float:
    """Squeezed-state capacity optimized over the squeezing level.

    The optimum sits at v = 1/(2 n + 1) and equals log2(1 + 2 n).
    """
    if n_encoding < 0.0:
        raise ValueError(f"photon budget must be non-negative, got {n_encoding}")
    return math.log2(1.0 + 2.0 * n_encoding)


def maximize_squeezed_capacity(n_encoding: float) -> tuple[float, float]:
    """Numerically maximize the squeezed-state capacity over the squeezing level.

    Returns (capacity, optimal variance); used as a cross-check of
    :func:`optimal_squeezed_capacity`.
    """
    if n_encoding <= 0.0:
        return 0.0, 1.0

    # Smallest variance the budget can hold; capacity is zero there.
    t = 4.0 * n_encoding + 2.0
    v_floor = 2.0 / (t + math.sqrt(t * t - 4.0))

    def negated(v: float) -> float:
        try:
            return -squeezed_channel_capacity(n_encoding, v)
        except ValueError:
            # Rounding can push the boundary a hair past the budget.
            return 0.0

    result = minimize_scalar(
        negated, bounds=(v_floor, 1.0), method="bounded", options={"xatol": 1e-12}
    )
    return -float(result.fun), float(result.x)


def dense_coding_capacity(n_encoding: float, n_min: float, n_excess: float) -> float:
    """Capacity of dense coding over a symmetric unbiased entangled state.

    The amplitude and phase quadratures act as independent channels whose
    noise is the degree of inseparability; half the state's photons sit in
    the encoded beam, leaving n_encoding - (n_min + n_excess)/2 photons of
    signal shared across the two quadratures.

    Raises:
        ValueError: if the budget does not cover the entangled state.
    """
    if n_min < 0.0 or n_excess < 0.0:
        raise ValueError("photon numbers must be non-negative")
    n_total = n_min + n_excess
    if n_encoding < 0.5 * n_total:
        raise ValueError(
            f"photon budget {n_encoding} is below the {0.5 * n_total:.6g} needed "
            "for the entangled state"
        )
    signal = n_encoding - 0.5 * n_total
    noise = insep_from_nmin(n_min)
    return math.log2(1.0 + signal / noise)


def capacity_ratio(n_encoding: float, n_min: float, n_excess: float) -> float:
    """Dense-coding capacity over the optimal squeezed-state capacity."""
    optimum = optimal_squeezed_capacity(n_encoding)
    if optimum == 0.0:
        raise ValueError("capacity ratio undefined at zero photon budget")
    return dense_coding_capacity(n_encoding, n_min, n_excess) / optimum


def contour_grid(
    metric: str,
    nmin_range: tuple[float, float] = (0.0, 3.0),
    nexcess_range: tuple[float, float] = (0.0, 4.0),
    resolution: int = 200,
    params: dict | None = None,
) -> ContourGrid:
    """Evaluate an efficacy metric over a dense (n_min, n_excess) grid.

    The grid lives on the zero-bias plane of the photon-number diagram.
    ``values[i, j]`` is the metric at (nmin_axis[i], nexcess_axis[j]).
    For ``dense_ratio``, ``params`` must carry ``n_encoding``; grid nodes
    whose state exceeds the photon budget evaluate to NaN.

    Raises:
        ValueError: for an unknown metric token, bad ranges/resolution, or
            missing metric parameters.
    """
    if metric not in GRID_METRICS:
        raise ValueError(f"unknown metric {metric!r}; expected one of {GRID_METRICS}")
    if resolution < 2:
        raise ValueError(f"resolution must be at least 2, got {resolution}")
    for name, (lo, hi) in (("nmin_range", nmin_range), ("nexcess_range", nexcess_range)):
        if lo < 0.0 or hi <= lo:
            raise ValueError(f"{name} must be non-negative and increasing, got ({lo}, {hi})")
    params = dict(params or {})

    nmin_axis = np.linspace(nmin_range[0], nmin_range[1], resolution)
    nexcess_axis = np.linspace(nexcess_range[0], nexcess_range[1], resolution)
    nm, ne = np.meshgrid(nmin_axis, nexcess_axis, indexing="ij")

    if metric == "epr":
        values = epr_from_photons(nm, ne)
        params = {}
    elif metric == "fidelity":
        # Constant along the excess axis: vertical efficacy contours.
        values = 1.0 / (1.0 + insep_from_nmin(nm))
        params = {}
    else:
        if "n_encoding" not in params:
            raise ValueError("dense_ratio grids need params={'n_encoding': ...}")
        n_encoding = float(params["n_encoding"])
        if n_encoding <= 0.0:
            raise ValueError(f"n_encoding must be positive, got {n_encoding}")
        params = {"n_encoding": n_encoding}
        signal = n_encoding - 0.5 * (nm + ne)
        noise = insep_from_nmin(nm)
        optimum = math.log2(1.0 + 2.0 * n_encoding)
        with np.errstate(invalid="ignore", divide="ignore"):
            values = np.where(
                signal >= 0.0, np.log2(1.0 + signal / noise) / optimum, np.nan
            )

    return ContourGrid(
        metric=metric,
        nmin_axis=nmin_axis,
        nexcess_axis=nexcess_axis,
        values=values,
        params=params,
    )
