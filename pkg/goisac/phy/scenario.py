from dataclasses import dataclass

import numpy as np

from goisac.utils.exceptions import SingularGeometry

SPEED_OF_LIGHT = 299_792_458.0


@dataclass
class Scenario:
    """Deployment geometry of the cell-free network

    Args:
        ap_antenna_positions: L x M x 2 antenna positions in metres (B_l)
        carrier_wavelength: lambda in metres
        side: Side of the square deployment area [0, side]^2 in metres
        lightspeed: c in m/s
    """

    ap_antenna_positions: np.ndarray
    carrier_wavelength: float
    side: float
    lightspeed: float = SPEED_OF_LIGHT

    def __post_init__(self):
        self.ap_antenna_positions = np.asarray(self.ap_antenna_positions, dtype=float)
        assert self.ap_antenna_positions.ndim == 3
        assert self.ap_antenna_positions.shape[2] == 2
        if self.carrier_wavelength <= 0 or self.side <= 0:
            raise ValueError("wavelength and side must be positive")

        if self.num_antennas > 1:
            spacing = np.linalg.norm(
                np.diff(self.ap_antenna_positions, axis=1), axis=-1
            )
            if not np.allclose(spacing, self.carrier_wavelength / 2, rtol=1e-9):
                raise ValueError("antenna spacing within each ULA must be lambda/2")

    @property
    def num_aps(self) -> int:
        return self.ap_antenna_positions.shape[0]

    @property
    def num_antennas(self) -> int:
        return self.ap_antenna_positions.shape[1]

    @property
    def ap_centers(self) -> np.ndarray:
        """L x 2 array centres, b_l = row mean of B_l"""
        return self.ap_antenna_positions.mean(axis=1)

    @property
    def center(self) -> np.ndarray:
        return np.full(2, self.side / 2)

    def offset(self, ap: int, x: np.ndarray) -> np.ndarray:
        """x - b_l, refusing the singular point x = b_l"""
        d = np.asarray(x, dtype=float) - self.ap_centers[ap]
        if np.linalg.norm(d) == 0.0:
            raise SingularGeometry(f"position {x} coincides with centre of AP {ap}")
        return d

    def distance(self, ap: int, x: np.ndarray) -> float:
        return float(np.linalg.norm(self.offset(ap, x)))

    def contains(self, x: np.ndarray) -> bool:
        x = np.asarray(x)
        return bool(np.all(x >= 0.0) and np.all(x <= self.side))


@dataclass
class ChannelRealization:
    """Per-UE channel parameters of one frame

    Args:
        beta: Large-scale fading per AP, beta_u (L,)
        psi: Phase offsets per AP in radians, psi_u (L,), wrapped to [0, 2 pi)
        dtau: Residual clock time offset in seconds, delta tau_u
        position: UE position x_u (2,)
    """

    beta: np.ndarray
    psi: np.ndarray
    dtau: float
    position: np.ndarray

    def __post_init__(self):
        self.beta = np.asarray(self.beta, dtype=float)
        self.psi = np.mod(np.asarray(self.psi, dtype=float), 2 * np.pi)
        self.position = np.asarray(self.position, dtype=float)
        self.dtau = float(self.dtau)
        if self.beta.shape != self.psi.shape:
            raise ValueError("beta and psi must have one entry per AP")
        if np.any(self.beta < 0):
            raise ValueError("large-scale fading must be non-negative")
