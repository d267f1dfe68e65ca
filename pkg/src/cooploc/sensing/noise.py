"""Gaussian noise levels of the three measurement modalities."""

import math
from dataclasses import dataclass

import numpy as np

from cooploc.errors import ConfigError


@dataclass(frozen=True)
class NoiseParams:
    """Standard deviations of range, azimuth and GPS noise.

    Attributes:
        sigma_d: Range noise (m)
        sigma_az: Azimuth noise (rad)
        sigma_x: GPS noise along x (m)
        sigma_y: GPS noise along y (m)
    """

    sigma_d: float = 0.0
    sigma_az: float = 0.0
    sigma_x: float = 0.0
    sigma_y: float = 0.0

    def __post_init__(self):
        """Reject negative or non-finite deviations."""
        for name in ("sigma_d", "sigma_az", "sigma_x", "sigma_y"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value >= 0):
                raise ConfigError(f"{name} must be finite and ≥ 0, got {value}")

    @classmethod
    def from_degrees(
        cls, sigma_d: float, sigma_az_deg: float, sigma_x: float, sigma_y: float
    ) -> "NoiseParams":
        """Build noise parameters with the azimuth deviation given in degrees."""
        return cls(
            sigma_d=sigma_d,
            sigma_az=math.radians(sigma_az_deg),
            sigma_x=sigma_x,
            sigma_y=sigma_y,
        )

    @property
    def sigma_az_deg(self) -> float:
        """Azimuth deviation in degrees."""
        return math.degrees(self.sigma_az)

    @property
    def gps_covariance(self) -> np.ndarray:
        """Σ_p = diag(σ_x², σ_y²)."""
        return np.diag([self.sigma_x**2, self.sigma_y**2])

    @property
    def is_noiseless(self) -> bool:
        """True when every deviation is zero."""
        return self.sigma_d == self.sigma_az == self.sigma_x == self.sigma_y == 0.0


# σx = 3 m, σy = 2.5 m, σd = 1 m, σaz = 4°
REFERENCE_NOISE = NoiseParams.from_degrees(sigma_d=1.0, sigma_az_deg=4.0, sigma_x=3.0, sigma_y=2.5)
