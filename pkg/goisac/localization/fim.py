import math
from dataclasses import dataclass
from typing import List, Optional, Union

import numpy as np
import torch

from goisac.phy.channel import delay_vector, propagation_delay, steering_vector
from goisac.phy.grid import FrameGrid, ReElement
from goisac.phy.scenario import ChannelRealization, Scenario
from goisac.utils.exceptions import DerivativeSingularity, LocalizationUnidentifiable

# Equilibrated FIMs above this condition number are treated as singular
CONDITION_THRESHOLD = 1e12


@dataclass(frozen=True)
class ParamLayout:
    """Index map of kappa = [x (2), beta (L), psi (L), dtau (1)]"""

    num_aps: int

    @property
    def size(self) -> int:
        return 2 * self.num_aps + 3

    @property
    def position(self) -> slice:
        return slice(0, 2)

    @property
    def beta(self) -> slice:
        return slice(2, 2 + self.num_aps)

    @property
    def psi(self) -> slice:
        return slice(2 + self.num_aps, 2 + 2 * self.num_aps)

    @property
    def dtau(self) -> slice:
        return slice(2 + 2 * self.num_aps, self.size)

    @property
    def names(self) -> List[str]:
        L = self.num_aps
        return (
            ["x", "y"]
            + [f"beta_{ap}" for ap in range(L)]
            + [f"psi_{ap}" for ap in range(L)]
            + ["dtau"]
        )

    def pack(self, ch: ChannelRealization) -> np.ndarray:
        """Parameter vector kappa of a channel realization"""
        return np.concatenate([ch.position, ch.beta, ch.psi, [ch.dtau]])

    def unpack(self, kappa: np.ndarray) -> ChannelRealization:
        kappa = np.asarray(kappa, dtype=float)
        assert kappa.shape == (self.size,)
        return ChannelRealization(
            beta=kappa[self.beta],
            psi=kappa[self.psi],
            dtau=float(kappa[self.dtau][0]),
            position=kappa[self.position],
        )


@dataclass
class FisherInfo:
    """Fisher information over kappa, ordered as in `layout`"""

    matrix: np.ndarray
    layout: ParamLayout

    def __post_init__(self):
        self.matrix = np.asarray(self.matrix, dtype=float)
        assert self.matrix.shape == (self.layout.size, self.layout.size)

    def __add__(self, other: "FisherInfo") -> "FisherInfo":
        if other.layout != self.layout:
            raise ValueError("cannot add Fisher information of different layouts")
        return FisherInfo(self.matrix + other.matrix, self.layout)

    def __mul__(self, factor: float) -> "FisherInfo":
        return FisherInfo(float(factor) * self.matrix, self.layout)

    __rmul__ = __mul__

    @property
    def position_block(self) -> np.ndarray:
        pos = self.layout.position
        return self.matrix[pos, pos]


def tangent_projector(scn: Scenario, ap: int, x: np.ndarray) -> np.ndarray:
    """A_l(x) = I - u u^T with u the unit range direction from AP `ap` to `x`"""
    d = scn.offset(ap, x)
    u = d / np.linalg.norm(d)
    return np.eye(2) - np.outer(u, u)


def steering_gradient(scn: Scenario, ap: int, x: np.ndarray) -> np.ndarray:
    """d a_l / d x as an M x 2 matrix"""
    a = steering_vector(scn, ap, x)
    offsets = scn.ap_antenna_positions[ap] - scn.ap_centers[ap]
    dphase = offsets @ tangent_projector(scn, ap, x) / scn.distance(ap, x)
    return 1j * 2 * np.pi / scn.carrier_wavelength * a[:, None] * dphase


def delay_gradient_offset(grid: FrameGrid, re: ReElement, tau: float) -> np.ndarray:
    """d f_l / d dtau, an F-vector"""
    n_f = np.asarray(re.subcarrier_indices, dtype=float)
    return -1j * 2 * np.pi * grid.subcarrier_spacing * n_f * delay_vector(grid, re, tau)


def delay_gradient_position(
    scn: Scenario, grid: FrameGrid, re: ReElement, ap: int, x: np.ndarray, dtau: float
) -> np.ndarray:
    """d f_l / d x as an F x 2 matrix; the range derivative is the unit direction"""
    d = scn.offset(ap, x)
    u = d / np.linalg.norm(d)
    tau = propagation_delay(scn, ap, x, dtau)
    return delay_gradient_offset(grid, re, tau)[:, None] * u[None, :] / scn.lightspeed


def channel_jacobian(
    scn: Scenario,
    grid: FrameGrid,
    re: ReElement,
    ch: ChannelRealization,
    implementation: str = "analytic",
) -> np.ndarray:
    """Jacobian of the stacked channel of one RE w.r.t. kappa

    Args:
        scn: Scenario
        grid: Frame grid
        re: Resource element
        ch: Channel realization, evaluated at its position and parameters
        implementation: `analytic` assembles the closed-form gradient blocks,
            `autograd` differentiates a torch re-synthesis of the channel

    Returns:
        Complex (L F M) x (2 L + 3) matrix with columns ordered as `ParamLayout`

    Raises:
        DerivativeSingularity: if some beta_l is zero
    """
    if np.any(ch.beta <= 0.0):
        raise DerivativeSingularity("channel is not differentiable in beta at beta = 0")

    if implementation == "analytic":
        return _channel_jacobian_analytic(scn, grid, re, ch)
    elif implementation == "autograd":
        return _channel_jacobian_autograd(scn, grid, re, ch)
    else:
        raise NotImplementedError(f"Implementation {implementation} not available")


def _channel_jacobian_analytic(
    scn: Scenario, grid: FrameGrid, re: ReElement, ch: ChannelRealization
) -> np.ndarray:
    L, M, F = scn.num_aps, scn.num_antennas, grid.num_subcarriers
    layout = ParamLayout(L)
    jac = np.zeros((L * F * M, layout.size), dtype=complex)

    for ap in range(L):
        rows = slice(ap * F * M, (ap + 1) * F * M)
        x = ch.position
        a = steering_vector(scn, ap, x)
        tau = propagation_delay(scn, ap, x, ch.dtau)
        f = delay_vector(grid, re, tau)
        phase = np.exp(1j * ch.psi[ap])
        amplitude = np.sqrt(ch.beta[ap])
        block = np.kron(f, a)

        da = steering_gradient(scn, ap, x)
        df = delay_gradient_position(scn, grid, re, ap, x, ch.dtau)
        for k in range(2):
            dblock = np.kron(df[:, k], a) + np.kron(f, da[:, k])
            jac[rows, k] = amplitude * phase * dblock

        jac[rows, layout.beta.start + ap] = phase / (2 * amplitude) * block
        jac[rows, layout.psi.start + ap] = 1j * amplitude * phase * block
        jac[rows, layout.dtau.start] = (
            amplitude * phase * np.kron(delay_gradient_offset(grid, re, tau), a)
        )

    return jac


def _channel_jacobian_autograd(
    scn: Scenario, grid: FrameGrid, re: ReElement, ch: ChannelRealization
) -> np.ndarray:
    layout = ParamLayout(scn.num_aps)
    centers = torch.as_tensor(scn.ap_centers, dtype=torch.float64)
    offsets = torch.as_tensor(
        scn.ap_antenna_positions - scn.ap_centers[:, None, :], dtype=torch.float64
    )
    n_f = torch.as_tensor(np.asarray(re.subcarrier_indices), dtype=torch.float64)
    wavenumber = 2 * math.pi / scn.carrier_wavelength
    delay_rate = 2 * math.pi * grid.subcarrier_spacing

    def synthesize(kappa: torch.Tensor) -> torch.Tensor:
        x = kappa[layout.position]
        beta, psi, dtau = kappa[layout.beta], kappa[layout.psi], kappa[layout.dtau]
        parts = []
        for ap in range(scn.num_aps):
            d = x - centers[ap]
            dist = torch.linalg.norm(d)
            tau = dist / scn.lightspeed + dtau
            phase = (
                psi[ap]
                - delay_rate * n_f[:, None] * tau
                + wavenumber * (offsets[ap] @ (d / dist))[None, :]
            ).reshape(-1)
            amplitude = torch.sqrt(beta[ap])
            parts.append(
                amplitude * torch.stack([torch.cos(phase), torch.sin(phase)], -1)
            )
        return torch.cat(parts)

    kappa = torch.as_tensor(layout.pack(ch), dtype=torch.float64)
    jac = torch.autograd.functional.jacobian(synthesize, kappa).numpy()
    return jac[:, 0, :] + 1j * jac[:, 1, :]


def fim_single_re(
    scn: Scenario,
    grid: FrameGrid,
    re: ReElement,
    ch: ChannelRealization,
    p_u: float,
    sigma_w2: float,
    num_symbols: Optional[int] = None,
    implementation: str = "analytic",
) -> FisherInfo:
    """Fisher information of one RE from T independent channel observations

    J_i = 2 T (p_u / sigma_w2) Re{G^H G}, G the channel Jacobian.
    """
    if p_u <= 0 or sigma_w2 <= 0:
        raise ValueError("powers must be positive")
    T = grid.num_symbols if num_symbols is None else num_symbols
    G = channel_jacobian(scn, grid, re, ch, implementation=implementation)
    gram = np.real(G.conj().T @ G)
    matrix = 2 * T * (p_u / sigma_w2) * gram
    return FisherInfo(0.5 * (matrix + matrix.T), ParamLayout(scn.num_aps))


def peb_from_fim(
    J: Union[FisherInfo, np.ndarray], cond_threshold: float = CONDITION_THRESHOLD
) -> float:
    """Position error bound sqrt(tr[J^{-1}]_{1:2,1:2})

    The inverse is taken through the diagonally equilibrated matrix
    D^{-1/2} J D^{-1/2}, whose condition number is checked against
    `cond_threshold`.

    Raises:
        LocalizationUnidentifiable: if J is singular or ill-conditioned
    """
    matrix = J.matrix if isinstance(J, FisherInfo) else np.asarray(J, dtype=float)
    diag = np.diag(matrix)
    if not np.all(np.isfinite(matrix)) or np.any(diag <= 0.0):
        raise LocalizationUnidentifiable("some parameter carries no information")

    scale = 1.0 / np.sqrt(diag)
    equilibrated = scale[:, None] * matrix * scale[None, :]
    cond = np.linalg.cond(equilibrated)
    if not np.isfinite(cond) or cond > cond_threshold:
        raise LocalizationUnidentifiable(f"condition number {cond:.3g} too large")

    inverse = scale[:, None] * np.linalg.inv(equilibrated) * scale[None, :]
    speb = float(np.trace(inverse[:2, :2]))
    if speb <= 0.0:
        raise LocalizationUnidentifiable("non-positive squared position error bound")
    return math.sqrt(speb)


def q_loc(peb1: float, epsilon: float) -> int:
    """REs needed so that aggregating them at the worst case reaches PEB <= epsilon

    Q_loc = ceil(peb1^2 / epsilon^2); epsilon = inf disables the constraint.
    """
    if peb1 <= 0 or epsilon <= 0:
        raise ValueError("peb1 and epsilon must be positive")
    if math.isinf(epsilon):
        return 0
    ratio = (peb1 / epsilon) ** 2
    nearest = round(ratio)
    if abs(ratio - nearest) <= 1e-9 * max(1.0, ratio):
        return int(nearest)
    return int(math.ceil(ratio))
