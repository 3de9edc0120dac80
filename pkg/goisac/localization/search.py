from typing import Callable, List, Optional, Tuple

import numpy as np
import pandas as pd
from joblib import Parallel, delayed
from tqdm.auto import tqdm

from goisac.localization.fim import fim_single_re, peb_from_fim
from goisac.phy.channel import DEFAULT_ANTENNA_GAIN_DBI, fspl_betas
from goisac.phy.grid import FrameGrid
from goisac.phy.scenario import ChannelRealization, Scenario
from goisac.utils.decorators import lazy_property
from goisac.utils.exceptions import LocalizationUnidentifiable, SingularGeometry
from goisac.utils.logging import get_logger, log_elapsed

BetaModel = Callable[[Scenario, np.ndarray], np.ndarray]


def fspl_beta_model(gain_dbi: float = DEFAULT_ANTENNA_GAIN_DBI) -> BetaModel:
    """Position -> beta map of the free-space link budget"""

    def beta_model(scn: Scenario, x: np.ndarray) -> np.ndarray:
        return fspl_betas(scn, x, gain_dbi)

    return beta_model


def single_re_peb(
    scn: Scenario,
    grid: FrameGrid,
    x: np.ndarray,
    p_u: float,
    sigma_w2: float,
    beta_model: Optional[BetaModel] = None,
) -> float:
    """PEB of one pull RE for a UE at `x`

    The bound depends on neither the phase offsets, the clock offset nor the
    subcarrier offset of the RE, so it is evaluated on the first pull RE with
    all of them at zero.
    """
    beta_model = fspl_beta_model() if beta_model is None else beta_model
    x = np.asarray(x, dtype=float)
    ch = ChannelRealization(
        beta=beta_model(scn, x), psi=np.zeros(scn.num_aps), dtau=0.0, position=x
    )
    J = fim_single_re(scn, grid, grid.pull_re(0), ch, p_u, sigma_w2)
    return peb_from_fim(J)


def grid_axis(side: float, resolution: float) -> np.ndarray:
    """Uniform sample positions 0, r, 2r, ... up to and including `side`"""
    if resolution <= 0:
        raise ValueError("resolution must be positive")
    return np.arange(0.0, side + resolution / 2, resolution)


def _peb_row(
    scn: Scenario,
    grid: FrameGrid,
    x: float,
    ys: np.ndarray,
    p_u: float,
    sigma_w2: float,
    beta_model: BetaModel,
) -> List[Tuple[float, float, float]]:
    rows = []
    for y in ys:
        try:
            peb = single_re_peb(scn, grid, np.array([x, y]), p_u, sigma_w2, beta_model)
        except (SingularGeometry, LocalizationUnidentifiable):
            continue
        rows.append((float(x), float(y), peb))
    return rows


def peb_map(
    scn: Scenario,
    grid: FrameGrid,
    p_u: float,
    sigma_w2: float,
    resolution: float = 1.0,
    beta_model: Optional[BetaModel] = None,
    n_jobs: int = 1,
) -> pd.DataFrame:
    """Single-RE PEB on a uniform grid over the deployment square

    Grid points where the PEB is undefined (AP centres) are skipped.

    Args:
        scn: Scenario
        grid: Frame grid
        p_u: Transmit power in W
        sigma_w2: Noise power in W
        resolution: Grid spacing in metres
        beta_model: Position -> beta map, free-space path loss if None
        n_jobs: Number of joblib workers, rows of the grid are distributed

    Returns:
        Dataframe with columns `x`, `y`, `peb`
    """
    beta_model = fspl_beta_model() if beta_model is None else beta_model
    axis = grid_axis(scn.side, resolution)

    if n_jobs == 1:
        chunks = [
            _peb_row(scn, grid, x, axis, p_u, sigma_w2, beta_model)
            for x in tqdm(axis, leave=False)
        ]
    else:
        chunks = Parallel(n_jobs=n_jobs, backend="loky")(
            delayed(_peb_row)(scn, grid, x, axis, p_u, sigma_w2, beta_model)
            for x in axis
        )

    rows = [row for chunk in chunks for row in chunk]
    return pd.DataFrame(rows, columns=["x", "y", "peb"])


def worst_case_position(
    scn: Scenario,
    grid: FrameGrid,
    p_u: float,
    sigma_w2: float,
    resolution: float = 1.0,
    beta_model: Optional[BetaModel] = None,
    n_jobs: int = 1,
) -> Tuple[np.ndarray, float]:
    """Grid point with the largest single-RE PEB and that PEB

    Raises:
        LocalizationUnidentifiable: if the PEB is undefined on every grid point
    """
    table = peb_map(scn, grid, p_u, sigma_w2, resolution, beta_model, n_jobs)
    return _argmax(table)


def _argmax(table: pd.DataFrame) -> Tuple[np.ndarray, float]:
    if len(table) == 0:
        raise LocalizationUnidentifiable("PEB undefined on every grid point")
    # first maximum in grid order
    best = int(np.argmax(table["peb"].to_numpy()))
    row = table.iloc[best]
    return np.array([row["x"], row["y"]]), float(row["peb"])


class PebMap:
    """PEB map of one scenario, computed once on first access

    Args:
        scn: Scenario
        grid: Frame grid
        p_u: Transmit power in W
        sigma_w2: Noise power in W
        resolution: Grid spacing in metres
        gain_dbi: Antenna gain of the free-space beta model
        n_jobs: Number of joblib workers
    """

    def __init__(
        self,
        scn: Scenario,
        grid: FrameGrid,
        p_u: float,
        sigma_w2: float,
        resolution: float = 1.0,
        gain_dbi: float = DEFAULT_ANTENNA_GAIN_DBI,
        n_jobs: int = 1,
    ):
        if resolution <= 0:
            raise ValueError("resolution must be positive")
        self.scn = scn
        self.grid = grid
        self.p_u = p_u
        self.sigma_w2 = sigma_w2
        self.resolution = resolution
        self.gain_dbi = gain_dbi
        self.n_jobs = n_jobs

    @lazy_property
    def table(self) -> pd.DataFrame:
        log = get_logger(__name__)
        with log_elapsed(log, f"PEB map at resolution {self.resolution} m"):
            table = peb_map(
                self.scn,
                self.grid,
                self.p_u,
                self.sigma_w2,
                resolution=self.resolution,
                beta_model=fspl_beta_model(self.gain_dbi),
                n_jobs=self.n_jobs,
            )
        return table

    @lazy_property
    def worst_case(self) -> Tuple[np.ndarray, float]:
        position, peb1 = _argmax(self.table)
        get_logger(__name__).info(f"Worst-case position {position}, PEB {peb1:.4f} m")
        return position, peb1

    @property
    def worst_case_peb(self) -> float:
        return self.worst_case[1]
