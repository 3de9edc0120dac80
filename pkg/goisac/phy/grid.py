from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True, eq=False)
class ReElement:
    """Resource element: one slot x RB unit of the OFDM grid

    Args:
        subcarrier_indices: Absolute subcarrier indices of the RB (set F_i)
        symbol_indices: Absolute OFDM symbol indices of the slot (set T_i)
    """

    subcarrier_indices: np.ndarray
    symbol_indices: np.ndarray


@dataclass(frozen=True)
class FrameGrid:
    """Slot x RB resource grid of a frame and its push/pull partition

    Slots are laid out as push subframe (first `num_push_slots`), control
    signaling, pull subframe (last `num_pull_slots`). Within a subframe, RE
    index `i` maps to slot `i // num_rbs` and RB `i % num_rbs`.

    Args:
        num_slots: Time slots per frame, N_ts
        num_rbs: Resource blocks, N_rb
        num_push_slots: Push subframe slots, N_p
        num_pull_slots: Pull subframe slots, N_q
        num_subcarriers: Subcarriers per RB, F
        num_symbols: OFDM symbols per slot, T
        subcarrier_spacing: Delta_F in Hz
        cp_duration: Cyclic prefix duration T_cp in seconds
    """

    num_slots: int = 11
    num_rbs: int = 25
    num_push_slots: int = 2
    num_pull_slots: int = 5
    num_subcarriers: int = 12
    num_symbols: int = 7
    subcarrier_spacing: float = 30e3
    cp_duration: float = 2.35e-6

    def __post_init__(self):
        for name in (
            "num_slots",
            "num_rbs",
            "num_push_slots",
            "num_pull_slots",
            "num_subcarriers",
            "num_symbols",
        ):
            if int(getattr(self, name)) < 1:
                raise ValueError(f"`{name}` must be a positive integer")
        if self.num_symbols < 2:
            raise ValueError("`num_symbols` must leave at least one data symbol")
        if self.num_push_slots + self.num_pull_slots > self.num_slots:
            raise ValueError("push and pull subframes exceed the frame")
        if self.num_pull_res < self.num_push_res:
            raise ValueError("pull subframe must be at least as large as push, Q >= P")
        if self.subcarrier_spacing <= 0 or self.cp_duration < 0:
            raise ValueError("invalid numerology")

    @property
    def num_push_res(self) -> int:
        """P = N_p * N_rb"""
        return self.num_push_slots * self.num_rbs

    @property
    def num_pull_res(self) -> int:
        """Q = N_q * N_rb"""
        return self.num_pull_slots * self.num_rbs

    @property
    def num_control_slots(self) -> int:
        return self.num_slots - self.num_push_slots - self.num_pull_slots

    @property
    def symbol_duration(self) -> float:
        """OFDM symbol duration including cyclic prefix"""
        return 1.0 / self.subcarrier_spacing + self.cp_duration

    @property
    def frame_duration(self) -> float:
        return self.num_slots * self.num_symbols * self.symbol_duration

    def push_re(self, index: int) -> ReElement:
        if not 0 <= index < self.num_push_res:
            raise ValueError(f"push RE index {index} outside 0..{self.num_push_res - 1}")
        return self._re(first_slot=0, index=index)

    def pull_re(self, index: int) -> ReElement:
        if not 0 <= index < self.num_pull_res:
            raise ValueError(f"pull RE index {index} outside 0..{self.num_pull_res - 1}")
        return self._re(first_slot=self.num_slots - self.num_pull_slots, index=index)

    def _re(self, first_slot: int, index: int) -> ReElement:
        slot = first_slot + index // self.num_rbs
        rb = index % self.num_rbs
        return ReElement(
            subcarrier_indices=rb * self.num_subcarriers
            + np.arange(self.num_subcarriers),
            symbol_indices=slot * self.num_symbols + np.arange(self.num_symbols),
        )
