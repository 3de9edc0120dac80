from goisac.phy.channel import (  # noqa: F401
    channel_vector,
    delay_vector,
    fspl_beta,
    fspl_betas,
    steering_vector,
)
from goisac.phy.estimation import estimate_beta, receive_and_ls_estimate  # noqa: F401
from goisac.phy.grid import FrameGrid, ReElement  # noqa: F401
from goisac.phy.rate import resources_for_rate, uatf_se  # noqa: F401
from goisac.phy.scenario import ChannelRealization, Scenario  # noqa: F401
