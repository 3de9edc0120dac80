from goisac.localization.fim import (  # noqa: F401
    FisherInfo,
    ParamLayout,
    channel_jacobian,
    delay_gradient_offset,
    delay_gradient_position,
    fim_single_re,
    peb_from_fim,
    q_loc,
    steering_gradient,
    tangent_projector,
)
from goisac.localization.search import (  # noqa: F401
    PebMap,
    peb_map,
    single_re_peb,
    worst_case_position,
)
