from goisac.__version__ import __version__
from goisac.policies import get_available_policies, get_policy
from goisac.utils.logging import get_logger
