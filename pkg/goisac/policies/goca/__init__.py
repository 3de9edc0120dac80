from goisac.policies.goca.policy import GOCA  # noqa: F401
