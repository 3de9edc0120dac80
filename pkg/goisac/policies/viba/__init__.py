from goisac.policies.viba.policy import VIBA  # noqa: F401
