from goisac.policies.poia.policy import POIA  # noqa: F401
