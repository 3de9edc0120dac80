from goisac.policies.goia.policy import GOIA  # noqa: F401
