from pathlib import Path
from typing import Any, List

from goisac.policies.policy import Policy


def get_policy(policy_name: str, *args: Any, **kwargs: Any) -> Policy:
    """Get policy

    Args:
        policy_name: Name of policy

    Returns:
        Policy instance
    """
    if policy_name == "goia":
        from goisac.policies.goia.policy import GOIA

        return GOIA(*args, **kwargs)

    elif policy_name == "goca":
        from goisac.policies.goca.policy import GOCA

        return GOCA(*args, **kwargs)

    elif policy_name == "poia":
        from goisac.policies.poia.policy import POIA

        return POIA(*args, **kwargs)

    elif policy_name == "viba":
        from goisac.policies.viba.policy import VIBA

        return VIBA(*args, **kwargs)

    else:
        raise NotImplementedError(f"Policy {policy_name} not available")


def get_available_policies() -> List[str]:
    """Get available policies

    Returns:
        List of policies
    """
    policy_dir = Path(__file__).parent.absolute()
    return sorted(
        f.name for f in policy_dir.glob("*") if f.is_dir() and f.name[0] != "_"
    )
