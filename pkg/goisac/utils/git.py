import subprocess
from pathlib import Path
from typing import Dict, List, Optional, Union

REPO_ROOT = Path(__file__).parents[2]


def _git(*args: str) -> Optional[str]:
    """Output of a git command run in the source tree, None outside a checkout"""
    try:
        out = subprocess.check_output(
            ["git", *args], cwd=REPO_ROOT, stderr=subprocess.DEVNULL
        )
    except (OSError, subprocess.CalledProcessError):
        return None
    return out.decode("ascii", errors="replace").strip()


def commit_sha() -> Optional[str]:
    """Short SHA of the checked-out commit"""
    return _git("rev-parse", "--short", "HEAD")


def provenance() -> Dict[str, Union[None, str, bool]]:
    """Commit and working-tree state recorded next to simulation results

    `dirty` is True when tracked files differ from the commit, so results
    cannot be reproduced from the SHA alone.
    """
    sha = commit_sha()
    if sha is None:
        return {"commit_sha": None, "dirty": None}
    status = _git("status", "--porcelain", "--untracked-files=no")
    changed: List[str] = status.splitlines() if status else []
    return {"commit_sha": sha, "dirty": len(changed) > 0}
