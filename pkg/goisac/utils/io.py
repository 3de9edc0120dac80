import json
from pathlib import Path
from typing import Any, Dict, Union

import numpy as np
import pandas as pd

FLOAT_FORMAT = "%.12g"


def save_frame_to_csv(path: Union[str, Path], df: pd.DataFrame, index: bool = False):
    """Save dataframe to csv at given path

    Floats are written with 12 significant digits. Missing values (undefined
    averages) become empty cells, so no `NaN` or `inf` token is ever emitted.
    """
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    df = df.replace([np.inf, -np.inf], np.nan)
    df.to_csv(path, index=index, float_format=FLOAT_FORMAT, na_rep="")


def get_frame_from_csv(path: Union[str, Path]) -> pd.DataFrame:
    """Get `pd.DataFrame` from csv at given path"""
    return pd.read_csv(path)


def read_json(path: Union[str, Path]) -> Dict[str, Any]:
    """Read a JSON object from file; an empty file reads as `{}`"""
    text = Path(path).read_text()
    if not text.strip():
        return {}
    data = json.loads(text)
    if not isinstance(data, dict):
        raise ValueError(f"{path}: expected a JSON object at top level")
    return data


def write_json(path: Union[str, Path], data: Dict[str, Any]):
    """Write JSON object with sorted keys, so equal content gives equal bytes"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(data, indent=2, sort_keys=True, default=_to_builtin))


def _to_builtin(obj: Any) -> Any:
    if isinstance(obj, np.generic):
        return obj.item()
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    if isinstance(obj, Path):
        return str(obj)
    raise TypeError(f"Object of type {type(obj).__name__} is not JSON serializable")
