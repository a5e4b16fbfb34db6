"""
Serialization of results: JSON with a fixed number of significant digits,
CSV with a fixed column order.
"""

import csv
import io
import json
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from gh_lab.core.config import get_settings


def round_floats(value: Any, digits: Optional[int] = None) -> Any:
    """Recursively round floats (and numpy scalars/arrays) to `digits` significant digits."""
    digits = get_settings().json_digits if digits is None else digits
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (float, np.floating)):
        return float(f"{float(value):.{digits}g}")
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, np.ndarray):
        return round_floats(value.tolist(), digits)
    if isinstance(value, dict):
        return {str(k): round_floats(v, digits) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [round_floats(v, digits) for v in value]
    return value


def to_json(payload: Dict[str, Any], digits: Optional[int] = None) -> str:
    """Deterministic JSON: sorted keys, rounded floats, trailing newline."""
    return json.dumps(round_floats(payload, digits), sort_keys=True, ensure_ascii=False) + "\n"


def to_csv(records: Sequence[Dict[str, Any]], columns: List[str], digits: Optional[int] = None) -> str:
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=columns, lineterminator="\n", extrasaction="ignore")
    writer.writeheader()
    for record in records:
        writer.writerow(round_floats(record, digits))
    return buffer.getvalue()


__all__ = ["round_floats", "to_json", "to_csv"]
