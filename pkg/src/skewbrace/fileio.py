"""JSON file format: one structure per file.

Keys: "order" (int), "dot" (order x order matrix), optional "circ" (same
shape; absent means the file describes a plain group), optional "labels"
(list of strings naming the elements).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import numpy as np

from .brace import SkewBrace, validate_brace
from .errors import FileFormatError
from .groups import validate_group


@dataclass(frozen=True)
class LoadedStructure:
    brace: SkewBrace
    is_group: bool  # True when the file had no "circ" key
    labels: Optional[tuple[str, ...]] = None


def _check_matrix(data, key: str, order: int) -> np.ndarray:
    mat = data[key]
    if (
        not isinstance(mat, list)
        or len(mat) != order
        or any(not isinstance(r, list) or len(r) != order for r in mat)
    ):
        raise FileFormatError(f'"{key}" must be a {order}x{order} matrix')
    arr = np.asarray(mat, dtype=np.int64)
    if arr.min() < 0 or arr.max() >= order:
        raise FileFormatError(f'"{key}" entries must lie in 0..{order - 1}')
    return arr


def load_structure(path: str | Path) -> LoadedStructure:
    """Load and validate a brace (or group, as a trivial brace) from JSON."""
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise FileFormatError(f"{path}: {exc}") from exc
    if not isinstance(data, dict) or "order" not in data or "dot" not in data:
        raise FileFormatError('file must be an object with "order" and "dot"')
    order = data["order"]
    if not isinstance(order, int) or order < 1:
        raise FileFormatError('"order" must be a positive integer')
    dot = _check_matrix(data, "dot", order)
    if "circ" in data:
        circ = _check_matrix(data, "circ", order)
        is_group = False
    else:
        validate_group(dot)
        circ = dot
        is_group = True
    labels = None
    if "labels" in data:
        if (
            not isinstance(data["labels"], list)
            or len(data["labels"]) != order
            or any(not isinstance(s, str) for s in data["labels"])
        ):
            raise FileFormatError(f'"labels" must be a list of {order} strings')
        labels = tuple(data["labels"])
    return LoadedStructure(validate_brace(dot, circ), is_group, labels)


def save_structure(
    path: str | Path,
    brace: SkewBrace,
    labels: Optional[tuple[str, ...]] = None,
    as_group: bool = False,
) -> None:
    data: dict = {"order": brace.order, "dot": brace.dot.op.tolist()}
    if not as_group:
        data["circ"] = brace.circ.op.tolist()
    if labels is not None:
        data["labels"] = list(labels)
    Path(path).write_text(json.dumps(data, indent=1) + "\n", encoding="utf-8")
