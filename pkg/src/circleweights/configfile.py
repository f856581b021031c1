"""JSON configuration files: one fixed-point configuration per file.

    {"dimension": 8,
     "points": [{"weights": [4, 2, 1, 1], "sign": -1}, ...]}
"""

from __future__ import annotations

import json
from pathlib import Path

from .core import FixedPoint, FixedPointData, WeightMultiset


class ConfigError(ValueError):
    """Malformed configuration; the message names the offending field."""


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def parse_config(obj) -> FixedPointData:
    if not isinstance(obj, dict):
        raise ConfigError("top level: expected an object with 'dimension' and 'points'")
    extra = set(obj) - {"dimension", "points"}
    if extra:
        raise ConfigError(f"top level: unknown field(s) {sorted(extra)}")
    if "dimension" not in obj:
        raise ConfigError("dimension: missing")
    dim = obj["dimension"]
    if not _is_int(dim) or dim < 2 or dim % 2:
        raise ConfigError(f"dimension: expected a positive even integer, got {dim!r}")
    points = obj.get("points")
    if not isinstance(points, list) or not points:
        raise ConfigError("points: expected a nonempty array")
    n = dim // 2
    parsed = []
    for i, pt in enumerate(points):
        where = f"points[{i}]"
        if not isinstance(pt, dict):
            raise ConfigError(f"{where}: expected an object with 'weights' and 'sign'")
        extra = set(pt) - {"weights", "sign"}
        if extra:
            raise ConfigError(f"{where}: unknown field(s) {sorted(extra)}")
        weights = pt.get("weights")
        if not isinstance(weights, list):
            raise ConfigError(f"{where}.weights: expected an array of integers")
        if len(weights) != n:
            raise ConfigError(
                f"{where}.weights: expected {n} weights for dimension {dim}, got {len(weights)}"
            )
        for j, w in enumerate(weights):
            if not _is_int(w) or w < 1:
                raise ConfigError(
                    f"{where}.weights[{j}]: weight must be a positive integer, got {w!r}"
                )
        sign = pt.get("sign")
        if not _is_int(sign) or sign not in (1, -1):
            raise ConfigError(f"{where}.sign: expected +1 or -1, got {sign!r}")
        parsed.append(FixedPoint(WeightMultiset(weights), sign))
    return FixedPointData(n, tuple(parsed))


def loads(text: str) -> FixedPointData:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    return parse_config(obj)


def load(path) -> FixedPointData:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"{path}: {exc.strerror or exc}") from None
    return loads(text)


def to_obj(data: FixedPointData) -> dict:
    return {
        "dimension": data.dimension,
        "points": [{"weights": list(p.weights), "sign": p.sign} for p in data.points],
    }


def dumps(data: FixedPointData) -> str:
    """Stable, diff-friendly rendering: one point per line."""
    lines = [
        f'    {{"weights": {json.dumps(list(p.weights))}, "sign": {p.sign}}}'
        for p in data.points
    ]
    return (
        f'{{\n  "dimension": {data.dimension},\n  "points": [\n'
        + ",\n".join(lines)
        + "\n  ]\n}\n"
    )
