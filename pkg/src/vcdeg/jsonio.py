"""Canonical JSON emission and strict parsing.

Recipes, manifests, and config files all need two guarantees that the
stdlib encoder does not give directly: byte-stable output (fixed key
order, fixed float formatting) and parse errors that carry a byte
offset. Floats are written with 17 significant digits, which is always
enough to round-trip an IEEE-754 double exactly.
"""

from __future__ import annotations

import json
import math
from typing import Any

from .errors import ParseError


def _emit(obj: Any, parts: list[str], indent: int) -> None:
    pad = "  " * indent
    if obj is None:
        parts.append("null")
    elif obj is True:
        parts.append("true")
    elif obj is False:
        parts.append("false")
    elif isinstance(obj, int):
        parts.append(str(obj))
    elif isinstance(obj, float):
        if not math.isfinite(obj):
            raise ValueError(f"non-finite float not serializable: {obj!r}")
        parts.append(f"{obj:.17g}")
    elif isinstance(obj, str):
        parts.append(json.dumps(obj, ensure_ascii=False))
    elif isinstance(obj, (list, tuple)):
        if not obj:
            parts.append("[]")
            return
        parts.append("[\n")
        for i, item in enumerate(obj):
            parts.append(pad + "  ")
            _emit(item, parts, indent + 1)
            parts.append(",\n" if i + 1 < len(obj) else "\n")
        parts.append(pad + "]")
    elif isinstance(obj, dict):
        if not obj:
            parts.append("{}")
            return
        parts.append("{\n")
        items = list(obj.items())
        for i, (key, value) in enumerate(items):
            if not isinstance(key, str):
                raise ValueError(f"JSON object keys must be strings, got {key!r}")
            parts.append(pad + "  " + json.dumps(key, ensure_ascii=False) + ": ")
            _emit(value, parts, indent + 1)
            parts.append(",\n" if i + 1 < len(items) else "\n")
        parts.append(pad + "}")
    else:
        raise ValueError(f"not JSON-serializable: {type(obj).__name__}")


def dump_bytes(obj: Any) -> bytes:
    """Serialize ``obj`` to canonical JSON bytes (insertion key order)."""
    parts: list[str] = []
    _emit(obj, parts, 0)
    parts.append("\n")
    return "".join(parts).encode("utf-8")


def load_bytes(data: bytes) -> Any:
    """Parse JSON bytes; ParseError carries the byte offset on failure."""
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise ParseError(f"invalid UTF-8: {exc.reason}", exc.start) from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        offset = len(text[: exc.pos].encode("utf-8"))
        raise ParseError(exc.msg, offset) from exc


def key_offset(data: bytes, key: str) -> int:
    """Byte offset of the first occurrence of a JSON key, or -1."""
    needle = json.dumps(key).encode("utf-8")
    pos = data.find(needle)
    return pos if pos >= 0 else -1


def reject_unknown_keys(obj: dict, allowed: set[str], context: str, raw: bytes | None = None) -> None:
    """Raise ParseError for any key of ``obj`` not in ``allowed``."""
    for key in obj:
        if key not in allowed:
            offset = key_offset(raw, key) if raw is not None else -1
            raise ParseError(f"unknown key {key!r} in {context}", offset)


def require_keys(obj: dict, required: set[str], context: str) -> None:
    """Raise ParseError if any required key is missing from ``obj``."""
    for key in required:
        if key not in obj:
            raise ParseError(f"missing key {key!r} in {context}")
