"""JSON envelopes: ``{"kind", "m", "n", "payload"}`` with sorted keys.

Payloads by kind:

* ``pasm``, ``corner_sum``, ``height``, ``ideal`` -- row-major nested arrays
  (``ideal`` holds the m x n column-height array);
* ``triangle`` -- list of rows, row i of length i;
* ``fpl`` -- sorted edge list of ``["H"|"V", i, j]``;
* ``ice`` -- sorted list of ``["H"|"V", i, j, bit]`` over every edge, bit 1
  meaning the head is the endpoint with larger ``i + j``;
* ``nest`` -- list of ``[start_row, steps]`` with steps over ``S``/``E``;
* ``link_pattern`` -- sorted list of ``[a, b]`` arcs with ``a < b``.
"""

from __future__ import annotations

import json
from typing import Any

from .bijections import family_of
from .grid import Dims, all_edges
from .objects import (
    CornerSumMatrix,
    OsculatingNest,
    PartialFpl,
    PartialHeightFunction,
    PartialLinkPattern,
    PartialMonotoneTriangle,
    Pasm,
    RectIce,
    StructuralError,
)
from .poset import OrderIdeal

KINDS = ("pasm", "triangle", "corner_sum", "height", "fpl", "ice", "ideal", "nest", "link_pattern")


class ParseError(ValueError):
    """Malformed JSON or envelope."""


class UnknownKindError(ValueError):
    pass


def _nested(rows) -> list[list[int]]:
    return [list(r) for r in rows]


def to_payload(obj) -> Any:
    kind = family_of(obj)
    if kind == "pasm" or kind == "corner_sum" or kind == "height":
        return _nested(obj.entries)
    if kind == "triangle":
        return _nested(obj.rows)
    if kind == "ideal":
        return _nested(obj.heights)
    if kind == "fpl":
        return [list(e) for e in sorted(obj.edges)]
    if kind == "ice":
        return [[k, i, j, bit] for (k, i, j), bit in obj.bits()]
    if kind == "nest":
        return [[r, s] for r, s in obj.paths]
    if kind == "link_pattern":
        return [list(a) for a in sorted(obj.arcs)]
    raise UnknownKindError(kind)


def to_envelope(obj) -> dict[str, Any]:
    return {"kind": family_of(obj), "m": obj.dims.m, "n": obj.dims.n, "payload": to_payload(obj)}


def dumps(obj) -> str:
    """Canonical serialization: compact, sorted keys, trailing newline."""
    return json.dumps(to_envelope(obj), sort_keys=True, separators=(",", ":")) + "\n"


def from_envelope(env: Any):
    if not isinstance(env, dict):
        raise ParseError("envelope must be a JSON object")
    missing = {"kind", "m", "n", "payload"} - env.keys()
    if missing:
        raise ParseError(f"envelope missing {sorted(missing)}")
    kind = env["kind"]
    if kind not in KINDS:
        raise UnknownKindError(f"unknown kind {kind!r}")
    try:
        dims = Dims(env["m"], env["n"])
    except (TypeError, ValueError) as exc:
        raise ParseError(str(exc)) from None
    p = env["payload"]
    try:
        if kind == "pasm":
            return Pasm(dims, p)
        if kind == "triangle":
            return PartialMonotoneTriangle(dims, p)
        if kind == "corner_sum":
            return CornerSumMatrix(dims, p)
        if kind == "height":
            return PartialHeightFunction(dims, p)
        if kind == "ideal":
            return OrderIdeal(dims, p)
        if kind == "fpl":
            return PartialFpl(dims, frozenset((k, i, j) for k, i, j in p))
        if kind == "ice":
            seen = {(k, i, j) for k, i, j, _ in p}
            if seen != set(all_edges(dims)) or len(p) != len(seen):
                raise ParseError("ice payload must list every edge exactly once")
            return RectIce(dims, frozenset((k, i, j) for k, i, j, bit in p if bit))
        if kind == "nest":
            return OsculatingNest(dims, tuple((r, s) for r, s in p))
        return PartialLinkPattern(dims, frozenset((a, b) for a, b in p))
    except StructuralError as exc:
        raise ParseError(str(exc)) from None
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad {kind} payload: {exc}") from None


def loads(text: str):
    try:
        env = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    return from_envelope(env)
