"""Canonical JSON documents for labeled subdivisions."""

from __future__ import annotations

import json
from typing import Sequence

from .geometry import format_rational, parse_rational
from .subdivision import Subdivision


class DocumentError(ValueError):
    pass


def dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def instance_to_dict(sub: Subdivision, labels: Sequence[int] | None = None) -> dict:
    verts = []
    for vid, p in enumerate(sub.vertices):
        entry = {"id": vid, "coords": [format_rational(c) for c in p]}
        if labels is not None:
            entry["label"] = labels[vid]
        verts.append(entry)
    return {"n": sub.n, "vertices": verts, "cells": [list(c) for c in sub.cells]}


def serialize(sub: Subdivision, labels: Sequence[int] | None = None) -> str:
    return dumps(instance_to_dict(sub, labels))


def instance_from_dict(doc: dict) -> tuple[Subdivision, tuple[int, ...] | None]:
    try:
        n = doc["n"]
        raw = sorted(doc["vertices"], key=lambda v: v["id"])
        if [v["id"] for v in raw] != list(range(len(raw))):
            raise DocumentError("vertex ids must be dense from 0")
        coords = [[parse_rational(c) for c in v["coords"]] for v in raw]
        has_labels = [("label" in v) for v in raw]
        if any(has_labels) and not all(has_labels):
            raise DocumentError("labels must be given for all vertices or none")
        labels = tuple(v["label"] for v in raw) if raw and all(has_labels) else None
        if not isinstance(n, int) or isinstance(n, bool):
            raise DocumentError("n must be an integer")
        sub = Subdivision(n, coords, doc["cells"])
    except DocumentError:
        raise
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise DocumentError(f"malformed instance document: {exc}") from exc
    return sub, labels


def parse(text: str) -> tuple[Subdivision, tuple[int, ...] | None]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise DocumentError("instance document must be a JSON object")
    return instance_from_dict(doc)
