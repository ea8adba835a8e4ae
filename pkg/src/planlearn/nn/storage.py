"""Model files: a self-describing JSON container with a content checksum.

Floats are serialized with shortest round-trip repr, so save -> load is
bit-exact on every parameter. The documented size bound is
32 * parameter_count + 4096 bytes (see docs/formats.md).
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

import numpy as np

from ..errors import ChecksumMismatch, FormatVersionMismatch
from ..graphs.core import GraphKind
from .model import MpnnModel

FORMAT = "planlearn-model"
VERSION = 1


def _payload(model: MpnnModel) -> dict:
    return {
        "format": FORMAT,
        "version": VERSION,
        "kind": model.kind.name,
        "T": model.kind.index_dim,
        "layer_count": model.layer_count,
        "hidden_dim": model.hidden_dim,
        "aggregator": model.aggregator,
        "readout": model.readout,
        "seed": model.seed,
        "label_order": list(model.kind.labels),
        "params": {name: model.params[name].tolist() for name in sorted(model.params)},
    }


def _checksum(payload: dict) -> str:
    canonical = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(canonical.encode()).hexdigest()


def model_to_json(model: MpnnModel) -> str:
    payload = _payload(model)
    payload["checksum"] = _checksum({k: v for k, v in payload.items()})
    return json.dumps(payload)


def save_model(model: MpnnModel, path) -> None:
    Path(path).write_text(model_to_json(model))


def model_from_json(text: str) -> MpnnModel:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ChecksumMismatch(f"model file truncated or corrupt: {exc}") from None
    if not isinstance(payload, dict) or payload.get("format") != FORMAT:
        raise FormatVersionMismatch("not a model file")
    if payload.get("version") != VERSION:
        raise FormatVersionMismatch(
            f"model format version {payload.get('version')}, expected {VERSION}")
    stored = payload.pop("checksum", None)
    if stored is None or stored != _checksum(payload):
        raise ChecksumMismatch("model file checksum does not match contents")
    kind = GraphKind(payload["kind"], payload["T"])
    params = {name: np.array(arr, dtype=np.float64)
              for name, arr in payload["params"].items()}
    model = MpnnModel(kind, payload["layer_count"], payload["hidden_dim"],
                      payload["aggregator"], payload["readout"], payload["seed"],
                      params)
    if list(kind.labels) != payload["label_order"]:
        raise FormatVersionMismatch("label order does not match the graph kind")
    return model


def load_model(path) -> MpnnModel:
    return model_from_json(Path(path).read_text())
