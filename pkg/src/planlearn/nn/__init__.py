"""Message-passing network: forward, training, selection, storage."""

from .model import (
    MpnnModel,
    PackedBatch,
    backward_packed,
    forward,
    forward_batch,
    forward_packed,
    init_model,
    pack_graphs,
)
from .storage import load_model, model_from_json, model_to_json, save_model
from .train import (
    Adam,
    LabeledGraphSample,
    LrSchedule,
    TrainConfig,
    TrainTrace,
    ValidationStats,
    select_model,
    train,
)

__all__ = [
    "Adam", "LabeledGraphSample", "LrSchedule", "MpnnModel", "PackedBatch",
    "TrainConfig", "TrainTrace", "ValidationStats", "backward_packed",
    "forward", "forward_batch", "forward_packed", "init_model", "load_model",
    "model_from_json", "model_to_json", "pack_graphs", "save_model",
    "select_model", "train",
]
