"""Versioned binary checkpoint container.

Layout: 4-byte magic "GDDA", uint32 LE format version, uint64 LE header
length, UTF-8 JSON header, then every state-dict array as raw little-endian
float32 in the header's listed order. The header records game id, network
config, training iteration, RNG seed, and the array manifest (name, shape,
original dtype).
"""

from __future__ import annotations

import json
import struct
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import torch

from ..games.types import VARIANTS
from .network import NetworkConfig, PolicyValueNet

MAGIC = b"GDDA"
FORMAT_VERSION = 1


class CheckpointError(Exception):
    pass


@dataclass(frozen=True)
class CheckpointMeta:
    game: str
    network: NetworkConfig
    iteration: int
    seed: int


def save_checkpoint(path: str | Path, model: PolicyValueNet, meta: CheckpointMeta) -> None:
    state = model.state_dict()
    manifest = []
    blobs = []
    for name, tensor in state.items():
        array = tensor.detach().cpu().numpy()
        manifest.append({"name": name, "shape": list(array.shape), "dtype": str(array.dtype)})
        blobs.append(np.ascontiguousarray(array, dtype="<f4").tobytes())
    header = json.dumps(
        {
            "game": meta.game,
            "network": meta.network.to_dict(),
            "iteration": meta.iteration,
            "seed": meta.seed,
            "arrays": manifest,
        }
    ).encode("utf-8")
    with open(path, "wb") as f:
        f.write(MAGIC)
        f.write(struct.pack("<I", FORMAT_VERSION))
        f.write(struct.pack("<Q", len(header)))
        f.write(header)
        for blob in blobs:
            f.write(blob)


def load_checkpoint(path: str | Path) -> tuple[CheckpointMeta, dict[str, torch.Tensor]]:
    path = Path(path)
    if not path.exists():
        raise CheckpointError(f"checkpoint not found: {path}")
    try:
        raw = path.read_bytes()
        if raw[:4] != MAGIC:
            raise CheckpointError(f"{path}: bad magic, not a checkpoint file")
        (version,) = struct.unpack_from("<I", raw, 4)
        if version != FORMAT_VERSION:
            raise CheckpointError(f"{path}: unsupported format version {version}")
        (header_len,) = struct.unpack_from("<Q", raw, 8)
        header = json.loads(raw[16 : 16 + header_len].decode("utf-8"))
        meta = CheckpointMeta(
            game=header["game"],
            network=NetworkConfig.from_dict(header["network"]),
            iteration=int(header["iteration"]),
            seed=int(header["seed"]),
        )
        state: dict[str, torch.Tensor] = {}
        offset = 16 + header_len
        for entry in header["arrays"]:
            shape = tuple(entry["shape"])
            count = int(np.prod(shape)) if shape else 1
            array = np.frombuffer(raw, dtype="<f4", count=count, offset=offset).reshape(shape)
            offset += count * 4
            state[entry["name"]] = torch.from_numpy(array.astype(entry["dtype"], copy=True))
        if offset != len(raw):
            raise CheckpointError(f"{path}: trailing or missing weight bytes")
        return meta, state
    except CheckpointError:
        raise
    except Exception as exc:
        raise CheckpointError(f"{path}: corrupt checkpoint ({exc})") from exc


def load_model(path: str | Path) -> tuple[PolicyValueNet, CheckpointMeta]:
    meta, state = load_checkpoint(path)
    if meta.game not in VARIANTS:
        raise CheckpointError(f"{path}: unknown game {meta.game!r}")
    model = PolicyValueNet(meta.network)
    model.load_state_dict(state)
    model.eval()
    return model, meta
