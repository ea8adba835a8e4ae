"""Seed derivation: one master seed fans out to purpose-tagged streams.

Child seed = low 64 bits of sha256("<master>:<tag>"), so the same
(master, tag) pair yields the same stream on every platform and the order
in which streams are created never matters.
"""

import hashlib

import numpy as np


def derive_seed(master: int, tag: str) -> int:
    digest = hashlib.sha256(f"{master}:{tag}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def rng_for(master: int, tag: str) -> np.random.Generator:
    return np.random.default_rng(derive_seed(master, tag))
