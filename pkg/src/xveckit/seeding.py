"""Deterministic RNG streams derived from one experiment seed.

Every stochastic component draws from a substream named by the component
(and any indices), so the global seed reproduces the whole experiment and
no two components share a stream.
"""

import hashlib

import numpy as np


def derive_seed(seed: int, *names) -> int:
    """Hash (seed, *names) into a 64-bit child seed, stable across platforms."""
    tag = ":".join([str(int(seed))] + [str(n) for n in names])
    digest = hashlib.sha256(tag.encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "little")


def derive_rng(seed: int, *names) -> np.random.Generator:
    """Generator for the substream named by ``names`` under ``seed``."""
    return np.random.default_rng(derive_seed(seed, *names))
