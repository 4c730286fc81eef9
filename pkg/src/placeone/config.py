from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class EngineConfig:
    """Resource caps and determinism knobs threaded through the engine.

    seed drives every randomized choice (sampling, corpus generation), so
    equal configs give byte-identical reports.
    """

    seed: int = 0
    max_tower_depth: int = 8
    max_ext_degree: int = 64
    trunc_start: int = 16
    trunc_cap: int = 4096
    oracle_cap: int = 128
    # Recognize ordinary nodes from the Hessian before falling back to the
    # full sheared-resultant/Puiseux machinery.
    fast_nodes: bool = True


DEFAULT = EngineConfig()
