"""The bundled fixture pack, plus a few programmatic builders used by tests."""
from __future__ import annotations

from functools import lru_cache

from .instance import Instance, bundled_pack_path, load


@lru_cache(maxsize=1)
def pack() -> Instance:
    return load(bundled_pack_path())


def subspatial_pack() -> list:
    return list(pack().subspatial.values())


def equilogical_pack() -> list:
    return list(pack().equilogical.values())


def pasm_pack() -> list:
    return list(pack().pasm_spans.values())


def numeric_pack(L: int = 3) -> list:
    return list(pack().numeric(L).values())


def small_subspatial(max_points: int = 3) -> list:
    return [sp for sp in subspatial_pack() if sp.A0.size <= max_points]
