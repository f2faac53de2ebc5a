"""Bundled example structures (the ``data/*.hkr`` files) and derived ones."""
from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .core import HyperringTable
from .morphisms import Morphism, from_labels, make_morphism
from .textio import StructureFile, parse_structure

__all__ = ["FIXTURE_FILES", "fixture_text", "load_fixture", "hyperfield5", "domain4", "s4",
           "s4_noone", "hyperfield5_squared", "swap", "file_endos"]

FIXTURE_FILES = {
    "P": "hyperfield5.hkr",
    "G": "domain4.hkr",
    "S4": "s4.hkr",
    "S4_noone": "s4_noone.hkr",
}


def fixture_text(key: str) -> str:
    return resources.files("krasner").joinpath("data", FIXTURE_FILES[key]).read_text("utf-8")


@lru_cache(maxsize=None)
def load_fixture(key: str) -> StructureFile:
    return parse_structure(fixture_text(key), FIXTURE_FILES[key])


def file_endos(sf: StructureFile) -> list[Morphism]:
    return [from_labels(m, sf.table, name=name) for name, m in sf.endos.items()]


def hyperfield5() -> HyperringTable:
    return load_fixture("P").table


def domain4() -> HyperringTable:
    return load_fixture("G").table


def s4() -> HyperringTable:
    return load_fixture("S4").table


def s4_noone() -> HyperringTable:
    return load_fixture("S4_noone").table


@lru_cache(maxsize=None)
def hyperfield5_squared() -> HyperringTable:
    from .constructions import product
    return product(hyperfield5(), hyperfield5(), "PxP")


def swap(PP: HyperringTable | None = None) -> Morphism:
    """(x,y) -> (y,x) on the square of a table built by ``product``."""
    PP = PP or hyperfield5_squared()
    N = int(round(PP.size ** 0.5))
    return make_morphism([(u % N) * N + u // N for u in PP.carrier], PP, PP, "swap")
