"""Ten built-in quotient algebras with reference results, stored as data files."""
from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from ..presentation import AlgebraError, AlgebraPresentation, algebra_from_dict

SLUGS = {
    "R(2AB)": "R2AB",
    "W(2B)": "W2B",
    "R(3ABD)": "R3ABD",
    "R(3C)": "R3C",
    "R(3H)": "R3H",
    "R(3K)": "R3K",
    "W(3ABCD)": "W3ABCD",
    "W(Q(3A)_1)": "WQ3A1",
    "W(3F)": "W3F",
    "W(3QLR)": "W3QLR",
}
NAMES = list(SLUGS)


class UnknownCatalogName(AlgebraError):
    def __init__(self, name: str):
        super().__init__("UnknownCatalogName", name)


@dataclass(frozen=True)
class GoldenRigid:
    name: str
    display: str
    hook: str
    g: tuple[int, ...]
    compatible: tuple[str, ...]
    mutual: tuple[str, ...]


@dataclass(frozen=True)
class GoldenData:
    algebra: str
    pair_count: int
    rigid: tuple[GoldenRigid, ...]
    hasse_nodes: tuple[tuple[str, tuple[str, ...]], ...]
    hasse_edges: tuple[tuple[str, str], ...]

    def names_by_g(self) -> dict[tuple[int, ...], str]:
        return {r.g: r.name for r in self.rigid}


def _slug(name: str) -> str:
    if name in SLUGS:
        return SLUGS[name]
    if name in SLUGS.values():
        return name
    raise UnknownCatalogName(name)


def _read(filename: str) -> dict:
    return json.loads(resources.files(__package__).joinpath("data", filename).read_text(encoding="utf-8"))


@lru_cache(maxsize=None)
def catalog_algebra(name: str) -> AlgebraPresentation:
    """Accepts the display name (``R(2AB)``) or the file slug (``R2AB``)."""
    return algebra_from_dict(_read(f"{_slug(name)}.json"))


@lru_cache(maxsize=None)
def golden_results(name: str) -> GoldenData:
    raw = _read(f"{_slug(name)}.golden.json")
    rigid = tuple(GoldenRigid(r["name"], r["display"], r["hook"], tuple(r["g"]),
                              tuple(r["compatible"]), tuple(r["mutual"])) for r in raw["rigid"])
    nodes = tuple((n["id"], tuple(n["members"])) for n in raw["hasse"]["nodes"])
    edges = tuple((a, b) for a, b in raw["hasse"]["edges"])
    return GoldenData(raw["algebra"], raw["pairCount"], rigid, nodes, edges)


from .compare import compare_with_golden  # noqa: E402

__all__ = ["NAMES", "SLUGS", "UnknownCatalogName", "GoldenRigid", "GoldenData",
           "catalog_algebra", "golden_results", "compare_with_golden"]
