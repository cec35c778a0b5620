"""The twelve 12-regular nut graphs of odd order 17..39, shipped as fixtures.

Each fixture file holds the adjacency dictionary followed by one line with
the published kernel vector as comma-separated integers.
"""
from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .errors import IntegrityError, ParseError
from .exactla import IntVector
from .formats import parse_adjacency_dict
from .graphcore import Graph, degree_profile
from .nutcheck import is_nut, verify_stated_kernel

APPENDIX_ORDERS = tuple(range(17, 40, 2))


@dataclass(frozen=True)
class CatalogEntry:
    order: int
    graph: Graph
    stated_kernel: IntVector


def parse_fixture(text: str) -> tuple[Graph, IntVector]:
    end = text.rindex("}") + 1
    graph = parse_adjacency_dict(text[:end])
    kernel_line = text[end:].strip()
    try:
        kernel = tuple(int(x) for x in kernel_line.split(","))
    except ValueError:
        raise ParseError(f"bad kernel line {kernel_line[:40]!r}", offset=end) from None
    return graph, kernel


def load_fixture(order: int) -> CatalogEntry:
    path = resources.files("nutgraphs") / "data" / "appendix" / f"n{order}.txt"
    try:
        graph, kernel = parse_fixture(path.read_text())
    except (OSError, ParseError, ValueError) as exc:
        raise IntegrityError(f"appendix fixture n={order} is corrupt: {exc}") from exc
    if graph.order != order or len(kernel) != order:
        raise IntegrityError(
            f"fixture n={order}: graph order {graph.order}, kernel length {len(kernel)}")
    return CatalogEntry(order, graph, kernel)


def load_appendix() -> list[CatalogEntry]:
    return [load_fixture(n) for n in APPENDIX_ORDERS]


@dataclass(frozen=True)
class EntryReport:
    order: int
    regular: bool
    degree: int | None
    nut: bool
    kernel_match: bool

    @property
    def passed(self) -> bool:
        return self.regular and self.degree == 12 and self.nut and self.kernel_match

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"{status} n={self.order} regular={int(self.regular)} degree={self.degree} "
                f"nut={int(self.nut)} kernel_match={int(self.kernel_match)}")


def verify_entry(entry: CatalogEntry) -> EntryReport:
    prof = degree_profile(entry.graph)
    nut = is_nut(entry.graph).is_nut
    match = nut and verify_stated_kernel(entry.graph, entry.stated_kernel)
    return EntryReport(entry.order, prof.is_regular, prof.degree, nut, match)


def verify_appendix(entries: list[CatalogEntry] | None = None) -> list[EntryReport]:
    return [verify_entry(e) for e in (entries if entries is not None else load_appendix())]
