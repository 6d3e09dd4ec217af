"""Coloring, validation verdict and star-shaped analysis models."""

from __future__ import annotations

from collections.abc import Callable, Iterable, Mapping
from pathlib import Path

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from kneserlab.core import InstanceParams, Vertex, binom, rank, vertex_index
from kneserlab.exceptions import ColoringFormatError


class Coloring(BaseModel):
    """A total map from the vertices of the (n, k)-Kneser graph to [m].

    ``colors[r]`` is the color of the vertex with colex rank ``r``. Whether
    the map is proper is a separate question answered by ``validate``.
    """

    model_config = ConfigDict(frozen=True)

    n: int = Field(ge=1)
    k: int = Field(ge=1)
    m: int = Field(ge=1)
    colors: tuple[int, ...]

    @model_validator(mode="after")
    def _check_colors(self) -> Coloring:
        if self.k > self.n:
            raise ValueError(f"k={self.k} exceeds n={self.n}")
        expected = binom(self.n, self.k)
        if len(self.colors) != expected:
            raise ValueError(
                f"expected {expected} colors for ({self.n},{self.k}), got {len(self.colors)}"
            )
        bad = next((c for c in self.colors if not 1 <= c <= self.m), None)
        if bad is not None:
            raise ValueError(f"color {bad} outside [1,{self.m}]")
        return self

    @classmethod
    def from_rule(cls, n: int, k: int, m: int, rule: Callable[[Vertex], int]) -> Coloring:
        """Build a coloring by applying ``rule(vertex)`` in colex order."""
        return cls(n=n, k=k, m=m, colors=tuple(rule(v) for v in vertex_index(n, k).vertices))

    @classmethod
    def from_mapping(cls, n: int, k: int, m: int, mapping: Mapping[Vertex, int]) -> Coloring:
        return cls.from_rule(n, k, m, lambda v: mapping[v])

    @property
    def params(self) -> InstanceParams:
        return InstanceParams(n=self.n, k=self.k, m=self.m)

    def color_at(self, r: int) -> int:
        return self.colors[r]

    def color_of(self, vertex: Iterable[int]) -> int:
        return self.colors[rank(tuple(vertex), self.n, self.k)]

    def color_classes(self) -> dict[int, list[Vertex]]:
        """Vertices of every color in [m], each list in colex order."""
        classes: dict[int, list[Vertex]] = {color: [] for color in range(1, self.m + 1)}
        for vertex, color in zip(vertex_index(self.n, self.k).vertices, self.colors):
            classes[color].append(vertex)
        return classes

    def class_ranks(self) -> dict[int, list[int]]:
        classes: dict[int, list[int]] = {color: [] for color in range(1, self.m + 1)}
        for r, color in enumerate(self.colors):
            classes[color].append(r)
        return classes

    def with_colors(self, m: int) -> Coloring:
        """The same map viewed as an m-coloring (m at least the largest color used)."""
        return Coloring(n=self.n, k=self.k, m=m, colors=self.colors)

    def to_json(self, indent: int | None = None) -> str:
        return self.model_dump_json(indent=indent)

    @classmethod
    def from_json(cls, data: str | bytes) -> Coloring:
        try:
            return cls.model_validate_json(data)
        except ValidationError as exc:
            raise ColoringFormatError(f"invalid coloring document: {exc}") from exc


def load_coloring(path: Path) -> Coloring:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ColoringFormatError(f"cannot read coloring file {path}: {exc}") from exc
    return Coloring.from_json(text)


def save_coloring(coloring: Coloring, path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(coloring.to_json() + "\n", encoding="utf-8")
    return path


class Violation(BaseModel):
    """Two disjoint vertices sharing a color."""

    model_config = ConfigDict(frozen=True)

    s: Vertex
    t: Vertex
    color: int


class ValidationResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    violation: Violation | None = None

    @property
    def ok(self) -> bool:
        return self.violation is None


class ClassInfo(BaseModel):
    """Size and central elements of one color class."""

    model_config = ConfigDict(frozen=True)

    color: int
    size: int
    centrals: tuple[int, ...]

    @property
    def star_shaped(self) -> bool:
        return bool(self.centrals)

    @property
    def least_central(self) -> int | None:
        return self.centrals[0] if self.centrals else None


class StarReport(BaseModel):
    """Per-color star-shaped analysis of a coloring.

    Empty classes count as star-shaped with every node central.
    """

    model_config = ConfigDict(frozen=True)

    n: int
    k: int
    m: int
    classes: tuple[ClassInfo, ...]

    @property
    def alpha(self) -> int:
        return sum(1 for info in self.classes if info.star_shaped)

    @property
    def star_colors(self) -> list[int]:
        return [info.color for info in self.classes if info.star_shaped]

    @property
    def non_star_colors(self) -> list[int]:
        return [info.color for info in self.classes if not info.star_shaped]

    @property
    def max_non_star_size(self) -> int:
        return max((info.size for info in self.classes if not info.star_shaped), default=0)

    def info(self, color: int) -> ClassInfo:
        return self.classes[color - 1]

    def summary(self) -> dict[str, object]:
        return {
            "n": self.n,
            "k": self.k,
            "m": self.m,
            "alpha": self.alpha,
            "non_star_colors": self.non_star_colors,
            "max_non_star_size": self.max_non_star_size,
            "classes": [
                {
                    "color": info.color,
                    "size": info.size,
                    "star_shaped": info.star_shaped,
                    "centrals": list(info.centrals),
                }
                for info in self.classes
            ],
        }
