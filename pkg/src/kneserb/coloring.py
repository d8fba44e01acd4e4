"""Color labels and total colorings of a Kneser graph."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Union

from .combinatorics import from_elements, rank, to_elements

if TYPE_CHECKING:
    from .kneser import KneserParams


@dataclass(frozen=True)
class SubsetLabel:
    """A color that is itself an n-subset of the ground set."""

    bits: int

    @property
    def elements(self) -> list[int]:
        return to_elements(self.bits)

    def __repr__(self) -> str:
        return f"SubsetLabel({self.elements})"


@dataclass(frozen=True)
class SyntheticLabel:
    value: int


ColorLabel = Union[SubsetLabel, SyntheticLabel]


def label_key(label: ColorLabel) -> tuple[int, int]:
    """Total order on labels: subsets first (colex), then synthetic integers."""
    if isinstance(label, SubsetLabel):
        # numeric order of equal-size masks is colex order
        return (0, label.bits)
    return (1, label.value)


def label_to_json(label: ColorLabel) -> dict:
    if isinstance(label, SubsetLabel):
        return {"subset": label.elements}
    return {"synthetic": label.value}


def label_from_json(obj: dict) -> ColorLabel:
    if not isinstance(obj, dict) or len(obj) != 1:
        raise ValueError(f"bad color object {obj!r}")
    if "subset" in obj:
        return SubsetLabel(from_elements(obj["subset"]))
    if "synthetic" in obj:
        value = obj["synthetic"]
        if not isinstance(value, int) or value < 0:
            raise ValueError(f"synthetic label must be a nonnegative int, got {value!r}")
        return SyntheticLabel(value)
    raise ValueError(f"bad color object {obj!r}")


@dataclass(frozen=True)
class Coloring:
    """Total map from the vertices of KG(m, n) to labels, indexed by colex rank.

    ``construction`` records which builder produced the coloring, if any.
    """

    params: KneserParams
    labels: tuple[ColorLabel, ...]
    construction: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.labels) != self.params.num_vertices:
            raise ValueError(
                f"coloring has {len(self.labels)} entries, KG({self.params.m},{self.params.n}) "
                f"has {self.params.num_vertices} vertices"
            )

    def __getitem__(self, vertex: int) -> ColorLabel:
        return self.labels[rank(vertex, self.params.n)]

    @property
    def color_count(self) -> int:
        return len(set(self.labels))

    def distinct_labels(self) -> list[ColorLabel]:
        return sorted(set(self.labels), key=label_key)

    def classes(self) -> dict[ColorLabel, list[int]]:
        """Label -> ranks of its vertices, labels in :func:`label_key` order."""
        groups: dict[ColorLabel, list[int]] = defaultdict(list)
        for i, label in enumerate(self.labels):
            groups[label].append(i)
        return {label: groups[label] for label in sorted(groups, key=label_key)}
