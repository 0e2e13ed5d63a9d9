"""Finite labelled point sets carrying an equivalence relation.

Every coefficient ring and every tensor space in this package is indexed by
such a point set.  Labels are integers; the partition into classes records
which coordinate differences x_i - x_j may be inverted: only differences
between *inequivalent* labels ever acquire negative exponents.

A map of point sets is just a mapping of labels.  Maps that merge two
inequivalent labels are allowed as long as no inverted difference collapses;
the collapse itself is detected (and rejected) in the scalar ring.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import StructureError


@dataclass(frozen=True)
class PointSet:
    """An ordered set of integer labels plus a partition into classes."""

    labels: tuple[int, ...]
    classes: tuple[frozenset[int], ...]

    def __post_init__(self):
        if tuple(sorted(self.labels)) != self.labels:
            raise StructureError(f"labels must be sorted: {self.labels}")
        if len(set(self.labels)) != len(self.labels):
            raise StructureError(f"duplicate labels: {self.labels}")
        seen: set[int] = set()
        for cls in self.classes:
            if seen & cls:
                raise StructureError("classes overlap")
            seen |= cls
        if seen != set(self.labels):
            raise StructureError("classes must cover the labels exactly once")
        mins = [min(cls) for cls in self.classes] if self.classes else []
        if mins != sorted(mins):
            raise StructureError("classes must be sorted by least label")

    @classmethod
    def singletons(cls, labels) -> "PointSet":
        """Each label in its own class: all differences invertible."""
        labels = tuple(sorted(labels))
        return cls(labels, tuple(frozenset({i}) for i in labels))

    @classmethod
    def merged(cls, labels) -> "PointSet":
        """All labels in one class: nothing invertible."""
        labels = tuple(sorted(labels))
        if not labels:
            return cls((), ())
        return cls(labels, (frozenset(labels),))

    @classmethod
    def empty(cls) -> "PointSet":
        return cls((), ())

    def union(self, other: "PointSet") -> "PointSet":
        """Disjoint union; the two operands' classes stay distinct."""
        if set(self.labels) & set(other.labels):
            raise StructureError(
                f"label clash in union: {self.labels} vs {other.labels}")
        labels = tuple(sorted(self.labels + other.labels))
        classes = tuple(sorted(self.classes + other.classes, key=min))
        return PointSet(labels, classes)

    def same_class(self, i: int, j: int) -> bool:
        for cls in self.classes:
            if i in cls:
                return j in cls
        raise StructureError(f"unknown label {i} in {self.labels}")

    def index(self, label: int) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise StructureError(
                f"unknown label {label} in {self.labels}") from None

    def __contains__(self, label: int) -> bool:
        return label in self.labels

    def __len__(self) -> int:
        return len(self.labels)

    def __repr__(self):
        cls = ":".join("," .join(str(i) for i in sorted(c)) for c in self.classes)
        return f"PointSet({cls})" if cls else "PointSet(-)"
