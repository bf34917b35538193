"""Sparse upper-triangular QUBO matrix with exact energy evaluation,
structural metrics, and JSON serialization.

Only cells (i, j) with i <= j are representable; the lower triangle is never
stored. Cells whose accumulated weight becomes 0 are dropped, so coupling
counts are well defined.
"""

from __future__ import annotations

import json


class QuboError(ValueError):
    pass


class QuboMatrix:
    """k x k upper-triangular QUBO matrix, energy
    H(x) = sum_i Q_ii x_i + sum_{i<j} Q_ij x_i x_j.

    Weights are integers for all built-in translations; reals are accepted
    for generality (and permitted by the JSON format).
    """

    __slots__ = ("k", "_cells")

    def __init__(self, k: int):
        if k < 0:
            raise QuboError(f"matrix dimension {k} < 0")
        self.k = k
        self._cells: dict[tuple[int, int], int | float] = {}

    def add(self, i: int, j: int, w) -> None:
        """Accumulate w into cell (i, j); drops the cell if the sum is 0."""
        if not 0 <= i <= j < self.k:
            raise QuboError(f"cell ({i}, {j}) outside upper triangle of k={self.k}")
        if w == 0:
            return
        new = self._cells.get((i, j), 0) + w
        if new == 0:
            del self._cells[(i, j)]
        else:
            self._cells[(i, j)] = new

    def get(self, i: int, j: int):
        return self._cells.get((i, j), 0)

    def entries(self) -> list[tuple[int, int, int | float]]:
        """Cells as (i, j, w), sorted by (i, j)."""
        return [(i, j, w) for (i, j), w in sorted(self._cells.items())]

    def energy(self, x):
        if len(x) != self.k:
            raise QuboError(f"bit-vector length {len(x)} != k={self.k}")
        e = 0
        for (i, j), w in self._cells.items():
            if x[i] and x[j]:
                e += w
        return e

    def coupling_count(self) -> int:
        """Number of non-zero strictly off-diagonal cells."""
        return sum(1 for (i, j) in self._cells if i < j)

    def nonzero_count(self) -> int:
        """All stored cells, diagonal included."""
        return len(self._cells)

    def stack(self, other: "QuboMatrix") -> None:
        """Cellwise add another matrix of the same dimension into this one."""
        if other.k != self.k:
            raise QuboError(f"dimension mismatch: {self.k} vs {other.k}")
        for (i, j), w in other._cells.items():
            self.add(i, j, w)

    def copy(self) -> "QuboMatrix":
        q = QuboMatrix(self.k)
        q._cells = dict(self._cells)
        return q

    def __eq__(self, other):
        return (
            isinstance(other, QuboMatrix)
            and self.k == other.k
            and self._cells == other._cells
        )

    def __repr__(self):
        return f"QuboMatrix(k={self.k}, nnz={len(self._cells)})"

    def to_dict(self) -> dict:
        return {"k": self.k, "entries": [[i, j, w] for i, j, w in self.entries()]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, doc: dict) -> "QuboMatrix":
        try:
            k = doc["k"]
            raw = doc["entries"]
        except (TypeError, KeyError) as exc:
            raise QuboError(f"malformed QUBO document: missing {exc}") from None
        if not isinstance(k, int):
            raise QuboError("malformed QUBO document: k must be an integer")
        q = cls(k)
        for entry in raw:
            if len(entry) != 3:
                raise QuboError(f"malformed entry {entry!r}")
            i, j, w = entry
            q.add(i, j, w)
        return q

    @classmethod
    def from_json(cls, text: str) -> "QuboMatrix":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise QuboError(f"invalid JSON: {exc}") from None
        return cls.from_dict(doc)
