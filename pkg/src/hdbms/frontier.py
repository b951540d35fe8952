"""Weight-ordered set of discovered, unvisited nodes."""
from __future__ import annotations

from sortedcontainers import SortedList

KEY_DIGITS = 9


def weight_gap(a: float, b: float) -> float:
    """|a - b| rounded so that 0.5 - 0.4 and 0.4 - 0.3 compare equal."""
    return round(abs(a - b), KEY_DIGITS)


class Frontier:
    """Nodes kept sorted by ``(weight, id)``.

    ``nearest`` and ``heaviest`` cost O(log n); ``add`` is idempotent.
    """

    def __init__(self):
        self._items = SortedList()
        self._weight: dict[int, float] = {}

    def add(self, node: int, weight: float) -> None:
        if node in self._weight:
            return
        self._weight[node] = weight
        self._items.add((weight, node))

    def discard(self, node: int) -> None:
        w = self._weight.pop(node, None)
        if w is not None:
            self._items.remove((w, node))

    def __contains__(self, node: object) -> bool:
        return node in self._weight

    def __len__(self) -> int:
        return len(self._weight)

    def __iter__(self):
        return (node for _, node in self._items)

    def nearest(self, q: float) -> int:
        """Member minimizing |w - q|; ties go to the smaller weight, then smaller id."""
        if not self._items:
            raise IndexError("nearest() on an empty frontier")
        items = self._items
        i = items.bisect_left((q, float("-inf")))
        best = None
        if i < len(items):
            best = items[i]
        if i > 0:
            below_w = items[i - 1][0]
            below = items[items.bisect_left((below_w, float("-inf")))]
            if best is None or (weight_gap(below[0], q), below[0]) <= (weight_gap(best[0], q), best[0]):
                best = below
        return best[1]

    def heaviest(self) -> int:
        """Member with the largest weight; ties go to the smaller id."""
        if not self._items:
            raise IndexError("heaviest() on an empty frontier")
        top_w = self._items[-1][0]
        return self._items[self._items.bisect_left((top_w, float("-inf")))][1]
