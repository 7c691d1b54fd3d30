from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any, Generic, TypeVar

T = TypeVar("T")


class Status(enum.Enum):
    FOUND = "found"
    NONE = "none"  # exhaustive search proved non-existence
    BUDGET = "budget"  # node limit hit; nothing can be concluded


class BudgetExceeded(Exception):
    pass


@dataclass
class SearchResult(Generic[T]):
    status: Status
    value: Any = None
    nodes: int = 0
    info: dict = field(default_factory=dict)

    @property
    def found(self) -> bool:
        return self.status is Status.FOUND

    def __bool__(self):
        return self.found


class NodeCounter:
    """Search-node counter that raises BudgetExceeded past `limit` (None = unlimited)."""

    __slots__ = ("limit", "nodes")

    def __init__(self, limit: int | None = None):
        self.limit = limit
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.limit is not None and self.nodes > self.limit:
            raise BudgetExceeded
