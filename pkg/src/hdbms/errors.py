"""Exception hierarchy shared by every module.

``GraphError`` subclasses are data errors (bad input files, unknown nodes) and
map to exit status 2 in the CLI; ``NoPath`` maps to exit status 3.
"""
from __future__ import annotations


class GraphError(Exception):
    """Base class for data errors raised while building or querying a graph."""

    def __init__(self, message: str, *, line: int | None = None, token: str | None = None):
        super().__init__(message)
        self.line = line
        self.token = token
        self.source: str | None = None

    def __str__(self) -> str:
        msg = super().__str__()
        if self.line is not None:
            msg = f"line {self.line}: {msg}"
        if self.source is not None:
            msg = f"{self.source}: {msg}"
        if self.token is not None:
            msg = f"{msg} (token {self.token!r})"
        return msg


class MalformedToken(GraphError):
    pass


class WeightConflict(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class UnknownNode(GraphError, KeyError):
    def __init__(self, node: object):
        super().__init__(f"unknown node {node!r}")
        self.node = node

    # KeyError.__str__ would repr() the whole message
    __str__ = GraphError.__str__


class NoPath(Exception):
    def __init__(self, start: int, goal: int):
        super().__init__(f"no path from {start} to {goal}")
        self.start = start
        self.goal = goal


class EmptyCandidates(ValueError):
    pass


class InvalidSpec(ValueError):
    pass
