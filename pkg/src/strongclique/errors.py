"""Exception types raised by the strongclique package."""

from __future__ import annotations


class StrongCliqueError(ValueError):
    """Base class for all input and precondition errors."""


class InvalidGraphError(StrongCliqueError):
    """Malformed graph input (bad endpoint, self-loop, parse failure)."""

    def __init__(self, message: str, edge: tuple[int, int] | None = None, line: int | None = None):
        super().__init__(message)
        self.edge = edge
        self.line = line


class NotACliqueError(StrongCliqueError):
    """A vertex set that was required to be a clique is not one."""

    def __init__(self, pair: tuple[int, int]):
        super().__init__(f"vertices {pair[0]} and {pair[1]} are not adjacent")
        self.pair = pair


class PreconditionError(StrongCliqueError):
    """A solver was called on a graph outside its class.

    ``witness`` carries the obstruction found (an induced C4, a clique that is
    too large, a vertex of degree 4, ...).
    """

    def __init__(self, message: str, witness: object = None):
        super().__init__(message)
        self.witness = witness


class OracleCapExceeded(StrongCliqueError):
    """The exponential fallback was refused because the input is too large."""

    def __init__(self, n: int, cap: int):
        super().__init__(f"graph has {n} vertices; exact fallback is capped at {cap}")
        self.n = n
        self.cap = cap


class AssumptionError(StrongCliqueError):
    """A 3-SAT instance violates one of the assumptions (i)-(iii)."""

    def __init__(self, assumption: str, message: str):
        super().__init__(f"assumption ({assumption}) violated: {message}")
        self.assumption = assumption


class CnfParseError(StrongCliqueError):
    def __init__(self, message: str, line: int | None = None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(where + message)
        self.line = line
