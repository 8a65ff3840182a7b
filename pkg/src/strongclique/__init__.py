"""Strong cliques: detection, extension, covering and partition."""

from .errors import (
    AssumptionError, CnfParseError, InvalidGraphError, NotACliqueError, OracleCapExceeded,
    PreconditionError, StrongCliqueError,
)
from .graph import Graph, build, complement, line_graph, named
from .solvers import Problem, SolverConfig, Verdict, classify_cubic, solve

__all__ = [
    "AssumptionError", "CnfParseError", "Graph", "InvalidGraphError", "NotACliqueError",
    "OracleCapExceeded", "PreconditionError", "Problem", "SolverConfig", "StrongCliqueError",
    "Verdict", "build", "classify_cubic", "complement", "line_graph", "named", "solve",
]
