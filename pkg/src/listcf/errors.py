"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class ListcfError(Exception):
    """Base class for all package errors."""


class InputError(ListcfError, ValueError):
    """Malformed or out-of-contract input."""


class DegenerateInput(InputError):
    """Geometric input violates the general-position contract."""


class GuardExceeded(ListcfError):
    """An exhaustive routine refused an instance above its size guard."""


class AlgorithmInfeasible(ListcfError):
    """An algorithm could not complete on the given input."""


class ListExhausted(AlgorithmInfeasible):
    """An uncolored vertex ran out of admissible colors."""

    def __init__(self, vertex, iteration, partial=None, trace=None):
        super().__init__(f"list of vertex {vertex} exhausted at iteration {iteration}")
        self.vertex = vertex
        self.iteration = iteration
        self.partial = partial
        self.trace = trace


class ListTooSmall(AlgorithmInfeasible):
    """A list-size precondition does not hold."""

    def __init__(self, vertex, size, required):
        super().__init__(f"list of vertex {vertex} has size {size}, need >= {required}")
        self.vertex = vertex
        self.size = size
        self.required = required


class GreedyStuck(AlgorithmInfeasible):
    """Greedy distinct coloring of a separator found no free color."""


class ColorerViolation(AlgorithmInfeasible):
    """An auxiliary colorer returned something that is not a proper k-coloring."""


class InvariantBreach(ListcfError, AssertionError):
    """A proved invariant failed at runtime; indicates a bug or unsound input."""


class ImprobableFailure(AlgorithmInfeasible):
    """A Las Vegas loop hit its redraw cap."""

    def __init__(self, attempts, witness=None):
        super().__init__(f"no successful draw within {attempts} attempts")
        self.attempts = attempts
        self.witness = witness
