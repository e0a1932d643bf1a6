"""Exception hierarchy shared by every module."""


class HyperringError(Exception):
    """Base class for all errors raised by the package."""


class TableError(HyperringError, ValueError):
    """Malformed operation table: wrong shape, out-of-range index, empty value."""


class ArityError(HyperringError, ValueError):
    """Argument count does not fit an (iterated) operation."""


class DomainError(HyperringError, ValueError):
    """Argument outside the domain of an operation (empty set, improper ideal...)."""


class AxiomError(HyperringError):
    """A structure failed validation; ``report`` holds the violations."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ConstructionError(HyperringError):
    """A derived object (quotient, localization, expansion...) is ill-defined."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class StructureAnomaly(HyperringError):
    """A set the theory says is a hyperideal turned out not to be one."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class BudgetExceeded(HyperringError):
    """An exhaustive scan would visit more tuples than the configured budget."""

    def __init__(self, required, budget):
        super().__init__(f"scan needs {required} tuples, budget is {budget}")
        self.required = required
        self.budget = budget


class ConsistencyError(HyperringError):
    """Two independent evaluations of the same notion disagree."""
