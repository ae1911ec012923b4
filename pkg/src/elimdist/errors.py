"""Exception types shared across the package."""


class ElimdistError(Exception):
    """Base class for all errors raised by elimdist."""


class GraphFormatError(ElimdistError, ValueError):
    """Malformed graph6, edge-list or JSON graph input."""

    def __init__(self, message, offset=None, line=None):
        self.offset = offset
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"byte {offset}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)


class BudgetExhausted(ElimdistError):
    """A search ran out of its node budget before reaching an answer.

    This is never a negative answer: callers must treat it as "unknown".
    """

    def __init__(self, budget):
        self.budget = budget
        super().__init__(f"search budget of {budget} nodes exhausted")


class InvalidObstructionSet(ElimdistError, ValueError):
    """An obstruction set violates the antichain / non-isomorphism rules."""


class NotMinorClosedError(ElimdistError):
    """A membership predicate was observed not to be closed under minors."""

    def __init__(self, member, minor):
        self.member = member
        self.minor = minor
        super().__init__(
            "membership predicate is not minor-closed: a member has a "
            "non-member one-step minor"
        )


class FormulaError(ElimdistError, ValueError):
    """Ill-formed formula, unbound variable or bad colour index."""
