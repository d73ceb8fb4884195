"""Exception types shared across the package."""


class ConditionError(ValueError):
    """A divisibility or degree-sum precondition failed.

    Carries the audit report naming the failed clauses, so callers can show
    exactly which condition rejected the instance.
    """

    def __init__(self, report, message: str | None = None):
        self.report = report
        if message is None:
            failed = ", ".join(sorted({v.check for v in report.violations}))
            message = f"conditions failed: {failed}"
        super().__init__(message)


class InternalDefectError(RuntimeError):
    """The construction violated one of its own invariants.

    This is a bug in the solver, never a property of the input; user-facing
    tools map it to a distinct exit code.
    """
