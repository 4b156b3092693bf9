"""Exception types shared across the package."""


class PhotonboxError(Exception):
    """Base class for all errors raised by photonbox."""


class NotAModeError(PhotonboxError, ValueError):
    """An index triple does not correspond to a cavity mode."""


class CutoffBudgetError(PhotonboxError, RuntimeError):
    """A requested cutoff would enumerate more modes than the budget allows."""

    def __init__(self, cutoff: float, predicted: int, budget: int):
        self.cutoff = cutoff
        self.predicted = predicted
        self.budget = budget
        super().__init__(
            f"cutoff too large: omega_e={cutoff:g} predicts ~{predicted} modes, "
            f"budget is {budget}"
        )


class SolverError(PhotonboxError, RuntimeError):
    """Root finding failed to converge; carries diagnostics."""

    def __init__(self, message: str, **diagnostics):
        self.diagnostics = diagnostics
        detail = ", ".join(f"{k}={v!r}" for k, v in sorted(diagnostics.items()))
        super().__init__(f"{message} ({detail})" if detail else message)
