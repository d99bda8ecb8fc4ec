"""Shared error type with stable, machine-readable codes."""


class ArpError(ValueError):
    """Domain error carrying a stable code.

    Codes (e.g. MONOTONICITY_VIOLATION, MISSING_RESPONSE, INSTANCE_TOO_LARGE)
    are asserted by tests and mapped to exit codes / HTTP statuses at the
    edges. ``details`` holds the full diagnostic list for errors that report
    every violation at once instead of failing fast.
    """

    def __init__(self, code: str, message: str, details: list[str] | None = None):
        super().__init__(f"{code}: {message}")
        self.code = code
        self.message = message
        self.details = details or []
