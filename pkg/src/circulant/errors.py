"""Shared exception types."""


class CapacityError(RuntimeError):
    """A search or enumeration exceeded its configured cap.

    Carries the cap so callers can report exactly which limit was hit.
    """

    def __init__(self, message: str, cap: int):
        super().__init__(f"{message} (cap={cap})")
        self.cap = cap
