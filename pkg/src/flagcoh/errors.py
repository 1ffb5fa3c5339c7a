class InputError(ValueError):
    """Malformed or out-of-range argument."""


class CapacityError(InputError):
    """Request exceeds a configured rank cap."""
