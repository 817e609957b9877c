"""Exception types shared across the package."""


class PoleError(ArithmeticError):
    """A gamma-family function was evaluated at a nonpositive-integer pole."""


class InvalidEndpointError(ValueError):
    """The requested endpoint is not a special point of the polynomial family."""


class DegenerateInputError(ValueError):
    """Inputs collapse a formula onto its removable singularity (e.g. z equal to the endpoint)."""
