"""Exception types shared across the package."""


class ContractViolationError(ValueError):
    """An input violates a documented precondition."""


class UnsupportedDegreeError(ValueError):
    """Spherical-harmonics degree outside the supported range [0, 3]."""


class ConfigValidationError(ValueError):
    """A configuration file or manifest fails validation."""


class NumericalFailureError(RuntimeError):
    """A non-finite quantity or failed numerical check was encountered."""


class DegenerateReconstructionError(RuntimeError):
    """A reconstruction produced no usable geometry."""
