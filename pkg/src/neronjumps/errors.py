"""Exception hierarchy shared by all subpackages."""


class NeronJumpsError(Exception):
    """Base class. ``code`` is a short machine-readable tag used by the CLI."""

    code = "error"


class StructuralError(NeronJumpsError, ValueError):
    code = "structural"


class UnsupportedInput(NeronJumpsError, ValueError):
    code = "unsupported-input"


class RootOfUnityError(NeronJumpsError, ValueError):
    code = "root-of-unity"


class PrecisionExhausted(NeronJumpsError, ArithmeticError):
    code = "precision-exhausted"


class NotInjective(NeronJumpsError, ArithmeticError):
    code = "not-injective"


class InconsistencyError(NeronJumpsError, ValueError):
    code = "inconsistency"


class BelowThreshold(NeronJumpsError, ValueError):
    code = "below-threshold"


class EquivarianceError(NeronJumpsError, ValueError):
    code = "equivariance"


class DescriptorError(NeronJumpsError, ValueError):
    code = "descriptor"


class InternalError(NeronJumpsError, RuntimeError):
    code = "internal-error"
