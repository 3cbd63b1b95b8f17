"""Exception hierarchy with stable machine-readable codes."""


class QPlaneError(Exception):
    code = "E_INTERNAL"


class ParseError(QPlaneError, ValueError):
    code = "E_PARSE"

    def __init__(self, message, pos=None):
        self.pos = pos
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)


class ModeError(QPlaneError, ValueError):
    """Operation not available in the current field mode."""

    code = "E_MODE"


class WrongSigmaKind(QPlaneError, ValueError):
    """Toric-only operation given a flip twist, or vice versa."""

    code = "E_KIND"


class IncompatibleImages(QPlaneError, ValueError):
    """Generator images violate the xy = q yx compatibility identity."""

    code = "E_INCOMPATIBLE"

    def __init__(self, residual):
        self.residual = residual
        super().__init__(f"images are not compatible with xy = q*yx; residual {residual}")
