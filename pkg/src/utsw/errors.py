class UtswError(Exception):
    pass


class UnsupportedSizeError(UtswError, ValueError):
    pass


class NoOriginError(UtswError, RuntimeError):
    pass


class UnlabelableCrossError(UtswError, RuntimeError):
    pass


class LabelConflictError(UtswError, RuntimeError):
    pass


class GraphFormatError(UtswError, ValueError):
    """Malformed graph or label file; ``lineno`` is 1-based."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)
