class DomainError(ValueError):
    """Argument outside the domain of a lattice family or sequence."""


class CapabilityError(ValueError):
    """Requested evaluation route is not available for a sequence."""


class InvariantError(ArithmeticError):
    """An exactness assertion failed inside a closed form."""


class ComplexParseError(ValueError):
    def __init__(self, lineno: int, message: str) -> None:
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class FixtureParseError(ValueError):
    def __init__(self, lineno: int, message: str) -> None:
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno
