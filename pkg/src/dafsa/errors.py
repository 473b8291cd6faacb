class DafsaError(Exception):
    """Base class for every error raised by this package."""


class InvalidHandle(DafsaError):
    def __init__(self, state):
        super().__init__(f"dead or unknown state handle {state!r}")
        self.state = state


class AcyclicityViolation(DafsaError):
    pass


class DanglingReference(DafsaError):
    pass


class RegisterError(DafsaError):
    """The register's pairwise-inequivalence invariant would break."""


class OutOfOrderInput(DafsaError):
    def __init__(self, position: int, word: bytes, previous: bytes):
        super().__init__(
            f"word {position} ({word!r}) sorts before its predecessor ({previous!r})"
        )
        self.position = position
        self.word = word
        self.previous = previous


class ParseError(DafsaError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class UnsupportedVersion(ParseError):
    pass
