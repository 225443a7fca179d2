"""Exception hierarchy shared by every module of the package."""


class InvalidElement(ValueError):
    """Raised when raw data does not encode a member of the monoid."""


class InjectivityViolation(InvalidElement):
    pass


class NonPositiveValue(InvalidElement):
    pass


class TailConflict(InvalidElement):
    """An exceptional pair sits inside the tail but disagrees with the shift."""


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at offset {position}")
        self.position = position


class NotIdempotent(ValueError):
    pass


class NotAUnit(ValueError):
    pass


class NotInHClass(ValueError):
    pass


class FixedSetOutsideDomain(ValueError):
    pass


class KindMismatch(ValueError):
    pass


class EqualElements(ValueError):
    pass
