"""Exception hierarchy for the cuntz package."""


class CuntzError(ValueError):
    """Base class for every error raised by this package."""


class EmptyPeriod(CuntzError):
    pass


class LetterOutOfRange(CuntzError):
    def __init__(self, letter, n, position=None):
        self.letter = letter
        self.n = n
        self.position = position
        where = "" if position is None else f" at position {position}"
        super().__init__(f"letter {letter} outside 1..{n}{where}")


class NotInGroupoid(CuntzError):
    pass


class NotComposable(CuntzError):
    pass


class NotInUHFGroupoid(CuntzError):
    pass


class DepthTooSmall(CuntzError):
    pass


class NotInIntersection(CuntzError):
    pass


class NotInAlgebra(CuntzError):
    pass


class NotInR(CuntzError):
    pass


class CharacterizationMismatch(AssertionError):
    """The two descriptions of the Volterra spectrum disagreed on a point."""


class ExpressionSyntaxError(CuntzError):
    def __init__(self, message, text="", position=0):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}")
