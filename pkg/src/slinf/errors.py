"""Exception hierarchy.

Every refusal raised by the library derives from :class:`SlinfError`; the CLI
maps :class:`ParseError` to exit status 2 and everything else to 1.
"""

from __future__ import annotations


class SlinfError(Exception):
    pass


class ParseError(SlinfError):
    def __init__(self, message: str, text: str, position: int, expected: list[str] | tuple[str, ...] = ()):
        self.text = text
        self.position = position
        self.expected = tuple(expected)
        detail = f"{message} at position {position}"
        if self.expected:
            detail += f" (expected {' or '.join(self.expected)})"
        super().__init__(detail)


class NonIntegralInput(SlinfError):
    pass


# Same failure, name used by the c.l.s. operations.
NotIntegral = NonIntegralInput


class NotDominant(SlinfError):
    pass


class NotLocallyConstant(SlinfError):
    pass


class InfinitelyManyValues(SlinfError):
    pass


class CriterionFails(SlinfError):
    pass


class NotFiniteType(SlinfError):
    pass


class NotIdealOrder(SlinfError):
    pass


class MalformedFactorList(SlinfError):
    pass


class RankMismatch(SlinfError):
    pass


class EInfinityNotEnumerable(SlinfError):
    pass
