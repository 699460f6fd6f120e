"""Exception hierarchy shared by all modules."""


class WordRepError(ValueError):
    """Base class for domain errors raised by wordrep."""


# series
class RationalDenominatorNotUnit(WordRepError):
    pass


class OrderMismatch(WordRepError):
    pass


class FNotProper(WordRepError):
    pass


class SeriesParseError(WordRepError):
    pass


# graphs
class VertexOutOfRange(WordRepError):
    pass


class NotADivisor(WordRepError):
    pass


class PatternError(WordRepError):
    pass


# words
class LabelAbsent(WordRepError):
    pass


class CoverageError(WordRepError):
    pass


class EmptySet(WordRepError):
    pass


class NotUniform(WordRepError):
    pass


# constructions
class AllZeroLength(WordRepError):
    pass


class ConditionNotMet(WordRepError):
    pass


class NotAForest(WordRepError):
    pass


# semitransitive
class NotAcyclic(WordRepError):
    pass


class TooLarge(WordRepError):
    pass


# classify
class CorruptRecord(WordRepError):
    pass
