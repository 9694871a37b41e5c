"""Exception hierarchy.

Every error raised on purpose by the library derives from ``InitformsError``;
the CLI maps these to exit code 3.
"""


class InitformsError(Exception):
    pass


class PolySyntaxError(InitformsError, ValueError):
    def __init__(self, message, text="", position=0):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}")


class VarOutOfRange(InitformsError, ValueError):
    pass


class ZNotAllowed(InitformsError, ValueError):
    pass


class ArityMismatch(InitformsError, ValueError):
    pass


class DimMismatch(InitformsError, ValueError):
    pass


class DivisionByZeroPoly(InitformsError, ZeroDivisionError):
    pass


class TooManyPolys(InitformsError, ValueError):
    pass


class EmptyList(InitformsError, ValueError):
    pass


class AllZero(InitformsError, ValueError):
    pass


class EmptySet(InitformsError, ValueError):
    pass


class ZeroPolynomial(InitformsError, ValueError):
    pass


class PointNotInSet(InitformsError, ValueError):
    pass


class CounitFails(InitformsError):
    def __init__(self, index, got):
        self.index = index
        self.got = got
        super().__init__(f"counit law fails for x{index + 1}: z=0 gives {got}")


class CoassocFails(InitformsError):
    def __init__(self, index, lhs, rhs):
        self.index = index
        self.lhs = lhs
        self.rhs = rhs
        super().__init__(f"coassociativity fails for x{index + 1}")


class NotLocallyNilpotentWithinCap(InitformsError):
    def __init__(self, index, cap):
        self.index = index
        self.cap = cap
        super().__init__(f"D^k(x{index + 1}) nonzero for k = {cap}")


class NotAnAutomorphism(InitformsError, ValueError):
    pass


class ZeroImage(InitformsError, ValueError):
    def __init__(self, index):
        self.index = index
        super().__init__(f"image of x{index + 1} is zero")


class NoZTerms(InitformsError, ValueError):
    pass


class StarFails(InitformsError):
    def __init__(self, clause, index):
        self.clause = clause
        self.index = index
        super().__init__(f"condition (*) fails: {clause} clause at x{index + 1}")


class SNotFullRank(InitformsError, ValueError):
    pass


class EmptyInvariantList(InitformsError, ValueError):
    pass


class WitnessInvalid(InitformsError, ValueError):
    pass


class HypothesisFails(InitformsError):
    pass


class PreconditionFails(InitformsError, ValueError):
    pass
