"""Exception hierarchy shared by every module of the package."""


class GPError(Exception):
    """Base class for all errors raised by gpbalance."""


class InvalidParams(GPError, ValueError):
    """(n, k) does not define a generalized Petersen graph."""


class OutOfRange(GPError, ValueError):
    """An index argument lies outside its permitted window."""


class NotGuaranteed(GPError):
    """(n, k) is below the bound where the closed forms are proven."""


class InternalCaseGap(GPError, RuntimeError):
    """No subcase of a case analysis matched. Always a defect."""


class SameVertex(GPError, ValueError):
    pass


class EllOutOfRange(GPError, ValueError):
    pass
