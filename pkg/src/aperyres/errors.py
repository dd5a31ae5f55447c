"""Exception hierarchy. Every error raised by the library derives from AperyError."""


class AperyError(ValueError):
    pass


class EmptyGenerators(AperyError):
    pass


class NotCofinite(AperyError):
    pass


class MultiplicityTooSmall(AperyError):
    pass


class NotInCone(AperyError):
    pass


class InvalidAperyVector(AperyError):
    pass


class MultiplicityMismatch(AperyError):
    pass


class DimensionMismatch(AperyError):
    pass


class OutOfRange(AperyError):
    pass


class NotAMember(AperyError):
    pass


class NonCanonicalBasis(AperyError):
    pass


class InhomogeneousInput(AperyError):
    pass


class ContextMismatch(AperyError):
    pass


class InhomogeneousComplex(AperyError):
    pass


class NotAComplex(AperyError):
    pass


class DivisionNotExact(AperyError):
    pass


class NotSameFace(AperyError):
    pass


class BoundTooSmall(AperyError):
    pass
