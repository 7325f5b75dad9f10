"""Exception types shared across the package."""


class QuotcatError(Exception):
    """Base class for all library errors."""


class FieldMismatch(QuotcatError):
    """Scalars from different fields were mixed in one operation."""


class ShapeError(QuotcatError):
    """Dimensions of matrices, vectors or morphism blocks do not match."""


class MissingSuspension(QuotcatError):
    """An Ext-based operation was asked of a presentation without sigma."""


class NotRigid(QuotcatError):
    """The object handed to a quotient construction fails Ext^1(T,T) = 0."""


class NotRegular(QuotcatError):
    """A fraction denominator is not both epi and mono."""


class NotInS(QuotcatError):
    """A denominator lift is not inverted by the T-hom functor.

    This signals an inconsistency between the regular test on the quotient
    and the module-side test; it must never fire on valid data.
    """


class NoKernel(QuotcatError):
    """A construction needed a kernel whose search certified nonexistence."""


class NoCokernel(QuotcatError):
    """A construction needed a cokernel whose search certified nonexistence."""


class BoundsExceeded(QuotcatError):
    """A bounded search ran out of budget before reaching a certified answer.

    Distinct from a certified negative: the instance may still have a
    solution outside the configured budget.
    """


class GenerationError(QuotcatError):
    """Internal consistency check failed while generating a category."""


class InternalInconsistency(QuotcatError):
    """A solve that is guaranteed by theory to succeed did not."""
