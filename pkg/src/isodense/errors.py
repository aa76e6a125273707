"""Exception types shared across the package."""


class IsodenseError(Exception):
    """Base class for every error raised by this package."""


class CapExceeded(IsodenseError, ValueError):
    """An explicit enumeration was requested on a carrier above its size cap."""

    def __init__(self, what, size, cap, hint=None):
        self.what = what
        self.size = size
        self.cap = cap
        msg = f"{what}: carrier has {size} elements, cap is {cap}"
        if hint:
            msg += f" ({hint})"
        super().__init__(msg)


class UndefinedIntersection(IsodenseError, ValueError):
    """I(F) was requested for a family with no non-empty member."""


class NotAGeneralizedTopology(IsodenseError, ValueError):
    """A family offered as open sets is missing the empty set or a union.

    ``witness`` is ``None`` when the empty set is missing, otherwise the pair of
    member bitmasks whose union is absent.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class DocumentError(IsodenseError, ValueError):
    """A JSON document could not be turned into a space, family or quasiorder."""


class UnknownStatement(IsodenseError, KeyError):
    """A statement id that is not in the catalog."""

    def __str__(self):
        return str(self.args[0]) if self.args else "unknown statement"
