"""Exception types shared across the package."""


class GuardError(RuntimeError):
    """A resource guard (enumeration size, minor count, dimension) was exceeded."""


class PaperAmbiguityError(RuntimeError):
    """A literal reading of an underdetermined construction failed its consistency check."""


class CertificateError(RuntimeError):
    """The minor-certificate induction broke down for some exponent vector."""

    def __init__(self, message: str, alpha: tuple[int, ...] | None = None):
        super().__init__(message)
        self.alpha = alpha
