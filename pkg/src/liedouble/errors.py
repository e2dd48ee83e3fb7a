"""Exception types shared across the package."""


class LieDoubleError(Exception):
    """Base class for all package errors."""


class DivisionByZero(LieDoubleError, ZeroDivisionError):
    """Division by an exactly-zero scalar."""


class NotUnivariate(LieDoubleError, ValueError):
    """Operation requires a polynomial in at most one variable."""


class ParseError(LieDoubleError, ValueError):
    """Malformed scalar literal, element expression, or catalog file."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class JacobiViolation(LieDoubleError):
    """A bracket table fails the Jacobi identity.

    Carries the offending 0-based basis triple and the nonzero Jacobiator
    coordinates."""

    def __init__(self, i, j, k, coords, labels=None):
        self.triple = (i, j, k)
        self.coords = coords
        if labels is None:
            shown = f"indices {(i + 1, j + 1, k + 1)}"
        else:
            shown = f"({labels[i]}, {labels[j]}, {labels[k]})"
        super().__init__(f"Jacobi identity fails on basis triple {shown}")


class AlgebraMismatch(LieDoubleError, ValueError):
    """Operands belong to different algebras."""


class ArityMismatch(LieDoubleError, TypeError):
    """Wrong number or type of slots for an identity evaluation."""


class IncompatibleQuantifier(LieDoubleError, ValueError):
    """Quantifier not admitted by the requested identity."""


class NotClosed(LieDoubleError):
    """A commutator escapes the span of the given generators."""

    def __init__(self, i, j):
        self.pair = (i, j)
        super().__init__(
            f"commutator of generators {i + 1} and {j + 1} lies outside the span"
        )


class NotIndependent(LieDoubleError):
    """Given generators are linearly dependent."""


class DenominatorVanishes(LieDoubleError, ZeroDivisionError):
    """A parameter assignment annihilates a scalar denominator."""


class NotADerivation(LieDoubleError):
    """A linear map fails the Leibniz rule.

    Carries the first 0-based basis pair where the rule breaks."""

    def __init__(self, pair):
        self.pair = pair
        super().__init__(
            f"Leibniz rule fails on basis pair {(pair[0] + 1, pair[1] + 1)}"
        )


class NotNilpotent(LieDoubleError):
    """Operation requires a nilpotent algebra."""


class UnknownName(LieDoubleError, KeyError):
    """No catalog entry under the requested name."""

    def __init__(self, name):
        self.name = name
        super().__init__(f"no catalog entry named {name!r}")

    def __str__(self):
        return self.args[0]


class ExcludedParameterValue(LieDoubleError, ValueError):
    """Assignment hits a parameter value excluded by the entry."""


class DuplicateName(LieDoubleError, ValueError):
    """Two catalog entries share a name."""
