"""Exception types shared across the package."""


class RegoriError(Exception):
    """Base class for all package errors."""


class BudgetExceeded(RegoriError):
    """A search or closure passed its configured size bound."""


class DegreeMismatch(RegoriError, ValueError):
    """Permutations of different degrees were combined."""


class InvalidAction(RegoriError, ValueError):
    """A semidirect-product multiplier does not define an action."""


class OutOfRange(RegoriError, ValueError):
    """A family parameter lies outside the family's valid range."""


class NoSuchAction(RegoriError, ValueError):
    """No order-3 twist with the required fixed-point-freeness exists."""


class NotGenerating(RegoriError, ValueError):
    """The proposed pair does not generate the group."""


class InvalidGenus(RegoriError, ValueError):
    """Genus parameter below the valid minimum."""


class CoprimalityViolated(RegoriError, ValueError):
    """Cyclic extension degree shares a factor with both generator orders."""


class IncompatibleCongruences(RegoriError, ValueError):
    """A congruence system has no simultaneous solution."""


class InvalidModulus(RegoriError, ValueError):
    """Parameter outside the prime progression's domain."""


class PreconditionViolated(RegoriError, ValueError):
    """An argument violates a documented precondition."""


class NoSuchOrder(RegoriError, ValueError):
    """SL(2,p) has no element of the requested order."""


class OrderTooSmall(RegoriError, ValueError):
    """Commutator order below the range where the trace test applies."""


class ModulusMismatch(RegoriError, ValueError):
    """Matrices over different prime fields were combined."""


class InternalAssertion(RegoriError, RuntimeError):
    """A verified construction failed its own postcondition (a bug)."""
