"""Exception types shared by the whole package.

Validation errors (bad user input) derive from ``InputError`` so the CLI can
map them to exit code 2.  ``InternalInconsistency`` signals a bug in this
package, never bad input.
"""


class NsalgError(Exception):
    """Base class for all package errors."""


class InputError(NsalgError):
    """Invalid input; the CLI reports these with exit code 2."""


class EmptyGenerators(InputError):
    """A semigroup needs at least one generator."""


class NonPositive(InputError):
    """Generators and scales must be strictly positive."""


class NotMember(InputError):
    """The queried exponent does not lie in the semigroup."""


class NotSubalgebra(InputError):
    """A scaled coefficient generator falls outside the extension semigroup."""


class GluingInvalid(InputError):
    """A gluing precondition failed; the message names which one."""


class PreconditionFailed(InputError):
    """A hypothesis of a specialized check does not hold for the input."""


class NotFlat(InputError):
    """Matrix analysis is only defined for flat algebras."""


class BoundTooSmall(InputError):
    """An enumeration bound below the provable completeness threshold."""


class TooLarge(InputError):
    """Brute-force oracle refused an instance above its size cap."""


class InternalInconsistency(NsalgError):
    """A theorem-guaranteed invariant failed: a bug, not bad input."""
