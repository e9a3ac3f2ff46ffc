"""Exception types shared across the package."""


class NotStrict(ValueError):
    """A parts sequence is not a strict partition."""


class NotContained(ValueError):
    """The inner shape does not fit inside the outer shape."""


class InvalidIndex(ValueError):
    """An operator index lies outside 1..n-1."""


class BrokenSemistandard(ValueError):
    """A filling violates the shifted semistandard or canonical-form rules.

    Raised by apply_to_tableau when an operator result fails validation;
    on reading words of actual tableaux this indicates an implementation
    bug, since the operators are closed on each ShST(shape, n).
    """


class NotAString(ValueError):
    """An {i, i'}-component matches neither legal string shape."""


class NotUnique(ValueError):
    """A connected component has more than one source vertex."""


class NotStrictWeight(ValueError):
    """A highest weight is not a strict partition padded with zeros."""


class MissingArrow(ValueError):
    """A delta statistic was requested where a required arrow is absent."""


class MalformedGraph(ValueError):
    """An imported graph does not conform to the JSON schema."""
