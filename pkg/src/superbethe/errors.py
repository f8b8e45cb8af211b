"""Exception types shared across the package."""


class PoleError(ArithmeticError):
    """A rational kernel was evaluated at one of its poles."""

    def __init__(self, what, u, v):
        super().__init__(f"{what} has a pole at ({u}, {v})")
        self.what = what
        self.pair = (u, v)


class DegenerateModelError(ArithmeticError):
    """A vacuum eigenvalue needed as a denominator vanished, or the vacuum is not an eigenvector."""


class ColoringMismatchError(ValueError):
    """Two families that must share a coloring do not."""


class EmptyColorError(Exception):
    """Raised by split enumerators when a color in the requested range has no parameters.

    Recursions catch it to cut their outer sum short.
    """

    def __init__(self, color):
        super().__init__(f"color {color} is empty")
        self.color = color


class NotEigenvectorError(ValueError):
    def __init__(self, first, second):
        super().__init__(f"basis terms {first[0]} and {second[0]} carry charges {first[1]} and {second[1]}")
        self.terms = (first, second)


class IdentifiabilityError(ArithmeticError):
    """The linear system for W coefficients does not determine every unknown.

    ``classes`` lists groups of splits whose monomials coincide on every model;
    ``class_sums`` holds the solved sum of W over each group when that reduced
    system is itself regular, else ``None``.
    """

    def __init__(self, classes, class_sums=None):
        super().__init__(f"{sum(len(c) > 1 for c in classes)} degenerate monomial classes")
        self.classes = classes
        self.class_sums = class_sums
