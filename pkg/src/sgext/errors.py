"""Exception types used across the library.

Every exception carries enough structure to be rendered as a
machine-readable diagnostic by the CLI (see ``cli.error_payload``).
"""


class SgextError(Exception):
    """Base class; ``details()`` returns the JSON-friendly payload."""

    def details(self):
        return {}

    @property
    def kind(self):
        name = type(self).__name__
        return name[:-5] if name.endswith("Error") else name


class IndexOutOfRangeError(SgextError):
    def __init__(self, row, col, value, order):
        super().__init__(f"table[{row}][{col}] = {value} outside [0, {order})")
        self.row, self.col, self.value, self.order = row, col, value, order

    def details(self):
        return {"row": self.row, "col": self.col, "value": self.value}


class NonAssociativeError(SgextError):
    def __init__(self, s, t, u):
        super().__init__(f"(s*t)*u != s*(t*u) at ({s},{t},{u})")
        self.s, self.t, self.u = s, t, u

    def details(self):
        return {"witness": [self.s, self.t, self.u]}


class NotRegularError(SgextError):
    def __init__(self, element):
        super().__init__(f"element {element} has no inverse")
        self.element = element

    def details(self):
        return {"element": self.element}


class NotInverseError(SgextError):
    def __init__(self, reason, witness):
        super().__init__(f"not an inverse semigroup: {reason} at {witness}")
        self.reason, self.witness = reason, witness

    def details(self):
        return {"reason": self.reason, "witness": list(self.witness)}


class ParentMismatchError(SgextError):
    pass


class EmptyIdealError(SgextError):
    pass


class NotIdealError(SgextError):
    def __init__(self, witness):
        super().__init__(f"not an ideal: product {witness} escapes")
        self.witness = witness

    def details(self):
        return {"witness": list(self.witness)}


class CapExceededError(SgextError):
    def __init__(self, what, size, cap):
        super().__init__(f"{what} needs {size}, cap is {cap}")
        self.what, self.size, self.cap = what, size, cap

    def details(self):
        return {"what": self.what, "size": self.size, "cap": self.cap}


class CarrierMismatchError(SgextError):
    pass


class NotIsomorphismError(SgextError):
    pass


class NotInvertibleError(SgextError):
    pass


class SquareClosureError(SgextError):
    """Raised when an operation requires S*S = S and the carrier fails it."""


class NotCliffordError(SgextError):
    pass


class NotMultiplierOfCenterError(SgextError):
    pass


class DomainMismatchError(SgextError):
    pass


class NotGroupError(SgextError):
    def __init__(self, reason):
        super().__init__(f"not a group: {reason}")
        self.reason = reason

    def details(self):
        return {"reason": self.reason}


class PHViolationError(SgextError):
    def __init__(self, which, g, h):
        super().__init__(f"partial homomorphism axiom {which} fails at ({g},{h})")
        self.which, self.g, self.h = which, g, h

    def details(self):
        return {"which": self.which, "g": self.g, "h": self.h}


class NotUnitalError(SgextError):
    pass


class TPAViolationError(SgextError):
    def __init__(self, axiom, witness):
        super().__init__(f"axiom {axiom} fails at {witness}")
        self.axiom, self.witness = axiom, witness

    def details(self):
        return {"axiom": self.axiom, "witness": list(self.witness)}


class ShapeMismatchError(SgextError):
    pass


class DegreeMismatchError(SgextError):
    pass


class NoConjugatorError(SgextError):
    def __init__(self, g, h):
        super().__init__(f"no conjugating multiplier exists for pair ({g},{h})")
        self.g, self.h = g, h

    def details(self):
        return {"g": self.g, "h": self.h}


class NotCentralError(SgextError):
    pass


class AssociativityFailureError(SgextError):
    def __init__(self, witness):
        super().__init__(f"product table not associative at {witness}")
        self.witness = witness

    def details(self):
        return {"witness": list(self.witness)}


class InputError(SgextError):
    """Malformed JSON input (missing keys, wrong types, bad references)."""
