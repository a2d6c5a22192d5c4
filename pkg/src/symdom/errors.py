"""Exception hierarchy shared by all symdom modules."""


class SymdomError(Exception):
    """Base class for every error raised by this package."""


class OutOfCanonicalRange(SymdomError):
    """Factor parameter outside the canonical Cartan parameter ranges.

    The ranges deliberately exclude the small-rank region where distinct
    family labels name isomorphic domains, so a rejected parameter is a
    signal, not something to normalize silently.
    """


class WrongArity(SymdomError):
    """Parameter count does not match the factor family."""


class EmptyProduct(SymdomError):
    """A domain needs at least one irreducible factor."""


class SizeLimit(SymdomError):
    """A requested enumeration exceeds its configured size bound."""


class WeightOutOfRange(SymdomError):
    """Weight index outside 0..solvable_length."""


class InvalidTuple(SymdomError):
    """Tuple is not a stratum of the poset (wrong length or out of bounds)."""


class PosetMismatch(SymdomError):
    """Operands belong to different stratum posets."""


class NotCoordinateInduced(SymdomError):
    """Poset automorphism is not induced by a coordinate permutation.

    Never expected for products of chains; exists to surface a
    counterexample instead of assuming rigidity.
    """


class NotFound(SymdomError):
    """No canonical factor realizes the requested invariant triple."""


class Ambiguous(SymdomError):
    """More than one canonical factor realizes the invariant triple."""

    def __init__(self, triple, matches):
        self.triple = triple
        self.matches = tuple(matches)
        names = ", ".join(str(m) for m in self.matches)
        super().__init__(f"{triple} matches more than one factor: {names}")


class DomainSyntaxError(SymdomError):
    """Domain expression does not match the grammar."""

    def __init__(self, position, expected, found):
        self.position = position
        self.expected = expected
        self.found = found
        super().__init__(
            f"syntax error at position {position}: expected {expected}, found {found}"
        )
