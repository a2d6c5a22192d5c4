"""Irreducible bounded symmetric domains in canonical Cartan form.

The six families and their canonical parameter ranges:

    I(p, q)   p >= q >= 1          rank q   dim 2pq          tube iff p == q
    II(n)     n >= 5               rank n//2                 tube iff n even
              (n = 2q needs q >= 3, n = 2q+1 needs q >= 2)
    III(q)    q >= 2               rank q   dim q(q+1)       tube
    IV(q)     q >= 5               rank 2   dim 2q           tube
    V                              rank 2   dim 32           non-tube
    VI                             rank 3   dim 54           tube

Parameters below these ranges land in the small-rank coincidence region
(e.g. IV(4) is the same domain as I(2, 2)) and are rejected rather than
renamed.  Tube-type factors have Shilov-boundary dimension equal to half
the real dimension; the non-tube families carry their own closed forms.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import OutOfCanonicalRange, WrongArity

# Per-coordinate parameter cap so sweeps stay bounded; invariants are exact
# Python integers at any size below this.
MAX_PARAM = 10**6


class Family(enum.IntEnum):
    """Cartan family tag; the integer value fixes the factor sort order."""

    I = 1
    II = 2
    III = 3
    IV = 4
    V = 5
    VI = 6


PARAM_COUNTS = {
    Family.I: 2,
    Family.II: 1,
    Family.III: 1,
    Family.IV: 1,
    Family.V: 0,
    Family.VI: 0,
}


@dataclass(frozen=True, order=True)
class CartanFactor:
    """An irreducible domain in canonical form: family tag plus parameters.

    Instances are validated on construction, so every reachable value is
    canonical.  The derived total order (family, then parameters
    lexicographically) is the normal-form order used by Domain.
    """

    family: Family
    params: tuple[int, ...]

    def __post_init__(self):
        _validate(self.family, self.params)

    def __str__(self):
        if not self.params:
            return self.family.name
        return f"{self.family.name}({','.join(str(x) for x in self.params)})"


@dataclass(frozen=True, order=True)
class InvariantTriple:
    """(rank, real dimension, Shilov-boundary dimension) of a domain.

    Componentwise additive under domain products; supports `+`.
    """

    rank: int
    real_dim: int
    shilov_dim: int

    def __post_init__(self):
        if self.rank < 1 or self.real_dim < 1 or self.shilov_dim < 1:
            raise ValueError(f"invariant components must be positive: {self}")
        if self.shilov_dim > self.real_dim:
            raise ValueError(
                f"Shilov dimension cannot exceed real dimension: {self}"
            )

    def __add__(self, other):
        if not isinstance(other, InvariantTriple):
            return NotImplemented
        return InvariantTriple(
            self.rank + other.rank,
            self.real_dim + other.real_dim,
            self.shilov_dim + other.shilov_dim,
        )

    def as_tuple(self):
        return (self.rank, self.real_dim, self.shilov_dim)

    def __str__(self):
        return f"({self.rank}, {self.real_dim}, {self.shilov_dim})"


def _validate(family, params):
    if not isinstance(family, Family):
        raise WrongArity(f"unknown family: {family!r}")
    if not isinstance(params, tuple):
        raise WrongArity(f"{family.name}: params must be a tuple, got {params!r}")
    expected = PARAM_COUNTS[family]
    if len(params) != expected:
        raise WrongArity(
            f"family {family.name} takes {expected} parameter(s), got {len(params)}"
        )
    for x in params:
        if not isinstance(x, int) or isinstance(x, bool):
            raise WrongArity(f"{family.name}: parameters must be integers, got {x!r}")
        if x < 1:
            raise OutOfCanonicalRange(
                f"{family.name}: parameters must be >= 1, got {x}"
            )
        if x > MAX_PARAM:
            raise OutOfCanonicalRange(
                f"{family.name}: parameter {x} exceeds the cap {MAX_PARAM}"
            )
    if family is Family.I:
        p, q = params
        if p < q:
            raise OutOfCanonicalRange(
                f"I({p},{q}): canonical form needs p >= q (use make_factor to reorder)"
            )
    elif family is Family.II:
        n = params[0]
        if n < 5:
            raise OutOfCanonicalRange(
                f"II({n}): need n = 2q with q >= 3 or n = 2q+1 with q >= 2 (so n >= 5)"
            )
    elif family is Family.III:
        if params[0] < 2:
            raise OutOfCanonicalRange(f"III({params[0]}): need q >= 2")
    elif family is Family.IV:
        if params[0] < 5:
            raise OutOfCanonicalRange(f"IV({params[0]}): need q >= 5")


def make_factor(family, params=()):
    """Build a canonical CartanFactor, accepting a family name or tag.

    Family I parameters are reordered so p >= q (transposing the matrix
    space is an isomorphism, and the canonical tables assume p >= q).
    """
    if isinstance(family, str):
        try:
            family = Family[family]
        except KeyError:
            raise WrongArity(f"unknown family: {family!r}") from None
    else:
        family = Family(family)
    params = tuple(params)
    if family is Family.I and len(params) == 2:
        params = tuple(sorted(params, reverse=True))
    return CartanFactor(family, params)


def rank(f: CartanFactor) -> int:
    """Rank: the length of a maximal chain of orthogonal primitive tripotents."""
    if f.family is Family.I:
        return f.params[1]
    if f.family is Family.II:
        return f.params[0] // 2
    if f.family is Family.III:
        return f.params[0]
    if f.family is Family.IV or f.family is Family.V:
        return 2
    return 3  # VI


def real_dim(f: CartanFactor) -> int:
    """Real dimension of the domain."""
    if f.family is Family.I:
        p, q = f.params
        return 2 * p * q
    if f.family is Family.II:
        n = f.params[0]
        return n * (n - 1)  # 2q(2q-1) for n=2q, 2q(2q+1) for n=2q+1
    if f.family is Family.III:
        q = f.params[0]
        return q * (q + 1)
    if f.family is Family.IV:
        return 2 * f.params[0]
    if f.family is Family.V:
        return 32
    return 54  # VI


def is_tube(f: CartanFactor) -> bool:
    """Tube type: I(q,q), II(even), III, IV, VI."""
    if f.family is Family.I:
        return f.params[0] == f.params[1]
    if f.family is Family.II:
        return f.params[0] % 2 == 0
    return f.family is not Family.V


def shilov_dim(f: CartanFactor) -> int:
    """Real dimension of the Shilov boundary.

    Tube factors: half the real dimension.  Non-tube closed forms:
    I(p,q) with p > q gives 2pq - q^2, II(2q+1) gives 2q^2 + 3q, V gives 24.
    """
    if is_tube(f):
        return real_dim(f) // 2
    if f.family is Family.I:
        p, q = f.params
        return 2 * p * q - q * q
    if f.family is Family.II:
        q = f.params[0] // 2
        return 2 * q * q + 3 * q
    return 24  # V


def invariant_triple(f: CartanFactor) -> InvariantTriple:
    """Bundle (rank, real_dim, shilov_dim) for one factor."""
    return InvariantTriple(rank(f), real_dim(f), shilov_dim(f))
