"""Possibly-reducible bounded symmetric domains as multisets of factors.

A Domain is a sorted tuple of CartanFactors: the normal form under the
factor total order (family tag, then parameters lexicographically).  Two
domains are isomorphic exactly when their normal forms are equal, which by
rigidity of the stabilized Toeplitz algebras also decides stable
isomorphism of those algebras.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from itertools import groupby

from .cartan import CartanFactor, InvariantTriple, invariant_triple
from .errors import EmptyProduct


@dataclass(frozen=True)
class Domain:
    """Normal form of a product of irreducible factors."""

    factors: tuple[CartanFactor, ...]

    def __post_init__(self):
        if not self.factors:
            raise EmptyProduct("a domain needs at least one factor")
        if any(a > b for a, b in zip(self.factors, self.factors[1:])):
            raise ValueError(
                "factors not in normal form order; build domains via product()"
            )

    def __str__(self):
        return " x ".join(str(f) for f in self.factors)


@dataclass(frozen=True)
class SymGroupDescriptor:
    """The group of permutations of isomorphic factors, by multiplicity block."""

    blocks: tuple[tuple[CartanFactor, int], ...]
    order: int


def product(factors) -> Domain:
    """Normal-form product of factors; associative and commutative."""
    factors = tuple(factors)
    if not factors:
        raise EmptyProduct("a domain needs at least one factor")
    return Domain(tuple(sorted(factors)))


def is_isomorphic(a: Domain, b: Domain) -> bool:
    """Multiset equality of factors; equivalently normal-form equality."""
    return a.factors == b.factors


def invariants(d: Domain) -> InvariantTriple:
    """Componentwise sum of the factor invariant triples."""
    return reduce(lambda s, f: s + invariant_triple(f), d.factors[1:],
                  invariant_triple(d.factors[0]))


def sym_group(d: Domain) -> SymGroupDescriptor:
    """Group equal factors and multiply the factorials of the multiplicities."""
    blocks = tuple((f, len(list(g))) for f, g in groupby(d.factors))
    order = math.prod(math.factorial(m) for _, m in blocks)
    return SymGroupDescriptor(blocks, order)
