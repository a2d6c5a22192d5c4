"""Stratified model of the primitive-ideal spectrum of a Toeplitz algebra.

For a domain with factor ranks (r_1, ..., r_s) the spectrum is modeled at
stratum granularity: one point per tuple i = (i_1, ..., i_s) with
0 <= i_j <= r_j, ordered componentwise and graded by the weight
|i| = sum(i_j).  Ideals of the algebra correspond to open subsets of the
spectrum, i.e. to down-closed sets of strata; the filtration ideal of
weight k collects all strata of weight at most k, and decomposes as the
union of the principal down-sets of the weight-k strata.

Each stratum carries a label: per coordinate, the pair (factor invariant
triple, coordinate index i_j).  Label-respecting poset automorphisms are
exactly the coordinate permutations that move a factor only onto an
isomorphic one, which is the rigidity statement this module makes
exhaustively checkable.

Canonical orders: strata are listed lexicographically; operation outputs
are sorted before return, so everything here is deterministic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from itertools import product as cartesian

from .cartan import InvariantTriple, invariant_triple, rank
from .domain import Domain
from .errors import (
    InvalidTuple,
    NotCoordinateInduced,
    PosetMismatch,
    SizeLimit,
    WeightOutOfRange,
)

DEFAULT_BUILD_LIMIT = 10**6
DEFAULT_AUTOMORPHISM_LIMIT = 10**4


@dataclass(frozen=True)
class StratumPoset:
    """Product-of-chains poset of strata, labeled by factor invariants.

    Identity (equality, hash) is carried by the ranks and the
    per-coordinate factor triples; everything else is derived and cached.
    """

    ranks: tuple[int, ...]
    factor_triples: tuple[InvariantTriple, ...]

    def __post_init__(self):
        if len(self.ranks) != len(self.factor_triples):
            raise ValueError("one factor triple per coordinate required")
        if any(r < 1 for r in self.ranks):
            raise ValueError("factor ranks are positive")
        if any(t.rank != r for r, t in zip(self.ranks, self.factor_triples)):
            raise ValueError("rank coordinate must match its factor triple")

    @property
    def size(self) -> int:
        return math.prod(r + 1 for r in self.ranks)

    @cached_property
    def strata(self) -> tuple[tuple[int, ...], ...]:
        """All strata in lexicographic order."""
        return tuple(cartesian(*(range(r + 1) for r in self.ranks)))

    @cached_property
    def index(self) -> dict[tuple[int, ...], int]:
        return {s: i for i, s in enumerate(self.strata)}

    @cached_property
    def covers(self) -> tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]:
        """Covering pairs (x, y): y equals x with one coordinate raised by 1."""
        out = []
        for x in self.strata:
            for j, (xj, rj) in enumerate(zip(x, self.ranks)):
                if xj < rj:
                    out.append((x, x[:j] + (xj + 1,) + x[j + 1:]))
        return tuple(sorted(out))

    def contains(self, i) -> bool:
        return (
            isinstance(i, tuple)
            and len(i) == len(self.ranks)
            and all(isinstance(c, int) and 0 <= c <= r for c, r in zip(i, self.ranks))
        )

    def check_stratum(self, i):
        if not self.contains(i):
            raise InvalidTuple(f"{i!r} is not a stratum of a poset with ranks {self.ranks}")

    def label(self, i) -> tuple[tuple[InvariantTriple, int], ...]:
        """Per-coordinate (factor triple, index) pairs for stratum i."""
        self.check_stratum(i)
        return tuple(zip(self.factor_triples, i))

    def label_multiset(self, i) -> tuple[tuple[InvariantTriple, int], ...]:
        """The label with coordinate order forgotten (sorted)."""
        return tuple(sorted(self.label(i)))


@dataclass(frozen=True)
class IdealDownSet:
    """An ideal of the algebra, modeled as a down-closed set of strata."""

    poset: StratumPoset
    members: frozenset[tuple[int, ...]]

    def __post_init__(self):
        for m in self.members:
            self.poset.check_stratum(m)
            for j, c in enumerate(m):
                if c > 0 and m[:j] + (c - 1,) + m[j + 1:] not in self.members:
                    raise ValueError(f"not down-closed below {m} in coordinate {j}")

    def sorted_members(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(self.members))


@dataclass(frozen=True)
class PosetAutomorphism:
    """Order-preserving bijection of the strata, stored as an image table.

    images[k] is the image of poset.strata[k].  Construction checks
    bijectivity, weight preservation, and that covers map to covers, which
    for a weight-preserving bijection of a graded poset is exactly the
    automorphism property.
    """

    poset: StratumPoset
    images: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        strata = self.poset.strata
        if len(self.images) != len(strata) or set(self.images) != set(strata):
            raise ValueError("images must be a bijection of the strata")
        for src, img in zip(strata, self.images):
            if sum(src) != sum(img):
                raise ValueError(f"weight not preserved at {src} -> {img}")
        index = self.poset.index
        for x, y in self.poset.covers:
            fx, fy = self.images[index[x]], self.images[index[y]]
            if any(a > b for a, b in zip(fx, fy)):
                raise ValueError(f"cover {x} -> {y} not preserved")

    def __call__(self, stratum):
        self.poset.check_stratum(stratum)
        return self.images[self.poset.index[stratum]]

    @property
    def is_identity(self) -> bool:
        return self.images == self.poset.strata

    def map_ideal(self, ideal: IdealDownSet) -> IdealDownSet:
        """Image of a down-set; stays down-closed because the map is an automorphism."""
        if ideal.poset != self.poset:
            raise PosetMismatch("ideal belongs to a different poset")
        return IdealDownSet(self.poset, frozenset(self(m) for m in ideal.members))


def build_spectrum(d: Domain, max_strata: int = DEFAULT_BUILD_LIMIT) -> StratumPoset:
    """Stratum poset of the domain's Toeplitz algebra spectrum."""
    ranks = tuple(rank(f) for f in d.factors)
    size = math.prod(r + 1 for r in ranks)
    if size > max_strata:
        raise SizeLimit(f"{size} strata exceed the bound {max_strata}")
    return StratumPoset(ranks, tuple(invariant_triple(f) for f in d.factors))


def solvable_length(p: StratumPoset) -> int:
    """Maximal weight: the length of the stabilized algebra as a solvable algebra.

    Equals the length of the longest maximal chain from the bottom stratum,
    and equals the rank of the domain.
    """
    return sum(p.ranks)


def _check_weight(p, k):
    if not isinstance(k, int) or isinstance(k, bool) or not 0 <= k <= solvable_length(p):
        raise WeightOutOfRange(
            f"weight {k!r} outside 0..{solvable_length(p)} for ranks {p.ranks}"
        )


def ideal_of_weight(p: StratumPoset, k: int) -> IdealDownSet:
    """The filtration ideal I_k: all strata of weight <= k."""
    _check_weight(p, k)
    return IdealDownSet(p, frozenset(s for s in p.strata if sum(s) <= k))


def principal_downset(p: StratumPoset, i) -> IdealDownSet:
    """The tensor-product ideal indexed by i: all strata <= i componentwise."""
    i = tuple(i)
    p.check_stratum(i)
    members = frozenset(cartesian(*(range(c + 1) for c in i)))
    return IdealDownSet(p, members)


def bullet(p: StratumPoset, j: int, k: int) -> tuple[int, ...]:
    """The stratum with k in coordinate j and zeros elsewhere."""
    if not 0 <= j < len(p.ranks):
        raise InvalidTuple(f"coordinate {j} outside 0..{len(p.ranks) - 1}")
    if not 0 <= k <= p.ranks[j]:
        raise InvalidTuple(f"index {k} outside 0..{p.ranks[j]} in coordinate {j}")
    return tuple(k if t == j else 0 for t in range(len(p.ranks)))


def layer_components(p: StratumPoset, k: int) -> tuple[tuple[int, ...], ...]:
    """Weight-k strata: the connected components of the k-th filtration layer."""
    _check_weight(p, k)
    return tuple(s for s in p.strata if sum(s) == k)


def decompose_weight_ideal(p: StratumPoset, k: int) -> list[IdealDownSet]:
    """I_k as the union of the principal down-sets of the weight-k strata."""
    _check_weight(p, k)
    parts = [principal_downset(p, i) for i in layer_components(p, k)]
    union = frozenset().union(*(part.members for part in parts))
    assert union == ideal_of_weight(p, k).members, "weight-ideal decomposition broke"
    return parts


def ideal_union(a: IdealDownSet, b: IdealDownSet) -> IdealDownSet:
    """Union of ideals; automatically an ideal again (down-closure is checked)."""
    if a.poset != b.poset:
        raise PosetMismatch("ideals belong to different posets")
    return IdealDownSet(a.poset, a.members | b.members)


def maximal_chain_lengths(p: StratumPoset, i) -> int:
    """Common length of every maximal chain from the bottom stratum to i.

    The poset is graded, so this is the weight |i|.  See
    maximal_chain_count for the number of such chains.
    """
    i = tuple(i)
    p.check_stratum(i)
    return sum(i)


def maximal_chain_count(p: StratumPoset, i) -> int:
    """Number of maximal bottom-to-i chains: the multinomial |i|! / prod(i_j!)."""
    i = tuple(i)
    p.check_stratum(i)
    return math.factorial(sum(i)) // math.prod(math.factorial(c) for c in i)


def poset_automorphisms(
    p: StratumPoset,
    respect_labels: bool = True,
    max_strata: int = DEFAULT_AUTOMORPHISM_LIMIT,
) -> list[PosetAutomorphism]:
    """All poset automorphisms, by brute-force backtracking over the grading.

    Strata are matched level by level (weight ascending); a candidate image
    must share weight, cover degrees, and (when respect_labels) the label
    multiset, and every already-placed lower cover must land on a lower
    cover of the candidate.  A weight-preserving bijection that sends
    covers to covers is an automorphism, so the search is exact.
    """
    if p.size > max_strata:
        raise SizeLimit(f"{p.size} strata exceed the bound {max_strata}")
    strata = p.strata
    n = len(strata)
    index = p.index

    down = [[] for _ in range(n)]  # lower-cover indices per stratum
    up_degree = [0] * n
    for x, y in p.covers:
        xi, yi = index[x], index[y]
        down[yi].append(xi)
        up_degree[xi] += 1

    def profile(si):
        key = (sum(strata[si]), len(down[si]), up_degree[si])
        if respect_labels:
            key += (p.label_multiset(strata[si]),)
        return key

    classes: dict[object, list[int]] = {}
    for si in range(n):
        classes.setdefault(profile(si), []).append(si)
    candidates = {si: classes[profile(si)] for si in range(n)}

    order = sorted(range(n), key=lambda si: (sum(strata[si]), strata[si]))
    down_sets = [frozenset(d) for d in down]
    mapping = [-1] * n
    used = [False] * n
    found: list[tuple[tuple[int, ...], ...]] = []

    def extend(t):
        if t == n:
            found.append(tuple(strata[mapping[si]] for si in range(n)))
            return
        x = order[t]
        for y in candidates[x]:
            if used[y]:
                continue
            if all(mapping[d] in down_sets[y] for d in down[x]):
                mapping[x] = y
                used[y] = True
                extend(t + 1)
                used[y] = False
        mapping[x] = -1

    extend(0)
    return [PosetAutomorphism(p, images) for images in sorted(found)]


def factor_permutation_of(a: PosetAutomorphism) -> tuple[int, ...]:
    """The coordinate permutation inducing a: coordinate j moves to sigma[j].

    Raises NotCoordinateInduced if no coordinate permutation reproduces a
    (never observed for products of chains).
    """
    p = a.poset
    s = len(p.ranks)
    sigma = []
    for j in range(s):
        img = a(bullet(p, j, 1))
        if sum(img) != 1:
            raise NotCoordinateInduced(f"atom of coordinate {j} maps to {img}")
        sigma.append(img.index(1))
    if len(set(sigma)) != s:
        raise NotCoordinateInduced(f"atoms collapse coordinates: {sigma}")
    for src, img in zip(p.strata, a.images):
        for j in range(s):
            if img[sigma[j]] != src[j]:
                raise NotCoordinateInduced(
                    f"{src} -> {img} disagrees with coordinate permutation {sigma}"
                )
    return tuple(sigma)


def _stratum_str(i) -> str:
    return ",".join(str(c) for c in i)


def to_dot(p: StratumPoset) -> str:
    """Hasse diagram in DOT syntax; node ids are the tuple strings."""
    lines = ["digraph spectrum {", "  rankdir=BT;"]
    for s in p.strata:
        lines.append(f'  "{_stratum_str(s)}" [label="{_stratum_str(s)}|{sum(s)}"];')
    for x, y in p.covers:
        lines.append(f'  "{_stratum_str(x)}" -> "{_stratum_str(y)}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_dict(p: StratumPoset) -> dict:
    """JSON-ready poset: {ranks, strata, covers, labels}."""
    return {
        "ranks": list(p.ranks),
        "strata": [list(s) for s in p.strata],
        "covers": [[list(x), list(y)] for x, y in p.covers],
        "labels": {
            _stratum_str(s): [[list(t.as_tuple()), c] for t, c in p.label(s)]
            for s in p.strata
        },
    }
