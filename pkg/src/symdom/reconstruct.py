"""Inverting the invariant map and sweeping the rigidity claims.

from_invariants solves each family's closed forms exactly (integer
divisibility only, no floating point) and returns the unique canonical
factor carrying a given (rank, dim, Shilov dim) triple.  The sweep
functions enumerate every canonical factor (or every small product domain)
in a bounded range and confirm, by brute force, that the triple is a
complete invariant there, that spectra reconstruct their domains, and that
the labeled spectrum poset is exactly as rigid as the factor multiset
predicts.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations_with_replacement

from .cartan import (
    MAX_PARAM,
    CartanFactor,
    Family,
    InvariantTriple,
    invariant_triple,
    is_tube,
    make_factor,
    rank,
    real_dim,
    shilov_dim,
)
from .domain import Domain, invariants, is_isomorphic, product, sym_group
from .errors import Ambiguous, NotFound
from .parsing import format_domain, parse_factor
from .spectrum import (
    StratumPoset,
    build_spectrum,
    bullet,
    decompose_weight_ideal,
    factor_permutation_of,
    ideal_of_weight,
    poset_automorphisms,
    principal_downset,
    solvable_length,
)


def _closed_form_matches(t: InvariantTriple) -> list[CartanFactor]:
    r, d, s = t.rank, t.real_dim, t.shilov_dim
    out = []
    # I(p, q): q = r, p = d / 2r; Shilov is d/2 when p == q, else 2pq - q^2
    if d % (2 * r) == 0:
        p = d // (2 * r)
        if r <= p <= MAX_PARAM:
            expected = d // 2 if p == r else 2 * p * r - r * r
            if s == expected:
                out.append(make_factor(Family.I, (p, r)))
    # II(2q): q = r >= 3, dim 2q(2q-1), tube
    if r >= 3 and 2 * r <= MAX_PARAM and d == 2 * r * (2 * r - 1) and 2 * s == d:
        out.append(make_factor(Family.II, (2 * r,)))
    # II(2q+1): q = r >= 2, dim 2q(2q+1), Shilov 2q^2 + 3q
    if r >= 2 and 2 * r + 1 <= MAX_PARAM and d == 2 * r * (2 * r + 1) and s == 2 * r * r + 3 * r:
        out.append(make_factor(Family.II, (2 * r + 1,)))
    # III(q): q = r >= 2, dim q(q+1), tube
    if r >= 2 and r <= MAX_PARAM and d == r * (r + 1) and 2 * s == d:
        out.append(make_factor(Family.III, (r,)))
    # IV(q): rank 2, dim 2q with q >= 5, tube
    if r == 2 and d % 2 == 0 and 5 <= d // 2 <= MAX_PARAM and 2 * s == d:
        out.append(make_factor(Family.IV, (d // 2,)))
    if (r, d, s) == (2, 32, 24):
        out.append(make_factor(Family.V))
    if (r, d, s) == (3, 54, 27):
        out.append(make_factor(Family.VI))
    return sorted(out)


def from_invariants(t: InvariantTriple) -> CartanFactor:
    """The unique canonical factor with this invariant triple.

    Raises NotFound when no family's closed form matches, and Ambiguous
    (carrying all matches) should more than one ever match.
    """
    matches = _closed_form_matches(t)
    if not matches:
        raise NotFound(f"no canonical factor has (rank, dim, shilov) = {t}")
    if len(matches) > 1:
        raise Ambiguous(t, matches)
    return matches[0]


def reconstruct_product(triples) -> Domain:
    """Domain whose factor triples realize the given multiset."""
    return product(from_invariants(t) for t in triples)


def factor_data_of_spectrum(p: StratumPoset) -> tuple[InvariantTriple, ...]:
    """Per-coordinate factor triples read off the poset labels."""
    return p.factor_triples


def iter_canonical_factors(max_param: int):
    """Every canonical factor with all parameters <= max_param (V, VI always)."""
    for q in range(1, max_param + 1):
        for p in range(q, max_param + 1):
            yield make_factor(Family.I, (p, q))
    for n in range(5, max_param + 1):
        yield make_factor(Family.II, (n,))
    for q in range(2, max_param + 1):
        yield make_factor(Family.III, (q,))
    for q in range(5, max_param + 1):
        yield make_factor(Family.IV, (q,))
    yield make_factor(Family.V)
    yield make_factor(Family.VI)


@dataclass(frozen=True)
class ReconstructionReport:
    """Findings of a complete-invariant sweep; empty findings mean injectivity."""

    scanned_count: int
    collisions: tuple[tuple[InvariantTriple, tuple[CartanFactor, ...]], ...]
    roundtrip_failures: tuple[CartanFactor, ...]
    tube_violations: tuple[CartanFactor, ...]
    max_param: int
    elapsed: float

    @property
    def ok(self) -> bool:
        return not (self.collisions or self.roundtrip_failures or self.tube_violations)

    def to_json_dict(self) -> dict:
        return {
            "scanned_count": self.scanned_count,
            "collisions": [
                [list(t.as_tuple()), [str(f) for f in fs]] for t, fs in self.collisions
            ],
            "roundtrip_failures": [str(f) for f in self.roundtrip_failures],
            "tube_violations": [str(f) for f in self.tube_violations],
            "max_param": self.max_param,
            "elapsed_ms": self.elapsed * 1000.0,
        }

    @classmethod
    def from_json_dict(cls, data) -> "ReconstructionReport":
        return cls(
            scanned_count=data["scanned_count"],
            collisions=tuple(
                (InvariantTriple(*t), tuple(parse_factor(f) for f in fs))
                for t, fs in data["collisions"]
            ),
            roundtrip_failures=tuple(parse_factor(f) for f in data["roundtrip_failures"]),
            tube_violations=tuple(parse_factor(f) for f in data["tube_violations"]),
            max_param=data["max_param"],
            elapsed=data["elapsed_ms"] / 1000.0,
        )


def _scan_chunk(factors):
    by_triple: dict[InvariantTriple, list[CartanFactor]] = {}
    roundtrip = []
    tube_bad = []
    count = 0
    for f in factors:
        count += 1
        t = invariant_triple(f)
        by_triple.setdefault(t, []).append(f)
        if is_tube(f) != (2 * shilov_dim(f) == real_dim(f)):
            tube_bad.append(f)
        try:
            if from_invariants(t) != f:
                roundtrip.append(f)
        except (NotFound, Ambiguous):
            roundtrip.append(f)
    return count, by_triple, roundtrip, tube_bad


def verify_complete_invariant(max_param: int, threads: int = 1) -> ReconstructionReport:
    """Scan all canonical factors with parameters <= max_param.

    Reports triple collisions, inversion round-trip failures, and
    violations of the tube criterion (tube iff Shilov dim is half the real
    dimension).  The scan may be partitioned across threads; merging is
    associative, so the report is identical either way.
    """
    start = time.perf_counter()
    factors = list(iter_canonical_factors(max_param))
    if threads > 1:
        chunk = max(1, len(factors) // threads)
        pieces = [factors[i:i + chunk] for i in range(0, len(factors), chunk)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_scan_chunk, pieces))
    else:
        results = [_scan_chunk(factors)]

    by_triple: dict[InvariantTriple, list[CartanFactor]] = {}
    roundtrip: list[CartanFactor] = []
    tube_bad: list[CartanFactor] = []
    count = 0
    for c, bt, rt, tb in results:
        count += c
        for t, fs in bt.items():
            by_triple.setdefault(t, []).extend(fs)
        roundtrip.extend(rt)
        tube_bad.extend(tb)

    collisions = tuple(
        (t, tuple(sorted(fs)))
        for t, fs in sorted(by_triple.items())
        if len(fs) > 1
    )
    return ReconstructionReport(
        scanned_count=count,
        collisions=collisions,
        roundtrip_failures=tuple(sorted(roundtrip)),
        tube_violations=tuple(sorted(tube_bad)),
        max_param=max_param,
        elapsed=time.perf_counter() - start,
    )


@dataclass(frozen=True)
class SpectrumSweepReport:
    """Findings of a spectrum-rigidity sweep over small product domains."""

    domains_checked: int
    violations: tuple[str, ...]
    max_rank: int
    max_factors: int
    max_param: int
    elapsed: float

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "domains_checked": self.domains_checked,
            "violations": list(self.violations),
            "max_rank": self.max_rank,
            "max_factors": self.max_factors,
            "max_param": self.max_param,
            "elapsed_ms": self.elapsed * 1000.0,
        }

    @classmethod
    def from_json_dict(cls, data) -> "SpectrumSweepReport":
        return cls(
            domains_checked=data["domains_checked"],
            violations=tuple(data["violations"]),
            max_rank=data["max_rank"],
            max_factors=data["max_factors"],
            max_param=data["max_param"],
            elapsed=data["elapsed_ms"] / 1000.0,
        )


def check_spectrum_rigidity(d: Domain) -> list[str]:
    """All spectrum-level invariants of one domain; returns violations.

    Checks: solvable length equals the rank; every weight ideal is the
    union of its principal down-sets; the label-respecting automorphism
    group has exactly the order of the factor symmetric group; every
    automorphism is coordinate-induced and moves each principal ideal
    bullet(j, k) onto one at an isomorphic coordinate; the factor data on
    the labels rebuilds the domain.
    """
    bad = []
    name = format_domain(d)
    p = build_spectrum(d)

    if solvable_length(p) != invariants(d).rank:
        bad.append(f"{name}: solvable length {solvable_length(p)} != rank")

    for k in range(solvable_length(p) + 1):
        parts = decompose_weight_ideal(p, k)
        union = frozenset().union(*(part.members for part in parts))
        if union != ideal_of_weight(p, k).members:
            bad.append(f"{name}: weight-{k} ideal decomposition mismatch")

    autos = poset_automorphisms(p, respect_labels=True)
    order = sym_group(d).order
    if len(autos) != order:
        bad.append(f"{name}: {len(autos)} automorphisms, sym order {order}")
    for a in autos:
        try:
            sigma = factor_permutation_of(a)
        except Exception as exc:  # NotCoordinateInduced would be a finding
            bad.append(f"{name}: non-coordinate automorphism: {exc}")
            continue
        for j, j2 in enumerate(sigma):
            if p.factor_triples[j] != p.factor_triples[j2]:
                bad.append(f"{name}: automorphism moves coordinate {j} onto "
                           f"non-isomorphic coordinate {j2}")
            for k in range(1, p.ranks[j] + 1):
                image = a.map_ideal(principal_downset(p, bullet(p, j, k)))
                if image != principal_downset(p, bullet(p, j2, k)):
                    bad.append(f"{name}: bullet({j},{k}) not mapped onto bullet({j2},{k})")

    rebuilt = reconstruct_product(factor_data_of_spectrum(p))
    if not is_isomorphic(rebuilt, d):
        bad.append(f"{name}: spectrum reconstruction gave {format_domain(rebuilt)}")
    return bad


def verify_spectrum_sweep(
    max_rank: int,
    max_factors: int,
    max_param: int = 3,
    pool=None,
) -> SpectrumSweepReport:
    """Run check_spectrum_rigidity over every multiset of pool factors.

    The default pool is every canonical factor with rank <= max_rank and
    all parameters <= max_param (parameterless factors included when their
    rank fits).
    """
    start = time.perf_counter()
    if pool is None:
        pool = [f for f in iter_canonical_factors(max_param) if rank(f) <= max_rank]
    checked = 0
    violations: list[str] = []
    for size in range(1, max_factors + 1):
        for combo in combinations_with_replacement(pool, size):
            checked += 1
            violations.extend(check_spectrum_rigidity(product(combo)))
    return SpectrumSweepReport(
        domains_checked=checked,
        violations=tuple(violations),
        max_rank=max_rank,
        max_factors=max_factors,
        max_param=max_param,
        elapsed=time.perf_counter() - start,
    )
