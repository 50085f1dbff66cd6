"""Tame inertial pairs: the data model for mod-p representations whose
restriction to inertia lands in a maximal torus.

A pair records the residue field size q, the unramified degree f, a
cocharacter vector vbar with entries mod N = q^f - 1 describing the inertia
action, and a Weyl element w standing in for Frobenius.  Compatibility means
Frobenius conjugation matches the q-power map on inertia characters:
w . vbar = q . vbar (mod N), entrywise in cocharacter coordinates.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .dynamic import (
    ParabolicType,
    normalizer_element_in_parabolic,
    parabolic_of,
)
from .errors import GuardError, InvalidPairError
from .lattice import (
    Mat,
    Vec,
    identity_matrix,
    in_rational_span,
    mat_pow,
    rational_solve,
    vec_mod,
    vec_scale,
)
from .root_datum import (
    RootDatum,
    WeylElement,
    _pairing_functional,
    central_cochar_space,
    pair,
    weyl_fixed_space,
    weyl_from_matrix,
    weyl_from_word,
    weyl_group_elements,
)

ORACLE_RANK_CAP = 4
ORACLE_WEYL_CAP = 1152


def is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = 2
    while p * p <= q:
        if q % p == 0:
            break
        p += 1
    else:
        p = q
    while q % p == 0:
        q //= p
    return q == 1


@dataclass(frozen=True)
class TameInertialPair:
    """The tuple (q, f, vbar, w); vbar is stored reduced to [0, N)."""

    q: int
    f: int
    vbar: Vec
    w: WeylElement

    def __post_init__(self):
        if not is_prime_power(self.q):
            raise ValueError(f"q must be a prime power >= 2, got {self.q}")
        if self.f < 1:
            raise ValueError(f"f must be a positive integer, got {self.f}")
        if len(self.vbar) != len(self.w.matrix):
            raise ValueError(
                f"vbar has {len(self.vbar)} entries but the Weyl element "
                f"acts on rank {len(self.w.matrix)}")
        object.__setattr__(self, "vbar", vec_mod(self.vbar, self.modulus))

    @property
    def modulus(self) -> int:
        return self.q ** self.f - 1


def make_pair(datum: RootDatum, q: int, f: int, vbar, w) -> TameInertialPair:
    """Build a pair over a datum; w may be a WeylElement, a word, or a
    word string like "s0 s1"."""
    if not isinstance(w, WeylElement):
        w = weyl_from_word(datum, w)
    if len(vbar) != datum.rank:
        raise ValueError(
            f"vbar has {len(vbar)} entries, expected rank {datum.rank}")
    return TameInertialPair(q=q, f=f, vbar=tuple(vbar), w=w)


# ---------------------------------------------------------------------------
# validity

@dataclass(frozen=True)
class ValidityReport:
    """Outcome of the compatibility check.  Each failure is a triple
    (coordinate, value under the Weyl action, value scaled by q), both
    sides reduced mod the modulus."""

    valid: bool
    modulus: int
    failures: tuple[tuple[int, int, int], ...]

    def __bool__(self) -> bool:
        return self.valid


def _congruence_failures(p: TameInertialPair) -> tuple[tuple[int, int, int], ...]:
    n = p.modulus
    weyl_side = vec_mod(p.w.apply(p.vbar), n)
    scaled_side = vec_mod(vec_scale(p.q, p.vbar), n)
    return tuple(
        (i, a, b) for i, (a, b) in enumerate(zip(weyl_side, scaled_side))
        if a != b
    )


def validate_pair(datum: RootDatum, p: TameInertialPair) -> ValidityReport:
    """Check w . vbar = q . vbar (mod N).  Reports, never raises, on a
    mathematical failure; raises only on a rank mismatch with the datum."""
    if len(p.vbar) != datum.rank:
        raise ValueError(
            f"pair has {len(p.vbar)} coordinates, datum has rank {datum.rank}")
    failures = _congruence_failures(p)
    return ValidityReport(valid=not failures, modulus=p.modulus,
                          failures=failures)


def _require_valid(datum: RootDatum, p: TameInertialPair) -> None:
    report = validate_pair(datum, p)
    if not report:
        raise InvalidPairError(
            f"pair fails compatibility at coordinates "
            f"{[i for i, _, _ in report.failures]} (mod {report.modulus})")


# ---------------------------------------------------------------------------
# niveau and Frobenius order

def niveau(p: TameInertialPair) -> int:
    """Smallest f0 >= 1 with q^f0 . vbar = vbar (mod N); at most f since
    q^f = 1 mod N."""
    if _congruence_failures(p):
        raise InvalidPairError("niveau requires a compatible pair")
    n = p.modulus
    for k in range(1, p.f + 1):
        scale = pow(p.q, k, n) if n > 1 else 0
        if vec_mod(vec_scale(scale, p.vbar), n) == p.vbar:
            return k
    raise AssertionError("unreachable: q^f is 1 mod N")


@dataclass(frozen=True)
class WeylOrderReport:
    """Whether powers of w fall back to the identity at the niveau and at
    the full degree.  The degree power being the identity is the hypothesis
    of the lifting construction."""

    niveau: int
    niveau_power_is_identity: bool
    degree_power_is_identity: bool


def check_weyl_order(p: TameInertialPair) -> WeylOrderReport:
    f0 = niveau(p)
    ident = identity_matrix(len(p.w.matrix))
    return WeylOrderReport(
        niveau=f0,
        niveau_power_is_identity=mat_pow(p.w.matrix, f0) == ident,
        degree_power_is_identity=mat_pow(p.w.matrix, p.f) == ident,
    )


# ---------------------------------------------------------------------------
# irreducibility

def inertia_centralizer_roots(datum: RootDatum,
                              p: TameInertialPair) -> tuple[Vec, ...]:
    """Roots whose pairing with vbar vanishes mod N: the root system of the
    connected centralizer of the inertia image.  Lexicographically sorted."""
    _require_valid(datum, p)
    n = p.modulus
    return tuple(alpha for alpha in datum.roots
                 if pair(datum, alpha, p.vbar) % n == 0)


@dataclass(frozen=True)
class IrreducibilityResult:
    """Verdict with a certificate on failure: either a root killing vbar,
    or a noncentral w-fixed cocharacter cutting out a proper parabolic
    that contains the image."""

    irreducible: bool
    failing_root: Vec | None = None
    fixed_cochar: Vec | None = None

    def __bool__(self) -> bool:
        return self.irreducible


def is_G_irreducible(datum: RootDatum, p: TameInertialPair) -> IrreducibilityResult:
    """Decide whether no proper parabolic contains the image.

    True exactly when (a) no root pairing with vbar vanishes mod N and
    (b) the w-fixed cocharacter space is no larger than the central one.
    """
    killed = inertia_centralizer_roots(datum, p)
    if killed:
        return IrreducibilityResult(irreducible=False, failing_root=max(killed))
    fixed = weyl_fixed_space(datum, p.w)
    central = central_cochar_space(datum)
    if len(fixed) == len(central):
        return IrreducibilityResult(irreducible=True)
    noncentral = [v for v in fixed if not in_rational_span(central, v)]
    return IrreducibilityResult(irreducible=False, fixed_cochar=max(noncentral))


# ---------------------------------------------------------------------------
# brute-force oracle

def brute_force_parabolic_oracle(datum: RootDatum, p: TameInertialPair,
                                 limit: int | None = None) -> list[ParabolicType]:
    """Every proper parabolic root subset containing the torus that the pair
    lands in, enumerated directly: all Weyl translates of the standard
    parabolics, kept when w stabilizes them.

    Only meaningful when the inertia centralizer roots are empty (then any
    parabolic containing the image contains the torus).  Guarded by rank and
    Weyl group size; passing an explicit limit replaces the default guard.
    """
    _require_valid(datum, p)
    if inertia_centralizer_roots(datum, p):
        raise ValueError(
            "oracle requires empty inertia centralizer roots; some root "
            "pairing with vbar vanishes mod N")
    if limit is None:
        if datum.rank > ORACLE_RANK_CAP:
            raise GuardError(
                f"oracle out of range: rank {datum.rank} exceeds "
                f"{ORACLE_RANK_CAP}; pass an explicit limit to override")
        limit = ORACLE_WEYL_CAP
    return list(_stable_proper_parabolics(datum, p.w.matrix, limit))


@lru_cache(maxsize=None)
def _standard_parabolic_cochars(datum: RootDatum) -> tuple[Vec, ...]:
    """One integral defining cocharacter per proper standard parabolic:
    pairing zero on a proper subset of the simple roots, positive outside."""
    simples = datum.simple_root_vectors()
    rows = [_pairing_functional(datum, alpha) for alpha in simples]
    out = []
    for keep in itertools.product((0, 1), repeat=len(simples)):
        if not any(keep):
            continue  # every simple pairs to zero: the whole group, not proper
        rhs = [Fraction(k) for k in keep]
        sol = rational_solve(rows, rhs)
        scale = lcm(*(x.denominator for x in sol)) if sol else 1
        mu = tuple(int(x * scale) for x in sol)
        for alpha, k in zip(simples, keep):
            assert (pair(datum, alpha, mu) > 0) == bool(k)
        out.append(mu)
    return tuple(out)


@lru_cache(maxsize=None)
def _stable_proper_parabolics(datum: RootDatum, w_matrix: Mat,
                              limit: int) -> tuple[ParabolicType, ...]:
    w = WeylElement(matrix=w_matrix)
    seen = set()
    found = []
    for mu in _standard_parabolic_cochars(datum):
        for u in weyl_group_elements(datum, limit):
            candidate = parabolic_of(datum, u.apply(mu))
            if candidate.nonneg_roots in seen:
                continue
            seen.add(candidate.nonneg_roots)
            if normalizer_element_in_parabolic(datum, w, candidate):
                found.append(candidate)
    found.sort(key=lambda c: tuple(sorted(c.nonneg_roots)))
    return tuple(found)


# ---------------------------------------------------------------------------
# JSON form

def pair_to_dict(datum: RootDatum, p: TameInertialPair) -> dict:
    from .root_datum import build_root_datum, datum_to_dict

    try:
        is_preset = build_root_datum(datum.label) == datum
    except ValueError:
        is_preset = False
    out = {
        "group": datum.label if is_preset else datum_to_dict(datum),
        "q": p.q,
        "f": p.f,
        "vbar": list(p.vbar),
    }
    if p.w.word is not None:
        out["weyl_word"] = list(p.w.word)
    else:
        out["weyl_matrix"] = [list(row) for row in p.w.matrix]
    return out


def pair_from_dict(data: dict) -> tuple[RootDatum, TameInertialPair]:
    from .root_datum import build_root_datum, datum_from_dict

    if not isinstance(data, dict):
        raise ValueError("pair JSON must be an object")
    missing = {"group", "q", "f", "vbar"} - set(data)
    if missing:
        raise ValueError(f"pair JSON missing fields: {sorted(missing)}")
    group = data["group"]
    datum = (build_root_datum(group) if isinstance(group, str)
             else datum_from_dict(group))
    if "weyl_word" in data:
        w = weyl_from_word(datum, data["weyl_word"])
    elif "weyl_matrix" in data:
        w = weyl_from_matrix(datum, tuple(tuple(r) for r in data["weyl_matrix"]))
    else:
        raise ValueError("pair JSON needs weyl_word or weyl_matrix")
    return datum, make_pair(datum, data["q"], data["f"], data["vbar"], w)
