"""The lifting engine: crystalline character tuples and the averaging
operator that produces Frobenius-equivariant lifts.

A crystalline character tuple assigns one cocharacter to each of the f
unramified embedding slots.  A Frobenius shift rotates the slots; the
averaging operator xi sums Weyl-twisted shifts so that its output always
satisfies the kernel condition w . slot_j = slot_{j-1}.  Reducing a tuple
collapses it to a single cocharacter vector mod N = q^f - 1, and the lift
algorithm inverts that reduction on compatible pairs.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd

from .errors import (
    GuardError,
    InternalConsistencyError,
    LiftHypothesisError,
)
from .lattice import (
    Mat,
    Vec,
    identity_matrix,
    mat_add,
    mat_mul,
    mat_pow,
    mat_scale,
    mat_vec,
    smith_normal_form,
    solve_mod,
    vec_add,
    vec_mod,
    zero_vec,
)
from .root_datum import RootDatum, WeylElement, is_regular_cochar
from .tame_reps import TameInertialPair, _require_valid

EXHAUSTIVE_CAP = 10 ** 7
EXHAUSTIVE_AUTO_CAP = 10 ** 6


@dataclass(frozen=True)
class CrysCharTuple:
    """One cocharacter per colabel slot j in Z/f."""

    datum: RootDatum
    q: int
    f: int
    slots: tuple[Vec, ...]

    def __post_init__(self):
        if self.f < 1:
            raise ValueError(f"f must be a positive integer, got {self.f}")
        if len(self.slots) != self.f:
            raise ValueError(
                f"expected {self.f} slots, got {len(self.slots)}")
        slots = tuple(tuple(s) for s in self.slots)
        for s in slots:
            if len(s) != self.datum.rank:
                raise ValueError(
                    f"slot {s} does not have rank {self.datum.rank}")
        object.__setattr__(self, "slots", slots)

    @property
    def modulus(self) -> int:
        return self.q ** self.f - 1


def make_crys_tuple(datum: RootDatum, q: int, slots) -> CrysCharTuple:
    slots = tuple(tuple(s) for s in slots)
    return CrysCharTuple(datum=datum, q=q, f=len(slots), slots=slots)


@dataclass(frozen=True)
class LiftResult:
    """A constructed lift together with re-verified soundness flags."""

    tuple: CrysCharTuple
    kernel_checked: bool
    reduction_checked: bool
    regular: bool


# ---------------------------------------------------------------------------
# the three basic operators

def frobenius_shift(v: CrysCharTuple) -> CrysCharTuple:
    """Rotate slots right: slot j of the output is slot j-1 of the input."""
    f = v.f
    slots = tuple(v.slots[(j - 1) % f] for j in range(f))
    return CrysCharTuple(datum=v.datum, q=v.q, f=f, slots=slots)


def weyl_act(w: WeylElement, v: CrysCharTuple) -> CrysCharTuple:
    """Apply w to every slot."""
    if len(w.matrix) != v.datum.rank:
        raise ValueError(
            f"Weyl element acts on rank {len(w.matrix)}, "
            f"tuple has rank {v.datum.rank}")
    return CrysCharTuple(datum=v.datum, q=v.q, f=v.f,
                         slots=tuple(w.apply(s) for s in v.slots))


def xi_operator(w: WeylElement, v: CrysCharTuple) -> CrysCharTuple:
    """The averaging operator: sum over i of w^i applied to the (f-1-i)-th
    Frobenius shift.  When w^f is the identity its output satisfies the
    kernel condition, whatever the input."""
    if len(w.matrix) != v.datum.rank:
        raise ValueError(
            f"Weyl element acts on rank {len(w.matrix)}, "
            f"tuple has rank {v.datum.rank}")
    f = v.f
    powers = [identity_matrix(v.datum.rank)]
    for _ in range(f - 1):
        powers.append(mat_mul(powers[-1], w.matrix))
    slots = []
    for j in range(f):
        total = zero_vec(v.datum.rank)
        for i in range(f):
            total = vec_add(total, mat_vec(powers[i], v.slots[(j + 1 + i) % f]))
        slots.append(total)
    return CrysCharTuple(datum=v.datum, q=v.q, f=f, slots=tuple(slots))


def reduction(v: CrysCharTuple) -> Vec:
    """Collapse a tuple to a single vector mod N: sum of q^j . slot_j.

    Rotating the slots multiplies the reduction by q; acting by w on the
    slots acts by w on the reduction.
    """
    n = v.modulus
    total = zero_vec(v.datum.rank)
    power = 1
    for s in v.slots:
        total = vec_add(total, tuple(power * c for c in s))
        power *= v.q
    return vec_mod(total, n)


def kernel_membership(w: WeylElement, v: CrysCharTuple) -> bool:
    """True iff w . slot_j equals slot_{j-1 mod f} for every j, exactly."""
    f = v.f
    return all(w.apply(v.slots[j]) == v.slots[(j - 1) % f] for j in range(f))


# ---------------------------------------------------------------------------
# lifting

def averaged_scale_matrix(w_matrix: Mat, q: int, f: int) -> Mat:
    """The reduction of the averaging operator: sum of q^(f-1-i) . w^i."""
    rank = len(w_matrix)
    total = mat_scale(q ** (f - 1), identity_matrix(rank))
    power = identity_matrix(rank)
    for i in range(1, f):
        power = mat_mul(power, w_matrix)
        total = mat_add(total, mat_scale(q ** (f - 1 - i), power))
    return total


def lift_inertia(datum: RootDatum, p: TameInertialPair) -> LiftResult:
    """Construct a Frobenius-equivariant tuple reducing to vbar.

    Solves the averaged congruence for a slot-0 seed, then averages it;
    soundness of the output is re-verified before returning.
    """
    _require_valid(datum, p)
    rank = datum.rank
    if mat_pow(p.w.matrix, p.f) != identity_matrix(rank):
        raise LiftHypothesisError(
            f"lifting requires the Weyl element's f-th power to be the "
            f"identity (f={p.f})")
    n = p.modulus
    xi_bar = averaged_scale_matrix(p.w.matrix, p.q, p.f)
    x = solve_mod(xi_bar, p.vbar, n)
    if x is None:
        raise InternalConsistencyError(
            "averaged congruence has no solution for a compatible pair")
    seed_slots = [x] + [zero_vec(rank) for _ in range(p.f - 1)]
    seed = CrysCharTuple(datum=datum, q=p.q, f=p.f, slots=tuple(seed_slots))
    v = xi_operator(p.w, seed)
    kernel_ok = kernel_membership(p.w, v)
    reduction_ok = reduction(v) == p.vbar
    if not (kernel_ok and reduction_ok):
        raise InternalConsistencyError(
            "constructed lift failed re-verification")
    return LiftResult(
        tuple=v,
        kernel_checked=kernel_ok,
        reduction_checked=reduction_ok,
        regular=all(is_regular_cochar(datum, s) for s in v.slots),
    )


# ---------------------------------------------------------------------------
# exactness check

def simple_trick_check(datum: RootDatum, q: int, f: int, w: WeylElement,
                       method: str = "auto", samples: int = 50,
                       seed: int = 0) -> bool:
    """Verify that the kernel of (q - w) on (Z/N)^r equals the image of the
    averaged scale matrix.

    The image always sits inside the kernel, because (q - w) composed with
    the averaging matrix is multiplication by N when w^f is the identity;
    the check compares sizes.  Methods: "exhaustive" enumerates all N^r
    vectors and counts both kernels directly; "snf" counts them through
    Smith normal form; "sample" draws random kernel elements and solves for
    preimages; "auto" picks exhaustive when N^r is small, snf otherwise.
    """
    rank = datum.rank
    if mat_pow(w.matrix, f) != identity_matrix(rank):
        raise LiftHypothesisError(
            "exactness check requires the Weyl element's f-th power to be "
            "the identity")
    n = q ** f - 1
    if n == 1:
        return True
    ker_mat = mat_add(mat_scale(q, identity_matrix(rank)),
                      mat_scale(-1, w.matrix))
    xi_bar = averaged_scale_matrix(w.matrix, q, f)
    if method == "auto":
        method = "exhaustive" if n ** rank <= EXHAUSTIVE_AUTO_CAP else "snf"
    if method == "exhaustive":
        if n ** rank > EXHAUSTIVE_CAP:
            raise GuardError(
                f"exhaustive exactness check out of range: {n}^{rank} "
                f"vectors exceed {EXHAUSTIVE_CAP}")
        ker_count = _count_kernel_by_enumeration(ker_mat, n)
        xi_ker_count = _count_kernel_by_enumeration(xi_bar, n)
    elif method == "snf":
        ker_count = _count_kernel_by_snf(ker_mat, n)
        xi_ker_count = _count_kernel_by_snf(xi_bar, n)
    elif method == "sample":
        return _sampled_inclusion_check(ker_mat, xi_bar, n, samples, seed)
    else:
        raise ValueError(f"unknown method {method!r}")
    image_count, rem = divmod(n ** rank, xi_ker_count)
    assert rem == 0
    return image_count == ker_count


def _count_kernel_by_enumeration(mat: Mat, n: int) -> int:
    # Odometer over (Z/n)^rank with residues updated incrementally: bumping
    # coordinate i adds column i once, and a wrap (n -> 0) is free mod n.
    rank = len(mat)
    cols = [tuple(row[i] % n for row in mat) for i in range(rank)]
    rows = range(len(mat))
    count = 0
    vec = [0] * rank
    res = [0] * len(mat)
    while True:
        if not any(res):
            count += 1
        for i in range(rank):
            vec[i] += 1
            col = cols[i]
            for j in rows:
                res[j] = (res[j] + col[j]) % n
            if vec[i] < n:
                break
            vec[i] = 0
        else:
            return count


def _count_kernel_by_snf(mat: Mat, n: int) -> int:
    d, _, _ = smith_normal_form(mat)
    count = 1
    for i in range(len(mat)):
        count *= gcd(d[i][i], n)
    return count


def _sampled_inclusion_check(ker_mat: Mat, xi_bar: Mat, n: int,
                             samples: int, seed: int) -> bool:
    """Draw random elements of ker(ker_mat mod n) and test each for a
    preimage under xi_bar.  Probabilistic: catches strict inclusion with
    high probability but cannot certify equality."""
    rank = len(ker_mat)
    d, _, v = smith_normal_form(ker_mat)
    strides = []
    for i in range(rank):
        g = gcd(d[i][i], n)
        strides.append((n // g, g))
    rng = random.Random(seed)
    for _ in range(samples):
        y = tuple(stride * rng.randrange(g) for stride, g in strides)
        x = vec_mod(mat_vec(v, y), n)
        assert vec_mod(mat_vec(ker_mat, x), n) == zero_vec(rank)
        if solve_mod(xi_bar, x, n) is None:
            return False
    return True


# ---------------------------------------------------------------------------
# JSON form

def lift_to_dict(result: LiftResult) -> dict:
    v = result.tuple
    return {
        "slots": [list(s) for s in v.slots],
        "q": v.q,
        "f": v.f,
        "checks": {
            "kernel": result.kernel_checked,
            "reduction": result.reduction_checked,
            "regular": result.regular,
        },
    }
