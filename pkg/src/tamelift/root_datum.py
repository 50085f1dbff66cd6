"""Root data for split reductive groups, with Weyl elements as integer matrices.

A datum is the full combinatorial package (character/cocharacter lattices of a
split maximal torus, roots, coroots, a perfect pairing, a base of simple
roots), stored in explicit integer coordinates.  Weyl group elements act on
the cocharacter lattice; the contragredient action permutes the roots.

Conventions:
  * characters and cocharacters are integer row tuples of length `rank`;
  * pair(x, y) = x^T * pairing * y;
  * the root list is sorted lexicographically, so serialization is canonical
    and root indices are stable.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DatumValidationError, GuardError
from .lattice import (
    Mat,
    Vec,
    det,
    dot,
    identity_matrix,
    integer_kernel_basis,
    mat_mul,
    mat_sub,
    mat_transpose,
    mat_vec,
    matrix_order,
    rational_inverse,
    rational_solve,
)

PRESET_RANK_CAP = 8


@dataclass(frozen=True)
class RootDatum:
    rank: int
    roots: tuple[Vec, ...]
    coroots: tuple[Vec, ...]
    pairing: Mat
    simple_roots: tuple[int, ...]  # indices into roots, in Dynkin order
    label: str = "custom"

    def root_index(self, root: Vec) -> int:
        try:
            return _root_index_map(self)[tuple(root)]
        except KeyError:
            raise ValueError(f"{root} is not a root of {self.label}") from None

    def simple_root_vectors(self) -> tuple[Vec, ...]:
        return tuple(self.roots[i] for i in self.simple_roots)

    def simple_coroot_vectors(self) -> tuple[Vec, ...]:
        return tuple(self.coroots[i] for i in self.simple_roots)


@dataclass(frozen=True, eq=False)
class WeylElement:
    """Integer matrix acting on the cocharacter lattice, with an optional
    word in simple reflections recording how it was built."""

    matrix: Mat
    word: tuple[int, ...] | None = None

    def __eq__(self, other) -> bool:
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def apply(self, cochar: Vec) -> Vec:
        return mat_vec(self.matrix, cochar)


# ---------------------------------------------------------------------------
# pairing and pointwise queries

def pair(datum: RootDatum, character: Vec, cochar: Vec) -> int:
    """Canonical pairing <character, cochar> through the datum's form."""
    if len(character) != datum.rank or len(cochar) != datum.rank:
        raise ValueError(
            f"dimension mismatch: expected rank {datum.rank}, "
            f"got {len(character)} and {len(cochar)}"
        )
    return dot(character, mat_vec(datum.pairing, cochar))


def is_regular_cochar(datum: RootDatum, cochar: Vec) -> bool:
    """True when no root pairs to zero with the cocharacter."""
    return all(pair(datum, alpha, cochar) != 0 for alpha in datum.roots)


@lru_cache(maxsize=None)
def central_cochar_space(datum: RootDatum) -> Mat:
    """Canonical basis of the rational central directions, i.e. cocharacters
    killed by every root.  Saturated, so a basis over Z as well."""
    rows = tuple(_pairing_functional(datum, alpha) for alpha in datum.roots)
    return integer_kernel_basis(rows, datum.rank)


def _pairing_functional(datum: RootDatum, character: Vec) -> Vec:
    """Row vector a with <character, y> = a . y for all cochars y."""
    return mat_vec(mat_transpose(datum.pairing), character)


# ---------------------------------------------------------------------------
# validation and construction

def make_root_datum(rank, roots, coroots, pairing, simple_roots, label="custom") -> RootDatum:
    """Validate and canonicalize a root datum; raises DatumValidationError
    naming the first violated invariant."""
    roots = tuple(tuple(r) for r in roots)
    coroots = tuple(tuple(c) for c in coroots)
    pairing = tuple(tuple(p) for p in pairing)
    simple_roots = tuple(simple_roots)
    _check_structure(rank, roots, coroots, pairing, simple_roots)

    order = sorted(range(len(roots)), key=lambda i: roots[i])
    position = {old: new for new, old in enumerate(order)}
    datum = RootDatum(
        rank=rank,
        roots=tuple(roots[i] for i in order),
        coroots=tuple(coroots[i] for i in order),
        pairing=pairing,
        simple_roots=tuple(position[i] for i in simple_roots),
        label=label,
    )
    _check_axioms(datum)
    return datum


def _check_structure(rank, roots, coroots, pairing, simple_roots) -> None:
    def bad(invariant, msg):
        raise DatumValidationError(invariant, msg)

    if not isinstance(rank, int) or rank < 0:
        bad("rank", f"rank must be a nonnegative integer, got {rank!r}")
    if len(roots) != len(coroots):
        bad("root-coroot-bijection", f"{len(roots)} roots vs {len(coroots)} coroots")
    for name, vecs in (("roots", roots), ("coroots", coroots)):
        for v in vecs:
            if len(v) != rank or not all(isinstance(x, int) for x in v):
                bad(name, f"entries must be integer vectors of length {rank}: {v}")
    if len(pairing) != rank or any(len(row) != rank for row in pairing):
        bad("pairing-shape", f"pairing must be a {rank}x{rank} integer matrix")
    if any(not isinstance(x, int) for row in pairing for x in row):
        bad("pairing-shape", "pairing entries must be integers")
    if len(set(roots)) != len(roots):
        bad("roots-distinct", "duplicate root vectors")
    if any(not any(r) for r in roots):
        bad("roots-nonzero", "the zero vector cannot be a root")
    if len(set(simple_roots)) != len(simple_roots):
        bad("simple-roots", "repeated simple root index")
    for i in simple_roots:
        if not isinstance(i, int) or not (0 <= i < len(roots)):
            bad("simple-roots", f"simple root index {i!r} out of range")


def _check_axioms(datum: RootDatum) -> None:
    def bad(invariant, msg):
        raise DatumValidationError(invariant, msg)

    if det(datum.pairing) == 0:
        bad("pairing-nondegenerate", "pairing matrix is singular over Q")

    root_pos = {r: i for i, r in enumerate(datum.roots)}
    coroot_set = set(datum.coroots)
    for i, (alpha, alpha_v) in enumerate(zip(datum.roots, datum.coroots)):
        if pair(datum, alpha, alpha_v) != 2:
            bad("pair-root-coroot", f"<{alpha}, {alpha_v}> != 2")
        j = root_pos.get(tuple(-x for x in alpha))
        if j is None or datum.coroots[j] != tuple(-x for x in alpha_v):
            bad("negation-closure", f"-({alpha}) missing or its coroot mismatched")

    # every root reflection permutes the root set, and the coroot-side
    # reflection permutes the coroot set
    for alpha, alpha_v in zip(datum.roots, datum.coroots):
        functional = _pairing_functional(datum, alpha)
        images = set()
        for beta in datum.roots:
            image = tuple(b - pair(datum, beta, alpha_v) * a for b, a in zip(beta, alpha))
            if image not in root_pos:
                bad("reflection-closure",
                    f"reflection in {alpha} sends {beta} outside the root set")
            images.add(image)
        if len(images) != len(datum.roots):
            bad("reflection-closure", f"reflection in {alpha} is not injective on roots")
        co_images = set()
        for beta_v in datum.coroots:
            image = tuple(b - dot(functional, beta_v) * a for b, a in zip(beta_v, alpha_v))
            if image not in coroot_set:
                bad("coreflection-closure",
                    f"coreflection in {alpha_v} sends {beta_v} outside the coroot set")
            co_images.add(image)
        if len(co_images) != len(datum.coroots):
            bad("coreflection-closure", f"coreflection in {alpha_v} not injective")

    # the simple roots are a base: independent, and every root is a one-signed
    # integer combination of them
    simples = datum.simple_root_vectors()
    if simples:
        tr = mat_transpose(simples)
        for alpha in datum.roots:
            coeffs = rational_solve(tr, alpha)
            if coeffs is None:
                bad("base", f"root {alpha} is outside the span of the simple roots")
            if any(c.denominator != 1 for c in coeffs):
                bad("base", f"root {alpha} has non-integer simple-root coordinates")
            if not (all(c >= 0 for c in coeffs) or all(c <= 0 for c in coeffs)):
                bad("base", f"root {alpha} has mixed-sign simple-root coordinates")
        # independence: distinct roots have distinct coordinates, so the solve
        # above would fail to be unique only if simples were dependent
        if len(integer_kernel_basis(tr, len(simples))) != 0:
            bad("base", "simple roots are linearly dependent")
    elif datum.roots:
        bad("base", "datum has roots but no simple roots")


@lru_cache(maxsize=None)
def _root_index_map(datum: RootDatum) -> dict:
    return {r: i for i, r in enumerate(datum.roots)}


@lru_cache(maxsize=None)
def simple_root_coords(datum: RootDatum) -> tuple[Vec, ...]:
    """Coordinates of every root in the simple-root base (integer tuples)."""
    simples = datum.simple_root_vectors()
    if not simples:
        return tuple(() for _ in datum.roots)
    tr = mat_transpose(simples)
    out = []
    for alpha in datum.roots:
        coeffs = rational_solve(tr, alpha)
        out.append(tuple(int(c) for c in coeffs))
    return tuple(out)


@lru_cache(maxsize=None)
def positive_root_indices(datum: RootDatum) -> tuple[int, ...]:
    coords = simple_root_coords(datum)
    return tuple(i for i in range(len(datum.roots))
                 if any(c > 0 for c in coords[i]))


# ---------------------------------------------------------------------------
# presets

def general_linear(n: int) -> RootDatum:
    """GL(n) in permutation coordinates: both lattices Z^n, identity pairing,
    roots and coroots e_i - e_j."""
    _check_preset_rank("GL", n, n)
    roots = []
    for i in range(n):
        for j in range(n):
            if i != j:
                v = [0] * n
                v[i], v[j] = 1, -1
                roots.append(tuple(v))
    simples = [roots.index(_unit_diff(n, i, i + 1)) for i in range(n - 1)]
    return make_root_datum(n, roots, roots, identity_matrix(n), simples, f"GL{n}")


def special_linear(n: int) -> RootDatum:
    """SL(n), rank n-1.  Characters in the basis of the first n-1 coordinate
    characters of the GL(n) torus (the last is minus their sum); cocharacters
    in the basis e_k - e_n of the sum-zero lattice.  Pairing is then the
    identity."""
    if n < 2:
        raise ValueError("SL(n) needs n >= 2")
    r = n - 1
    _check_preset_rank("SL", n, r)

    def char(i, j):  # character e_i - e_j of the GL torus, reduced
        v = [0] * r
        if i < r:
            v[i] += 1
        else:
            v = [x - 1 for x in v]
        if j < r:
            v[j] -= 1
        else:
            v = [x + 1 for x in v]
        return tuple(v)

    def cochar(i, j):  # coroot e_i - e_j in the basis f_k = e_k - e_n
        v = [0] * r
        if i < r:
            v[i] += 1
        if j < r:
            v[j] -= 1
        return tuple(v)

    roots, coroots = [], []
    for i in range(n):
        for j in range(n):
            if i != j:
                roots.append(char(i, j))
                coroots.append(cochar(i, j))
    simples = [roots.index(char(i, i + 1)) for i in range(n - 1)]
    return make_root_datum(r, roots, coroots, identity_matrix(r), simples, f"SL{n}")


def symplectic(two_n: int) -> RootDatum:
    """Sp(2n): lattices Z^n, identity pairing, long roots 2e_i with coroots
    e_i, short roots +-e_i +- e_j self-paired."""
    if two_n < 2 or two_n % 2:
        raise ValueError("Sp(2n) needs a positive even size")
    n = two_n // 2
    _check_preset_rank("Sp", two_n, n)
    roots, coroots = [], []
    for i in range(n):
        for sign in (1, -1):
            v = [0] * n
            v[i] = 2 * sign
            roots.append(tuple(v))
            w = [0] * n
            w[i] = sign
            coroots.append(tuple(w))
    _add_dn_roots(n, roots, coroots)
    simples = [roots.index(_unit_diff(n, i, i + 1)) for i in range(n - 1)]
    last = [0] * n
    last[n - 1] = 2
    simples.append(roots.index(tuple(last)))
    return make_root_datum(n, roots, coroots, identity_matrix(n), simples, f"Sp{two_n}")


def special_orthogonal(m: int) -> RootDatum:
    """SO(m): type B for odd m (short roots e_i, coroots 2e_i), type D for
    even m (roots +-e_i +- e_j only)."""
    if m < 2:
        raise ValueError("SO(m) needs m >= 2")
    n = m // 2
    _check_preset_rank("SO", m, n)
    roots, coroots = [], []
    if m % 2:  # B_n
        for i in range(n):
            for sign in (1, -1):
                v = [0] * n
                v[i] = sign
                roots.append(tuple(v))
                w = [0] * n
                w[i] = 2 * sign
                coroots.append(tuple(w))
    _add_dn_roots(n, roots, coroots)
    simples = [roots.index(_unit_diff(n, i, i + 1)) for i in range(n - 1)]
    if m % 2:
        last = [0] * n
        last[n - 1] = 1
        simples.append(roots.index(tuple(last)))
    elif n >= 2:
        last = [0] * n
        last[n - 2] = last[n - 1] = 1
        simples.append(roots.index(tuple(last)))
    return make_root_datum(n, roots, coroots, identity_matrix(n), simples, f"SO{m}")


def g2_datum() -> RootDatum:
    """G2 in simple-root coordinates for characters and fundamental-coweight
    coordinates for cocharacters (identity pairing)."""
    pos_roots = [(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)]
    pos_coroots = [(2, -3), (-1, 2), (-1, 3), (1, 0), (1, -1), (0, 1)]
    roots = pos_roots + [tuple(-x for x in r) for r in pos_roots]
    coroots = pos_coroots + [tuple(-x for x in c) for c in pos_coroots]
    simples = [roots.index((1, 0)), roots.index((0, 1))]
    return make_root_datum(2, roots, coroots, identity_matrix(2), simples, "G2")


def _add_dn_roots(n, roots, coroots) -> None:
    for i in range(n):
        for j in range(i + 1, n):
            for si in (1, -1):
                for sj in (1, -1):
                    v = [0] * n
                    v[i], v[j] = si, sj
                    roots.append(tuple(v))
                    coroots.append(tuple(v))


def _unit_diff(n, i, j) -> Vec:
    v = [0] * n
    v[i], v[j] = 1, -1
    return tuple(v)


def _check_preset_rank(family: str, size: int, rank: int) -> None:
    if rank < 1:
        raise ValueError(f"{family}{size}: rank must be at least 1")
    if rank > PRESET_RANK_CAP:
        raise ValueError(f"{family}{size}: preset rank {rank} exceeds cap {PRESET_RANK_CAP}")


_PRESET_RE = re.compile(r"^(GL|SL|Sp|SO)(\d+)$")


def build_root_datum(name: str) -> RootDatum:
    """Build a preset datum from its name: GLn, SLn, Sp2n, SOm, or G2."""
    if name == "G2":
        return g2_datum()
    m = _PRESET_RE.match(name)
    if not m:
        raise ValueError(
            f"unknown group {name!r}; expected GLn, SLn, Sp2n, SOm, or G2")
    family, size = m.group(1), int(m.group(2))
    builder = {
        "GL": general_linear,
        "SL": special_linear,
        "Sp": symplectic,
        "SO": special_orthogonal,
    }[family]
    return builder(size)


# ---------------------------------------------------------------------------
# JSON form

def datum_to_dict(datum: RootDatum) -> dict:
    return {
        "rank": datum.rank,
        "roots": [list(r) for r in datum.roots],
        "coroots": [list(c) for c in datum.coroots],
        "pairing": [list(row) for row in datum.pairing],
        "simple_roots": list(datum.simple_roots),
    }


def datum_from_dict(data: dict, label: str = "custom") -> RootDatum:
    if not isinstance(data, dict):
        raise ValueError("root datum JSON must be an object")
    missing = {"rank", "roots", "coroots", "pairing", "simple_roots"} - set(data)
    if missing:
        raise ValueError(f"root datum JSON missing fields: {sorted(missing)}")
    return make_root_datum(
        data["rank"], data["roots"], data["coroots"], data["pairing"],
        data["simple_roots"], label=label,
    )


# ---------------------------------------------------------------------------
# Weyl elements

@lru_cache(maxsize=None)
def simple_coreflections(datum: RootDatum) -> tuple[Mat, ...]:
    """Matrices of the simple reflections acting on the cocharacter lattice."""
    out = []
    for k in datum.simple_roots:
        alpha, alpha_v = datum.roots[k], datum.coroots[k]
        functional = _pairing_functional(datum, alpha)
        rows = tuple(
            tuple(int(i == j) - alpha_v[i] * functional[j] for j in range(datum.rank))
            for i in range(datum.rank)
        )
        out.append(rows)
    return tuple(out)


def weyl_from_word(datum: RootDatum, word) -> WeylElement:
    """Product of simple coreflections; word is e.g. [0, 1, 0] or "s0 s1 s0".

    The rightmost letter acts first on cocharacters.
    """
    if isinstance(word, str):
        letters = word.replace(",", " ").split()
        indices = []
        for tok in letters:
            tok = tok.lower().lstrip("s")
            if not tok.isdigit():
                raise ValueError(f"cannot parse Weyl word letter {tok!r}")
            indices.append(int(tok))
        word = indices
    word = tuple(int(i) for i in word)
    gens = simple_coreflections(datum)
    for i in word:
        if not (0 <= i < len(gens)):
            raise ValueError(
                f"Weyl word letter {i} out of range for {len(gens)} simple roots")
    m = identity_matrix(datum.rank)
    for i in word:
        m = mat_mul(m, gens[i])
    return WeylElement(matrix=m, word=word)


def weyl_from_matrix(datum: RootDatum, matrix) -> WeylElement:
    """Validate that an explicit integer matrix is a Weyl group element for
    the datum: unimodular, permutes the coroots, and its contragredient
    permutes the roots."""
    matrix = tuple(tuple(row) for row in matrix)
    if len(matrix) != datum.rank or any(len(r) != datum.rank for r in matrix):
        raise ValueError(f"Weyl matrix must be {datum.rank}x{datum.rank}")
    if any(not isinstance(x, int) for row in matrix for x in row):
        raise ValueError("Weyl matrix entries must be integers")
    if det(matrix) not in (1, -1):
        raise ValueError("Weyl matrix is not invertible over Z")
    coroot_set = set(datum.coroots)
    images = {mat_vec(matrix, c) for c in datum.coroots}
    if images != coroot_set:
        raise ValueError("matrix does not permute the coroot set")
    w = WeylElement(matrix=matrix, word=None)
    root_permutation(datum, w)  # raises if the contragredient misbehaves
    return w


def weyl_identity(datum: RootDatum) -> WeylElement:
    return WeylElement(matrix=identity_matrix(datum.rank), word=())


@lru_cache(maxsize=None)
def _contragredient_cached(datum: RootDatum, matrix: Mat):
    """Matrix of the dual action on characters, as Fraction rows."""
    pt = mat_transpose(datum.pairing)
    pt_inv = rational_inverse(pt)
    w_inv = rational_inverse(matrix)
    w_inv_t = list(zip(*w_inv))
    # pt_inv * w_inv_t * pt
    step = [[sum(a * b for a, b in zip(row, col)) for col in zip(*pt)]
            for row in w_inv_t]
    return tuple(
        tuple(sum(a * b for a, b in zip(row, col)) for col in zip(*step))
        for row in pt_inv
    )


def root_action(datum: RootDatum, w: WeylElement, character: Vec) -> Vec:
    """Image of a character under the contragredient of w (so that pairings
    with w-translated cocharacters are preserved)."""
    c = _contragredient_cached(datum, w.matrix)
    image = tuple(sum(a * Fraction(x) for a, x in zip(row, character)) for row in c)
    if any(v.denominator != 1 for v in image):
        raise ValueError("contragredient image is not integral on this character")
    return tuple(int(v) for v in image)


@lru_cache(maxsize=None)
def _root_permutation_cached(datum: RootDatum, matrix: Mat) -> tuple[int, ...]:
    w = WeylElement(matrix=matrix)
    index = _root_index_map(datum)
    perm = []
    for alpha in datum.roots:
        image = root_action(datum, w, alpha)
        if image not in index:
            raise ValueError(
                f"contragredient sends root {alpha} outside the root set")
        perm.append(index[image])
    if len(set(perm)) != len(perm):
        raise ValueError("contragredient is not injective on the root set")
    return tuple(perm)


def root_permutation(datum: RootDatum, w: WeylElement) -> tuple[int, ...]:
    """Index permutation of datum.roots induced by the contragredient of w."""
    return _root_permutation_cached(datum, w.matrix)


def weyl_order(w: WeylElement) -> int:
    return matrix_order(w.matrix)


@lru_cache(maxsize=None)
def weyl_group_elements(datum: RootDatum, limit: int = 10000) -> tuple[WeylElement, ...]:
    """Enumerate the full Weyl group by breadth-first closure of the simple
    coreflections.  Deterministic: elements come out in shortest-word order,
    ties broken by generator index."""
    gens = simple_coreflections(datum)
    ident = identity_matrix(datum.rank)
    seen = {ident: ()}
    frontier = [ident]
    while frontier:
        new_frontier = []
        for m in frontier:
            word = seen[m]
            for i, g in enumerate(gens):
                nxt = mat_mul(m, g)
                if nxt not in seen:
                    seen[nxt] = word + (i,)
                    new_frontier.append(nxt)
                    if len(seen) > limit:
                        raise GuardError(
                            f"Weyl group of {datum.label} exceeds enumeration "
                            f"limit {limit}")
        frontier = new_frontier
    elements = [WeylElement(matrix=m, word=w) for m, w in seen.items()]
    elements.sort(key=lambda e: (len(e.word), e.word))
    return tuple(elements)


@lru_cache(maxsize=None)
def weyl_fixed_space(datum: RootDatum, w: WeylElement) -> Mat:
    """Canonical basis of the w-fixed cocharacter sublattice (saturated, so
    also a basis of the fixed subspace over Q)."""
    diff = mat_sub(w.matrix, identity_matrix(datum.rank))
    return integer_kernel_basis(diff, datum.rank)
