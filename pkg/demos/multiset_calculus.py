"""Labeled and colabeled weight multisets: division, embedding profiles,
Galois twists, and the induced Lubin-Tate computation."""
from __future__ import annotations

from tamelift import (
    IntMultiset,
    build_root_datum,
    galois_twist,
    gl_colabeled_multisets,
    ht_type,
    induced_lt_ht,
    labeled_from_colabeled,
    lift_inertia,
    make_pair,
    make_unramified_profile,
    multiset_divide,
    weyl_from_word,
)


def halving() -> None:
    m = IntMultiset((1, 1, 2, 2, 2, 2))
    print(f"dividing {m.items} by 2: {multiset_divide(m, 2).items}")
    try:
        multiset_divide(IntMultiset((1, 1, 2)), 2)
    except Exception as exc:
        print(f"  {type(exc).__name__} when counts are odd: {exc}")


def profiles_and_twists() -> None:
    profile = make_unramified_profile(2, 3)  # base degree 2, extension degree 3
    print(f"\nunramified profile: {len(profile.colabels)} colabels over "
          f"{len(profile.labels())} labels, fibers of size {profile.degree}")
    colabeled = {sigma: IntMultiset((sigma % 2,)) for sigma in range(6)}
    labeled = {tau: labeled_from_colabeled(profile, colabeled, tau)
               for tau in profile.labels()}
    print(f"  labeled weights: { {k: v.items for k, v in labeled.items()} }")

    rotate = {sigma: (sigma + 2) % 6 for sigma in range(6)}
    twisted = galois_twist(colabeled, rotate)
    same = all(labeled_from_colabeled(profile, twisted, tau) == labeled[tau]
               for tau in profile.labels())
    print(f"  twist by sigma -> sigma+2 keeps fibers aligned: {same}")


def induced_lubin_tate() -> None:
    print("\ninduced Lubin-Tate weights over 2 base labels:")
    for d in (1, 2, 3, 5):
        colabeled, labeled = induced_lt_ht(2, d)
        print(f"  degree {d}: labeled 0 -> {labeled[0].items}, "
              f"labeled 1 -> {labeled[1].items}")


def weights_from_a_lift() -> None:
    gl3 = build_root_datum("GL3")
    w = weyl_from_word(gl3, "s0")
    p = make_pair(gl3, 3, 2, (1, 3, 0), w)
    out = lift_inertia(gl3, p)
    t = ht_type(out.tuple)
    per_colabel = gl_colabeled_multisets(t)
    print("\nGL3 lift of vbar=(1, 3, 0): colabeled weight multisets")
    for j, m in per_colabel.items():
        print(f"  colabel {j}: {m.items}")
    profile = make_unramified_profile(1, 2)
    merged = labeled_from_colabeled(profile, per_colabel, 0)
    print(f"  merged across the degree-2 fiber: {merged.items} "
          f"(size {merged.size} = dimension 3)")


if __name__ == "__main__":
    halving()
    profiles_and_twists()
    induced_lubin_tate()
    weights_from_a_lift()
