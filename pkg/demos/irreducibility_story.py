"""Deciding G-irreducibility for tame inertial pairs, with certificates,
and cross-checking the two-condition criterion against the brute-force
parabolic search."""
from __future__ import annotations

from itertools import product

from tamelift import (
    brute_force_parabolic_oracle,
    build_root_datum,
    inertia_centralizer_roots,
    is_G_irreducible,
    make_pair,
    niveau,
    validate_pair,
    weyl_from_word,
    weyl_group_elements,
    weyl_identity,
)


def gl2_verdicts() -> None:
    gl2 = build_root_datum("GL2")
    swap = weyl_from_word(gl2, "s0")
    print("GL2 with q=3, f=2 (modulus 8):")

    p = make_pair(gl2, 3, 2, (1, 3), swap)
    print(f"  vbar=(1, 3), w=s0: valid={validate_pair(gl2, p).valid}, "
          f"niveau={niveau(p)}")
    res = is_G_irreducible(gl2, p)
    print(f"    irreducible: {res.irreducible}")

    p = make_pair(gl2, 3, 2, (4, 4), swap)
    res = is_G_irreducible(gl2, p)
    print(f"  vbar=(4, 4), w=s0: irreducible={res.irreducible}, "
          f"failing root {res.failing_root}")

    p = make_pair(gl2, 3, 2, (4, 0), weyl_identity(gl2))
    res = is_G_irreducible(gl2, p)
    print(f"  vbar=(4, 0), w=1:  irreducible={res.irreducible}, "
          f"fixed noncentral cocharacter {res.fixed_cochar}")


def gl4_oracle_agreement() -> None:
    gl4 = build_root_datum("GL4")
    w = weyl_from_word(gl4, "s1 s0 s2 s1")  # the double transposition (13)(24)
    p = make_pair(gl4, 3, 2, (1, 2, 3, 6), w)
    print("\nGL4, q=3, f=2, w=(13)(24), vbar=(1, 2, 3, 6):")
    print(f"  centralizer roots: {inertia_centralizer_roots(gl4, p)}")
    stable = brute_force_parabolic_oracle(gl4, p)
    print(f"  stable proper parabolics found by brute force: {len(stable)}")
    for par in stable:
        print(f"    defining cocharacter {par.defining_cochar}, "
              f"{len(par.unipotent_roots)} unipotent roots")
    verdict = is_G_irreducible(gl4, p)
    print(f"  criterion verdict: irreducible={verdict.irreducible} "
          f"(matches oracle: {verdict.irreducible == (not stable)})")


def sweep_comparison() -> None:
    # exhaustive agreement on a small slice: GL3, q=2, f=2, all w, all vbar
    gl3 = build_root_datum("GL3")
    n = 2 ** 2 - 1
    agree = checked = 0
    for w in weyl_group_elements(gl3):
        for vbar in product(range(n), repeat=3):
            p = make_pair(gl3, 2, 2, vbar, w)
            if not validate_pair(gl3, p).valid:
                continue
            if inertia_centralizer_roots(gl3, p):
                continue
            checked += 1
            verdict = bool(is_G_irreducible(gl3, p))
            agree += verdict == (not brute_force_parabolic_oracle(gl3, p))
    print(f"\nGL3 q=2 f=2 exhaustive slice: {agree}/{checked} verdicts "
          f"match the brute-force search")


if __name__ == "__main__":
    gl2_verdicts()
    gl4_oracle_agreement()
    sweep_comparison()
