"""The averaging operator, step by step: how a mod-N pair is lifted to an
integral tuple of cocharacters that the twisted Frobenius kernel accepts,
and why the reduction lands back on the input."""
from __future__ import annotations

import random

from tamelift import (
    averaged_scale_matrix,
    build_root_datum,
    frobenius_shift,
    kernel_membership,
    lift_inertia,
    make_crys_tuple,
    make_pair,
    reduction,
    weyl_act,
    weyl_from_word,
    xi_operator,
)
from tamelift.lattice import mat_vec, vec_mod


def operator_on_a_seed() -> None:
    gl2 = build_root_datum("GL2")
    swap = weyl_from_word(gl2, "s0")
    seed = make_crys_tuple(gl2, 3, ((1, 0), (0, 0)))  # concentrated at slot 0
    out = xi_operator(swap, seed)
    print("averaging a seed concentrated at colabel 0 (GL2, q=3, f=2, w=s0):")
    print(f"  input slots:  {seed.slots}")
    print(f"  output slots: {out.slots}")
    print(f"  kernel membership (w . slot_j == slot_j-1): "
          f"{kernel_membership(swap, out)}")


def shift_and_act() -> None:
    gl2 = build_root_datum("GL2")
    swap = weyl_from_word(gl2, "s0")
    rng = random.Random(7)
    v = make_crys_tuple(gl2, 3, tuple(
        tuple(rng.randrange(-5, 6) for _ in range(2)) for _ in range(2)))
    print("\nbuilding blocks commute the right way:")
    print(f"  slots           {v.slots}")
    print(f"  frobenius_shift {frobenius_shift(v).slots}")
    print(f"  weyl_act        {weyl_act(swap, v).slots}")
    left = reduction(frobenius_shift(v))
    right = vec_mod(tuple(3 * x for x in reduction(v)), v.modulus)
    print(f"  reduction(shift v) == q * reduction(v) mod N: {left == right}")


def full_lift() -> None:
    gl2 = build_root_datum("GL2")
    swap = weyl_from_word(gl2, "s0")
    p = make_pair(gl2, 3, 2, (1, 3), swap)
    out = lift_inertia(gl2, p)
    print("\nlifting vbar=(1, 3):")
    for j, slot in enumerate(out.tuple.slots):
        print(f"  slot {j}: {slot}")
    print(f"  reduction: {reduction(out.tuple)} (target {p.vbar})")
    print(f"  checks: kernel={out.kernel_checked} "
          f"reduction={out.reduction_checked} regular={out.regular}")


def image_is_the_whole_kernel() -> None:
    # the mod-N image of the averaging matrix is exactly the solution set
    gl2 = build_root_datum("GL2")
    swap = weyl_from_word(gl2, "s0")
    q, f = 3, 2
    n = q ** f - 1
    xi_bar = averaged_scale_matrix(swap.matrix, q, f)
    image = {vec_mod(mat_vec(xi_bar, (a, b)), n)
             for a in range(n) for b in range(n)}
    solutions = {(a, b) for a in range(n) for b in range(n)
                 if vec_mod(swap.apply((a, b)), n)
                 == vec_mod((q * a, q * b), n)}
    print(f"\nmod-{n} image of the averaging matrix = congruence solutions: "
          f"{image == solutions} ({len(image)} vectors)")


if __name__ == "__main__":
    operator_on_a_seed()
    shift_and_act()
    full_lift()
    image_is_the_whole_kernel()
