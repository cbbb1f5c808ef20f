#!/usr/bin/env python3
"""Walk through the D4 element x = s2 s1 s3 s4 s2 (Bourbaki numbering).

This element separates two notions: every weight of its inversion set is
integrally indecomposable, yet x is not cominuscule.  Its tangent reports
are therefore complete (no Undetermined verdicts) even though the usual
cominuscule explanation does not apply.
"""

from kltangent import (
    NotBelow,
    build_root_system,
    canonical_reduced_word,
    cominuscule_witness,
    enumerate_weyl_group,
    format_root,
    inversion_set_of_inverse,
    is_integrally_indecomposable,
    kl_tangent_report,
    root_to_epsilon,
    word_to_element,
)


def eps_str(vec) -> str:
    parts = []
    for i, c in enumerate(vec, start=1):
        if c:
            sign = "-" if c < 0 else ("+" if parts else "")
            parts.append(f"{sign}e{i}")
    return "".join(parts)


def main() -> None:
    rs = build_root_system("D4")
    x = word_to_element(rs, (2, 1, 3, 4, 2))
    inv = sorted(inversion_set_of_inverse(rs, x))

    print("x = s2 s1 s3 s4 s2 in W(D4), length", x.length)
    print("inversion set of x^-1:")
    for gamma in inv:
        print(f"  {format_root(rs, gamma):14s} = {eps_str(root_to_epsilon(rs, gamma))}")

    print("all integrally indecomposable:",
          all(is_integrally_indecomposable(g, set(inv)) for g in inv))
    print("cominuscule:", cominuscule_witness(rs, x) is not None)

    print("\ntangent reports at x (all complete despite x not being cominuscule):")
    for w in enumerate_weyl_group(rs):
        if w.length != 2:
            continue
        try:
            report = kl_tangent_report(rs, w, x)
        except NotBelow:
            continue
        weights = ", ".join(format_root(rs, v) for v in sorted(report.kl_tangent_weights))
        w_word = " ".join(map(str, canonical_reduced_word(rs, w)))
        print(f"  w = {w_word:6s} KL tangent weights: {weights or '(none)'}  "
              f"complete={report.complete}")


if __name__ == "__main__":
    main()
