#!/usr/bin/env python3
"""Census of the exhaustive-verification search spaces.

For each type: group order, total reduced words over all elements, and the
number of (x, reduced word, w <= x) triples the full sweeps visit.  Useful
when deciding how far the exhaustive suites can be pushed.
"""

import sys
import time

from kltangent import build_root_system
from kltangent.weyl import group_table


def main(labels) -> None:
    print(f"{'type':5s} {'|W|':>6s} {'words':>8s} {'triples':>10s} {'build':>7s}")
    for label in labels:
        t0 = time.perf_counter()
        gt = group_table(build_root_system(label))
        masks = gt.leq_masks()
        words = 0
        triples = 0
        for idx in range(len(gt.elements)):
            count = sum(1 for _ in gt.reduced_words_of(idx))
            words += count
            triples += count * bin(masks[idx]).count("1")
        print(f"{label:5s} {len(gt.elements):6d} {words:8d} {triples:10d} "
              f"{time.perf_counter() - t0:6.2f}s")


if __name__ == "__main__":
    main(sys.argv[1:] or ["A2", "B2", "G2", "A3", "B3", "C3", "A4", "D4"])
