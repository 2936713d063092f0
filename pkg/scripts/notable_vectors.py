#!/usr/bin/env python3
"""Walk through the notable weight vectors: the degree-15 hypersurface in
P(1,2,3,4,5), the quintic, and the two IP-but-not-transverse examples where
the mirror construction visibly breaks down."""

import json

from cywps import ghv_polynomial, mirror_test
from cywps.wps import WeightVector

CASES = [
    ("1,2,3,4,5", "transverse, chi_orb = -126 along all four routes"),
    ("1,1,1,1,1", "the quintic threefold, chi_orb = -200"),
    ("1,1,6,14,21", "IP but not transverse: mirror value 506 vs 504"),
    ("1,1,2,4,5", "IP but not transverse: non-integral 1032/5"),
]


def main() -> None:
    for text, blurb in CASES:
        w = WeightVector.parse(text)
        print(f"== {text}  ({blurb})")
        print("   f0 =", ghv_polynomial(w).to_text())
        report = mirror_test(w)
        print("  ", json.dumps(report.to_dict()))
        print()


if __name__ == "__main__":
    main()
