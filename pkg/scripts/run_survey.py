#!/usr/bin/env python3
"""Exhaustive small-dimension survey: enumerate all valid restricted Lie
algebras over GF(2), compare rad_p against the brute-force subspace oracle,
and print summary statistics."""

import argparse
import time

from pradical.fields import PrimeField
from pradical.radical import rad_p
from pradical.survey import (brute_force_radical, enumerate_algebras,
                             has_nonzero_p_nilpotent)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--dim", type=int, default=3)
    parser.add_argument("--cap", type=int, default=10000)
    args = parser.parse_args()

    F = PrimeField(2)
    started = time.monotonic()
    total = 0
    mismatches = 0
    radical_dims = {}
    no_nilpotents_abelian = 0
    for g in enumerate_algebras(F, args.dim, cap=args.cap):
        cert = rad_p(g, strategy="s3")
        oracle = brute_force_radical(g)
        total += 1
        if cert.radical != oracle:
            mismatches += 1
        radical_dims[cert.radical.dim] = \
            radical_dims.get(cert.radical.dim, 0) + 1
        if not has_nonzero_p_nilpotent(g) and g.is_abelian():
            no_nilpotents_abelian += 1
    elapsed = time.monotonic() - started
    print("dimension %d over GF(2): %d valid instances in %.1fs"
          % (args.dim, total, elapsed))
    print("oracle mismatches: %d" % mismatches)
    print("radical dimension histogram: %s"
          % dict(sorted(radical_dims.items())))
    print("abelian instances with no nonzero p-nilpotent element: %d"
          % no_nilpotents_abelian)


if __name__ == "__main__":
    main()
