#!/usr/bin/env python3
"""Render a gallery of generated curves as SVG files.

Covers the affine and standard variants of each family, a seeded stochastic
code, and a projected space extension.
"""

import argparse
import os
from fractions import Fraction

from afframe import DiscreteCurve, extend_space_hilbert, generate_hilbert, generate_koch, generate_snowflake
from afframe.formats import SvgStyle, curve_to_svg
from afframe.frame import reconstruct_planar
from afframe.hilbert import standard_hilbert_init
from afframe.koch import pair_invariants, random_koch_code, standard_koch_init


def save(path, curve, stroke="black"):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(curve_to_svg(curve, SvgStyle(stroke=stroke)))
    print(f"wrote {path} ({len(curve)} points)")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="gallery", help="output directory")
    parser.add_argument("--seed", type=int, default=7, help="seed for the stochastic code")
    args = parser.parse_args()
    os.makedirs(args.out, exist_ok=True)

    std_koch = [(0.0, 0.0), (1.0, 0.0), standard_koch_init((0, 0), (1, 0))]
    save(f"{args.out}/koch_standard_n6.svg", generate_koch(std_koch, 6))
    save(
        f"{args.out}/koch_affine_n5.svg",
        generate_koch([(0, 0), (-1, -1), (Fraction(-3, 2), 1)], 5),
        stroke="darkorange",
    )

    save(f"{args.out}/snowflake_standard_n5.svg", generate_snowflake(std_koch, 5), stroke="steelblue")

    std_hilbert = [(0, 0), (0, 1), standard_hilbert_init((0, 0), (0, 1))]
    save(f"{args.out}/hilbert_standard_n6.svg", generate_hilbert(std_hilbert, 6))
    save(
        f"{args.out}/hilbert_affine_n6.svg",
        generate_hilbert([(0, 0), (-1, -2), (-10, 1)], 6),
        stroke="seagreen",
    )

    stochastic = reconstruct_planar(std_koch, pair_invariants(random_koch_code(7, args.seed)))
    save(f"{args.out}/koch_stochastic_n7.svg", stochastic, stroke="firebrick")

    space = extend_space_hilbert([(0.0, 0.0, 1.0), (0.0, 1.0, 1.0), (1.0, 1.0, 1.0)], 7, 0.005, 0.005)
    projected = DiscreteCurve([p[:2] for p in space.points], dim=2)
    save(f"{args.out}/hilbert_space_n7_xy.svg", projected, stroke="purple")


if __name__ == "__main__":
    main()
