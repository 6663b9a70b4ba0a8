#!/usr/bin/env python3
"""Print the code strings, counts, and sequence lengths for small steps."""

import argparse

from afframe import hilbert_kappa_sequence, inflection_count, koch_code, koch_counts, letter_counts
from afframe.hilbert import expand_word, symbol_length, word_to_symbols
from afframe.snowflake import snowflake_code


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-step", type=int, default=5)
    args = parser.parse_args()
    top = args.max_step

    print("== koch ==")
    for n in range(2, top + 1):
        c = koch_counts(n)
        code = koch_code(n)
        shown = code if len(code) <= 40 else code[:37] + "..."
        print(f"n={n}: points={c.points} sharp={c.sharp_pairs} obtuse={c.obtuse_pairs}  {shown}")

    print("\n== snowflake ==")
    for n in range(2, top + 1):
        code = snowflake_code(n)
        shown = code if len(code) <= 40 else code[:37] + "..."
        print(f"n={n}: elements={len(code)} ones={code.count('1')} zeros={code.count('0')}  {shown}")

    print("\n== hilbert ==")
    for n in range(2, top + 1):
        word = expand_word(n)
        counts = letter_counts(n)
        shown = word if len(word) <= 32 else word[:29] + "..."
        print(
            f"n={n}: N={inflection_count(n)} y={symbol_length(n)} "
            f"kappas={len(hilbert_kappa_sequence(n))} letters={counts}  {shown}"
        )
    print(f"\nsymbol form n=3: {word_to_symbols(expand_word(3))}")


if __name__ == "__main__":
    main()
