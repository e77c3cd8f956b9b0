"""Factorize words three ways and watch the comparison bound hold.

Every word over a totally ordered alphabet either belongs to the member set
or splits uniquely into a nondecreasing product of members. This script runs
the brute-force definition, the right-to-left stack algorithm, and the
contraction algorithm on the same inputs, then instruments the stack
algorithm to show it stays within 2|w| - 1 substring comparisons.
"""

import random

from nyldon import (
    BINARY,
    Word,
    factorize,
    factorize_with_stats,
    nyldon_factorization_bruteforce,
    nyldon_factorize,
)

SAMPLES = ["10", "11", "101101", "10001011010101", "100101100101"]


def main() -> None:
    print("three routes to the same factorization")
    print("=" * 54)
    for text in SAMPLES:
        w = Word.parse(text)
        brute = nyldon_factorization_bruteforce(w).factors
        stack = nyldon_factorize(w).factors
        contraction = factorize(w).factors
        assert brute == stack == contraction
        rendered = " . ".join(str(f) for f in stack)
        tag = "member" if len(stack) == 1 else f"{len(stack)} factors"
        print(f"{text:>16}  ->  {rendered:<24} ({tag})")

    print()
    print("comparison counts on random words (bound: 2n - 1)")
    print("=" * 54)
    rng = random.Random(2024)
    for n in (100, 1_000, 10_000, 50_000):
        w = Word(tuple(rng.randrange(2) for _ in range(n)), BINARY)
        _, comparisons = factorize_with_stats(w)
        print(f"n = {n:>6}: {comparisons:>7} comparisons (<= {2 * n - 1})")


if __name__ == "__main__":
    main()
