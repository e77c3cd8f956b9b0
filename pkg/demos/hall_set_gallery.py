"""Generate member sets under two order policies and compare Hall verdicts.

The same generation rule — keep a word when it has no nondecreasing
factorization into smaller members — produces different families under
different total orders. Under plain lexicographic order the result is a
right Hall set that satisfies the growth clause f < fg; under reversed
lexicographic order it is exactly the Lyndon words, a Viennot set that
violates the growth clause.
"""

from nyldon import BINARY, LEX, RLEX, generate, verify_hall

MAX_LEN = 7


def describe(policy, validate: bool) -> None:
    gset = generate(policy, BINARY, MAX_LEN, validate=validate)
    verdict = verify_hall(gset, policy)
    counts = gset.counts_by_length()
    print(f"policy {policy.id!r}: {sum(counts.values())} members up to length {MAX_LEN}")
    print(f"  counts by length: {dict(sorted(counts.items()))}")
    print(f"  words of length <= 4: "
          + " ".join(str(w) for w in gset.words() if len(w) <= 4))
    print(f"  unique factorization: {verdict.is_factorization}")
    print(f"  right Hall (fg > g):  {verdict.is_right_hall}")
    print(f"  left Hall  (fg < f):  {verdict.is_left_hall}")
    print(f"  Viennot (both):       {verdict.is_viennot}")
    print(f"  growth (f < fg):      {verdict.nyldon_like_ok}")
    if verdict.counterexamples:
        f, g, clause = verdict.counterexamples[0]
        print(f"  first counterexample: clause {clause} at f={f}, g={g}, fg={f + g}")
    print()


def main() -> None:
    describe(LEX, validate=True)
    describe(RLEX, validate=False)  # rlex fails the growth clause by design
    print("both policies generate one member per primitive conjugacy class,")
    print("so the per-length counts above agree even though the words differ.")


if __name__ == "__main__":
    main()
