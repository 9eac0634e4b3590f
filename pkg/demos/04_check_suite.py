"""Running the statement-checking suite and reading its verdicts.

Each check id evaluates one inequality or equality on every applicable
instance over the corpus.  Verdicts are exact; a violated statement gets a
witness carrying the concrete instance.  This corpus genuinely violates a
few statements at small n, which the suite surfaces instead of hiding.
"""

from collections import Counter

from grouptensor import Config, builtin_corpus, check_theorem, run_suite
from grouptensor.degrees import format_fraction

config = Config(max_order=12)
corpus = builtin_corpus(12)
print(f"corpus: {[entry.spec for entry in corpus]}")

report = run_suite(corpus, "all", config)
print(f"\n{len(report.checks)} checks -> {report.summary}")

violated = [
    c for c in report.checks if not c.skipped and c.note is None and c.holds is False
]
print("\nviolations by check id:")
for (cid, n), count in sorted(Counter((c.id, c.n) for c in violated).items()):
    print(f"  {cid:12s} n={n}: {count}")

print("\nsmallest counterexample, in full:")
smallest = min(violated, key=lambda c: (len(c.group), c.group, c.sort_key()))
print(f"  id       {smallest.id}")
print(f"  group    {smallest.group}")
print(f"  subgroup {smallest.subgroup}")
print(f"  n        {smallest.n}")
print(f"  lhs      {format_fraction(smallest.lhs)}")
print(f"  rhs      {format_fraction(smallest.rhs)}")
print(f"  witness  {smallest.witness}")

print("\nre-evaluating that instance from scratch:")
instance = {"group": smallest.group, "subgroup": list(smallest.subgroup or []), "n": smallest.n}
if not instance["subgroup"]:
    instance.pop("subgroup")
again = check_theorem(smallest.id, instance)
print(f"  lhs {format_fraction(again.lhs)}  rhs {format_fraction(again.rhs)}  "
      f"holds {again.holds}")

print("\nflagged records (reference-value discrepancies, not engine failures):")
for c in report.checks:
    if c.note and not c.skipped:
        print(f"  {c.id} on {c.group}: computed {format_fraction(c.lhs)}, "
              f"reference {c.witness['reference']}")
