"""The verification harness end to end.

run_family enumerates every instance of a built-in family, runs the
selected checks, and reports a summary.  A failed check on a certified
vertex-transitive instance is a bug by definition; the same failure on
an uncertified instance is only a caveat.  Fault injection (shifting
the sphere bound by +1) confirms the harness actually has teeth.

Run with:  python3 demos/04_verification_harness.py
"""

from relgrowth import run_family

# All circulants Cay(Z_n, S) for n up to 10, every nonempty generator
# subset, with every check enabled.
run = run_family("circulants", max_n=10)
print(f"family: {run.family} {run.params}")
for key, value in run.summary.items():
    print(f"  {key}: {value}")
assert run.ok
print()

# The growth bound is exactly tight on instances like the plain
# reflexive cycle, so strengthening the sphere bound by one must fail.
weakened = run_family("circulants", max_n=8, checks=("main",), bound_delta=-1)
strengthened = run_family("circulants", max_n=8, checks=("main",), bound_delta=1)
print(f"bound shifted by -1: failures = {weakened.summary['failures']}")
print(f"bound shifted by +1: failures = {strengthened.summary['failures']}")
assert weakened.summary["failures"] == 0
assert strengthened.summary["failures"] > 0
print()

# Other families work the same way; dihedral groups are not abelian,
# so products here genuinely depend on the order of the factors.
run = run_family("cayley_dihedral", max_m=4, checks=("main", "zerosum"))
print(f"family: {run.family} {run.params}")
print(f"  instances: {run.summary['instances']}, bugs: {run.summary['bugs']}")
assert run.ok
