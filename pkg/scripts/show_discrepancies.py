#!/usr/bin/env python3
"""Print minimal witnesses for the closed forms that only hold when a == b.

For each affected identity this evaluates the smallest failing instance on
the (a,b,c) = (2,3,1) sequence with initial values (0,1), prints both sides
exactly, and then evaluates the corrected form at the same point.
"""

from hybridseq import identities as idn
from hybridseq.hybrid_sequences import HybridSeq
from hybridseq.sequences import SeqParams

P = SeqParams(2, 3, 1, 0, 1)
HS = HybridSeq(P)


def show(title, rep, corrected=None):
    mark = "holds" if rep.passed else "FAILS"
    print(f"{title}: {mark}")
    if not rep.passed:
        print(f"    residual (LHS - RHS) = {rep.residual}")
    if corrected is not None:
        mark = "holds" if corrected.passed else "FAILS"
        print(f"    corrected form ({corrected.identity}): {mark}")
    print()


def main():
    print(f"parameters (a,b,c;w0,w1) = (2,3,1;0,1), delta_sq = {P.delta_sq}\n")

    show("generating function, compact numerator, degree 8",
         idn.check_generating_function(HS, 8),
         idn.check_generating_function_recurrence_form(HS, 8))

    show("binomial sum (i) at n=1, r=0  [reduces to K_2 = a K_1 + c K_0]",
         idn.check_binomial_sum_i(HS, 1, 0),
         idn.check_binomial_sum_i_componentwise(HS, 1, 0))

    show("binomial sum (ii) at n=1, r=0",
         idn.check_binomial_sum_ii(HS, 1, 0),
         idn.check_binomial_sum_ii_componentwise(HS, 1, 0))

    show("u/v relation (i) at n=2",
         idn.check_fib_lucas_i(P, 2),
         idn.check_fib_lucas_i_hatted(P, 2))

    show("u/v relation (ii) at n=2",
         idn.check_fib_lucas_ii(P, 2),
         idn.check_fib_lucas_ii_hatted(P, 2))

    show("u/v relation (iii) at mixed parity (n,m) = (3,2)",
         idn.check_fib_lucas_iii(P, 3, 2))

    show("u/v relation (iii) at shared parity (n,m) = (4,2)",
         idn.check_fib_lucas_iii(P, 4, 2))

    show("u/v relation (iv) at n=3  [exact as displayed]",
         idn.check_fib_lucas_iv(P, 3))


if __name__ == "__main__":
    main()
