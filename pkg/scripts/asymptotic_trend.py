"""Convergence study of the Shannon length for growing degree.

Prints N / delta_x against its limit pi sqrt(2) / e and the gap between
S and the log of the large-n estimate. Large n is limited by underflow of
exp(-x/2) in the damped recurrence (about n = 370).
"""

import argparse
import math

from laguerre_spread import PolySpec
from laguerre_spread.moments import standard_deviation
from laguerre_spread.shannon import PI_SQRT2_OVER_E, shannon_asymptotic, shannon_length


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--alpha", type=float, nargs="+", default=[0.0, 5.0])
    parser.add_argument("--n", type=int, nargs="+", default=[5, 10, 20, 40, 80, 160])
    args = parser.parse_args()

    print("alpha,n,N_over_dx,rel_gap,S_minus_log_asym")
    for alpha in args.alpha:
        for n in args.n:
            spec = PolySpec(n, alpha)
            rep = shannon_length(spec)
            ratio = rep.N / standard_deviation(spec)
            gap = ratio / PI_SQRT2_OVER_E - 1
            tail = rep.S - math.log(shannon_asymptotic(spec))
            print(f"{alpha:g},{n},{ratio:.6f},{gap:.4f},{tail:.4f}")


if __name__ == "__main__":
    main()
