"""Monte Carlo estimates against the closed forms over a grid of lengths."""
import argparse

from sombor_chains import closed_forms as cf
from sombor_chains.generators import ChainProbabilities
from sombor_chains.random_experiments import mc_expectation
from sombor_chains.sombor import STANDARD_VARIANTS


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--samples", type=int, default=100_000)
    ap.add_argument("--seed", type=int, default=7)
    ap.add_argument("--workers", type=int, default=4)
    ap.add_argument("--p1", type=float, default=0.3)
    ap.add_argument("--p2", type=float, default=0.4)
    args = ap.parse_args()
    probs = ChainProbabilities(args.p1, args.p2)
    print("family,n,variant,mean,std_error,closed_form,z,seconds")
    for family in ("hex", "phe"):
        for n in (5, 50, 500, 5000):
            for v in STANDARD_VARIANTS:
                res = mc_expectation(family, n, probs, v, args.samples, args.seed, args.workers)
                exact = cf.expected_variant(family, n, probs, v).value
                z = (res.mean - exact) / res.std_error if res.std_error else 0.0
                print(f"{family},{n},{v.label},{res.mean:.6f},{res.std_error:.6f},{exact:.6f},{z:+.2f},{res.elapsed:.2f}")


if __name__ == "__main__":
    main()
