"""Convergence of curved lambda^2 / rho^2 to the Landau value 2 B0 k as rho grows.

The relative gap is exactly k / (2 B0 rho^2); the last column checks that.
"""

import argparse
from dataclasses import dataclass

import numpy as np

from _common import write
from hyperdirac.records import OutputRecord
from hyperdirac.spectrum import flat_limit_check


@dataclass(frozen=True)
class FlatLimitConfig:
    B0: float = 1.0
    levels: tuple = (1, 2, 3)
    rho_values: tuple = tuple(np.logspace(1, 3, 9))
    channels: tuple = ((3, "1/2"), (4, "1/2"), (4, "-1/2"))


def run(cfg: FlatLimitConfig) -> OutputRecord:
    rec = OutputRecord("flat_limit_convergence", {"B0": cfg.B0},
                       ["variant", "m", "n", "rho", "curved", "flat", "rel_error", "rel_error_times_rho_sq"])
    for variant, m in cfg.channels:
        for n in cfg.levels:
            for rho in cfg.rho_values:
                curved, flat, err = flat_limit_check(cfg.B0, n, m, variant, float(rho))
                rec.add(variant, m, n, float(rho), curved, flat, err, err * rho**2)
    return rec


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--B0", type=float, default=FlatLimitConfig.B0)
    args = ap.parse_args()
    rec = run(FlatLimitConfig(B0=args.B0))
    # rel_error * rho^2 should sit at k / (2 B0) for every rho
    for variant, m, n, rho, _, _, err, scaled in rec.rows:
        print(f"variant {variant} m={m:>4} n={n} rho={rho:9.2f} rel_error={err:.3e} x rho^2={scaled:.12f}")
    print("wrote", write(rec, "flat_limit_convergence.csv"))


if __name__ == "__main__":
    main()
