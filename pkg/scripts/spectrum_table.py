"""Quantized lambda^2 for a sweep of field strengths, both radial channels.

    python3 scripts/spectrum_table.py --B 3 5 10 --m 1/2 3/2 -1/2
"""

import argparse
from dataclasses import dataclass

from _common import write
from hyperdirac.records import OutputRecord
from hyperdirac.spectrum import enumerate_states


@dataclass(frozen=True)
class SpectrumConfig:
    B_values: tuple = (3.0, 5.0, 10.0)
    m_values: tuple = ("-1/2", "1/2", "3/2")


def run(cfg: SpectrumConfig) -> OutputRecord:
    rec = OutputRecord("spectrum_table", {"B": list(cfg.B_values), "m": list(cfg.m_values)},
                       ["B", "variant", "m", "n", "lambda_sq", "landau_2Bk"])
    for B in cfg.B_values:
        for st in enumerate_states(B, cfg.m_values):
            rec.add(B, st.variant, st.m, st.n, st.lambda_sq, st.flat_limit_lambda0_sq)
    return rec


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--B", type=float, nargs="+", default=list(SpectrumConfig.B_values))
    ap.add_argument("--m", nargs="+", default=list(SpectrumConfig.m_values))
    args = ap.parse_args()
    rec = run(SpectrumConfig(tuple(args.B), tuple(args.m)))
    for row in rec.rows:
        print("B={:<5g} variant {} m={:<5g} n={:<3d} lambda^2={:<10g} 2Bk={:g}".format(*row))
    print("wrote", write(rec, "spectrum_table.csv"))


if __name__ == "__main__":
    main()
