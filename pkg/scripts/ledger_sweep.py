"""Sweep one-contribution ledgers over local types, multiplicities and weights.

For each setting prints the weight profile, whether weight-monodromy holds,
the component group of the assembled monodromy map and the Mazur verdict
with four distinct eigenvalues and the other hypotheses granted.
"""

import argparse
import itertools

from paramodular import picard_lefschetz as pl
from paramodular.config import LedgerSweepConfig
from paramodular.local_reps import ParamodularLocalRep


def sweep(cfg: LedgerSweepConfig):
    for t, mult, k in itertools.product(cfg.types, range(1, cfg.max_multiplicity + 1), cfg.coefficient_weights):
        c = pl.LedgerContribution("F", "General", "H", ParamodularLocalRep(t, prime_p=cfg.prime_p), 4, mult)
        s = pl.LedgerScenario((c,), cfg.sigma_size, k, cfg.prime_p, cfg.prime_ell)
        theta = pl.component_group(pl.assemble_gamma(s)).ell_part(cfg.prime_ell)
        verdict = pl.mazur_check(4, True, True, theta.is_trivial).verdict.value
        yield t, mult, k, pl.weight_filtration_profile(s), pl.is_weight_monodromy_ok(s), str(theta), verdict


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--prime-p", type=int, default=3)
    ap.add_argument("--prime-ell", type=int, default=7)
    args = ap.parse_args()
    cfg = LedgerSweepConfig(prime_p=args.prime_p, prime_ell=args.prime_ell)
    print(f"{'type':5} mult  k  profile                    WM     Theta_ell  verdict")
    for t, mult, k, prof, ok, theta, verdict in sweep(cfg):
        print(f"{t:5} {mult:4} {k:2}  {str(prof):26} {str(ok):6} {theta:10} {verdict}")


if __name__ == "__main__":
    main()
