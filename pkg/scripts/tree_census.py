"""Vertex, component and singular-point counts of truncated biregular trees.

    python3 scripts/tree_census.py --primes 2 3 --max-radius 4
"""

import argparse
import json
import time

from paramodular import ss_locus
from paramodular.config import TreeCensusConfig


def census(cfg: TreeCensusConfig):
    for p in cfg.primes:
        for kind in cfg.root_kinds:
            for r in range(cfg.max_radius + 1):
                t0 = time.perf_counter()
                tree = ss_locus.build_tree(p, kind, r)
                inc = ss_locus.incidence_from_tree(tree)
                yield {
                    "p": p,
                    "root": kind,
                    "radius": r,
                    "vertices": tree.n_vertices,
                    "components": len(inc.components),
                    "superspecial_points": len(inc.superspecial_points),
                    "sigma_size": ss_locus.contract_E(inc).size,
                    "interior_violations": len(inc.invariant_violations()),
                    "seconds": round(time.perf_counter() - t0, 4),
                }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--primes", type=int, nargs="+", default=[2, 3])
    ap.add_argument("--max-radius", type=int, default=4)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    cfg = TreeCensusConfig(tuple(args.primes), args.max_radius)
    rows = list(census(cfg))
    if args.json:
        print(json.dumps(rows, indent=2))
        return
    cols = ["p", "root", "radius", "vertices", "components", "superspecial_points", "sigma_size", "interior_violations"]
    width = {c: max(len(c), *(len(str(r[c])) for r in rows)) for c in cols}
    print("  ".join(c.rjust(width[c]) for c in cols))
    for row in rows:
        print("  ".join(str(row[c]).rjust(width[c]) for c in cols))


if __name__ == "__main__":
    main()
