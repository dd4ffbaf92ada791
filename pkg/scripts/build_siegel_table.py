"""Regenerate src/paramodular/data/siegel_dims.csv.

Level-one scalar Siegel cusp form dimensions come from Igusa's generating
function for M_*(Sp4(Z)); cusp forms are M_j minus M_j(SL2(Z)) in even
weight (Siegel Phi is onto there) and all of M_j in odd weight.
The paramodular and classical rows are transcribed constants.

    python scripts/build_siegel_table.py [--max-j 20]
"""

import argparse
import csv
from pathlib import Path

OUT = Path(__file__).resolve().parents[1] / "src" / "paramodular" / "data" / "siegel_dims.csv"

IGUSA = "Igusa 1962; dim M_j(Sp4(Z)) = coeff of (1+t^35)/((1-t^4)(1-t^6)(1-t^10)(1-t^12))"
WEIGHT3 = "Ibukiyama dimension formula for S_3(K(p)); zero for p < 61"
GENUS = "genus of X_0(p)"
LMFDB = "LMFDB newspace dimensions"

# p -> dim S_3(K(p)), scalar weight 3 = (k, j) = (0, 3)
PARAMODULAR_WEIGHT3 = {2: 0, 3: 0, 5: 0, 7: 0, 11: 0, 13: 0}
GENERA = {2: 0, 3: 0, 5: 0, 7: 0, 11: 1, 13: 0, 17: 1, 19: 1, 23: 2, 29: 2, 31: 2, 37: 2, 41: 3, 43: 3, 47: 4}
WEIGHT4 = {5: 1, 7: 1, 11: 2, 13: 3}
LEVEL1 = {12: 1, 24: 2, 26: 1}


def series(denominators, extra, top):
    coeffs = [0] * (top + 1)
    for e in extra:
        if e <= top:
            coeffs[e] += 1
    for d in denominators:
        for n in range(d, top + 1):
            coeffs[n] += coeffs[n - d]
    return coeffs


def level1_siegel(top):
    full = series((4, 6, 10, 12), (0, 35), top)
    elliptic = series((4, 6), (0,), top)
    return [full[j] - (elliptic[j] if j % 2 == 0 else 0) for j in range(top + 1)]


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-j", type=int, default=20)
    ap.add_argument("--out", type=Path, default=OUT)
    args = ap.parse_args()
    s = level1_siegel(args.max_j)
    rows = []
    for j in range(3, args.max_j + 1):
        rows.append(["siegel", 0, j, "K(1)", "", s[j], IGUSA])
    for p, v in PARAMODULAR_WEIGHT3.items():
        rows.append(["siegel", 0, 3, "K(p)", p, v, WEIGHT3])
    for k, v in LEVEL1.items():
        rows.append(["classical", k, "", "Gamma0(1)", "", v, LMFDB])
    for p, g in GENERA.items():
        rows.append(["classical", 2, "", "Gamma0(p)", p, g, GENUS])
    for p, v in WEIGHT4.items():
        rows.append(["classical", 4, "", "Gamma0(p)", p, v, LMFDB])
    args.out.parent.mkdir(parents=True, exist_ok=True)
    with open(args.out, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["kind", "k", "j", "level", "p", "value", "source"])
        w.writerows(rows)
    print(f"wrote {len(rows)} rows to {args.out}")


if __name__ == "__main__":
    main()
