"""Writes data/synthetic_indicators.csv: a seeded stand-in for a 14-indicator country table.

Columns 1-6 are dichotomous (0/1), columns 7-14 are ordinal 1-10 scales.
Rows are drawn from a few regime clusters and repeat often, so many rows
share an indicator vector.
"""

import argparse
import csv
import random

DICHOTOMOUS = [
    "competitive_elections",
    "universal_suffrage",
    "executive_term_limits",
    "independent_judiciary",
    "free_press",
    "multiparty_legislature",
]
ORDINAL = [
    "executive_recruitment",
    "executive_constraints",
    "political_competition",
    "civil_liberties",
    "political_rights",
    "rule_of_law",
    "participation",
    "regulation_of_participation",
]


def cluster_centers():
    return [
        ([1, 1, 1, 1, 1, 1], [9, 9, 9, 9, 9, 9, 8, 9]),
        ([1, 1, 0, 1, 1, 1], [7, 6, 7, 7, 6, 6, 7, 6]),
        ([1, 1, 0, 0, 0, 1], [5, 4, 5, 4, 4, 3, 5, 4]),
        ([0, 1, 0, 0, 0, 0], [2, 2, 1, 2, 2, 3, 2, 1]),
        ([0, 0, 0, 0, 0, 0], [1, 1, 1, 1, 1, 1, 1, 1]),
    ]


def prototype(rng, center):
    flags, scales = center
    flags = [f if rng.random() > 0.08 else 1 - f for f in flags]
    scales = [min(10, max(1, s + rng.choice([-1, 0, 0, 0, 1]))) for s in scales]
    return flags + scales


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--seed", type=int, default=2007)
    parser.add_argument("--rows", type=int, default=160)
    parser.add_argument("--prototypes", type=int, default=48)
    parser.add_argument("--missing", type=int, default=2)
    parser.add_argument("--out", default="data/synthetic_indicators.csv")
    args = parser.parse_args()

    rng = random.Random(args.seed)
    centers = cluster_centers()
    protos = []
    while len(protos) < args.prototypes:
        p = prototype(rng, rng.choice(centers))
        if p not in protos:
            protos.append(p)

    rows = []
    for k in range(args.rows):
        values = [str(v) for v in rng.choice(protos)]
        rows.append([f"state_{k + 1:03d}"] + values)
    for k in rng.sample(range(args.rows), args.missing):
        rows[k][1 + rng.randrange(len(DICHOTOMOUS) + len(ORDINAL))] = ""

    with open(args.out, "w", newline="") as f:
        w = csv.writer(f, lineterminator="\n")
        w.writerow(["country"] + DICHOTOMOUS + ORDINAL)
        w.writerows(rows)


if __name__ == "__main__":
    main()
