"""Print the small worked computations: figure-eight pre-coloring matrix,
the 6_2 Goeritz matrix, the figure-eight difference table and a
determinant/colorability table for the bundled diagrams.

    python3 scripts/reproduce_examples.py [--max-n 30]
"""

import argparse
import math
from dataclasses import dataclass

from knotcolor import corpus
from knotcolor.coloring import (
    Coloring,
    count_colorings,
    determinant,
    elementary_divisors,
    is_n_colorable,
    precoloring_matrix,
)
from knotcolor.diagram import faces
from knotcolor.goeritz import differences, goeritz_determinant, pre_goeritz


@dataclass
class Config:
    max_n: int = 30
    primes: tuple[int, ...] = (2, 3, 5, 7, 11, 13)


def section(title):
    print(f"\n== {title}")


def main(cfg: Config):
    section("figure-eight pre-coloring matrix (rows: crossings, cols: strands)")
    print(precoloring_matrix(corpus.load("figure8")))

    section("6_2 pre-Goeritz matrix, unbounded region shaded")
    rc = faces(corpus.load("knot_6_2"), shade_unbounded=True)
    pre, order = pre_goeritz(rc)
    print(f"regions {order}")
    print(pre)
    print(f"|det G| = {goeritz_determinant(rc)}")

    section("figure-eight 5-coloring (2,0,4,1): d(R_0, R_j)")
    d = corpus.load("figure8")
    table = differences(d, faces(d), Coloring(5, (2, 0, 4, 1)))
    print({j: table(0, j) for j in range(1, 6)})

    section("bundled diagrams")
    print(f"{'diagram':<16} {'knot':<10} {'det':>4}  {'divisors':<24} colorable n <= {cfg.max_n}")
    for name in corpus.names():
        d = corpus.load(name)
        det = determinant(d)
        assert det == goeritz_determinant(faces(d))
        ns = [n for n in range(2, cfg.max_n + 1) if is_n_colorable(d, n)]
        assert all(math.gcd(n, det) > 1 for n in ns)
        divs = elementary_divisors(d) if d.crossings else []
        print(f"{name:<16} {corpus.KNOT_OF[name]:<10} {det:>4}  {str(divs):<24} {ns}")

    section("p-coloring counts")
    print(f"{'diagram':<16} " + " ".join(f"{p:>6}" for p in cfg.primes))
    for name in corpus.names():
        d = corpus.load(name)
        print(f"{name:<16} " + " ".join(f"{count_colorings(d, p):>6}" for p in cfg.primes))


if __name__ == "__main__":
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=Config.max_n)
    main(Config(max_n=ap.parse_args().max_n))
