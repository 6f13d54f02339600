"""Encode a polynomial, search for equalizers, and compare with its roots.

    python scripts/pythagorean_equalizer.py --poly "x1^2 + x2^2 - x3^2" --bound 12
"""

import argparse
import itertools
from dataclasses import dataclass

from sogu.encoder import encode_poly, verify_encoding
from sogu.equalizer import equalize
from sogu.poly import parse_poly


@dataclass
class Config:
    poly: str = "x1^2 + x2^2 - x3^2"
    bound: int = 12


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--poly", default=Config.poly)
    ap.add_argument("--bound", type=int, default=Config.bound)
    cfg = Config(**vars(ap.parse_args()))

    p = parse_poly(cfg.poly)
    enc = encode_poly(p)
    print(f"{len(enc.problem.equations)} equations, encoding verified: {verify_encoding(enc)}")
    got = {w.hs for w in equalize(enc.problem, cfg.bound, ["a"])}
    roots = {h for h in itertools.product(range(cfg.bound + 1), repeat=p.nvars) if p.eval(h) == 0}
    nontrivial = sorted(h for h in got if all(h))
    print(f"{len(got)} equalizers in [0,{cfg.bound}]^{p.nvars}, {len(roots)} roots, match: {got == roots}")
    print("all coordinates positive:", nontrivial)


if __name__ == "__main__":
    main()
