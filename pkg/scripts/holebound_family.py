"""Unifiers of the worked unary example with ever more bound-variable occurrences.

Starting from the two-hole unifier ``s0 = g(b,g(x,x))``, the bodies
``s_{k+1} = g(b, g(s_k, s_k))`` double the hole count each step and all unify,
so no fixed bound on hole counts holds for this problem.

    python scripts/holebound_family.py --steps 4
"""

import argparse
from dataclasses import dataclass
from pathlib import Path

from sogu.counting import unification_condition
from sogu.decider import fragment_report
from sogu.syntax import parse_file, parse_subst
from sogu.terms import App, Binding, is_unifier, size

FIXTURE = Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "ex5.sogu"


@dataclass
class Config:
    file: str = str(FIXTURE)
    steps: int = 4


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--file", default=Config.file)
    ap.add_argument("--steps", type=int, default=Config.steps)
    cfg = Config(**vars(ap.parse_args()))

    p = parse_file(Path(cfg.file).read_text()).problem
    rep = fragment_report(p)
    print(f"hU_safe={rep.hU_safe} certified={rep.certified} multiplier constant={rep.mul_const}")
    body = parse_subst("sub F(x) = g(b,g(x,x))", p.signature).body
    for k in range(cfg.steps + 1):
        sigma = Binding(p.fvar, 1, body)
        print(
            f"k={k} holes={sigma.holes()[0]:4d} size={size(body):4d} "
            f"unifier={is_unifier(p, sigma)} condition={unification_condition(p, sigma)}"
        )
        body = App("g", (App("b"), App("g", (body, body))))


if __name__ == "__main__":
    main()
