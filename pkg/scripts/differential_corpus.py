"""Run the decider against the brute-force oracle on a seeded corpus.

    python scripts/differential_corpus.py --seed 0 --unifiable 100 --unsat 50
"""

import argparse
import json
import random
import time
from collections import Counter
from dataclasses import asdict, dataclass

from sogu.corpus import mixed_unifiable, unsatisfiable_fragment
from sogu.decider import fragment_report
from sogu.oracle import differential_check


@dataclass
class Config:
    seed: int = 0
    unifiable: int = 100
    unsat: int = 50
    oracle_size: int = 9
    budget: int = 9


def run(cfg: Config) -> dict:
    rng = random.Random(cfg.seed)
    corpus = mixed_unifiable(rng, cfg.unifiable, fragment_only=True)
    corpus += unsatisfiable_fragment(rng, cfg.unsat)
    start = time.perf_counter()
    verdicts, disagreements, over_bound = Counter(), [], []
    for p in corpus:
        rep = differential_check(p, cfg.oracle_size, cfg.budget)
        verdicts[type(rep.verdict).__name__] += 1
        if not rep.agree:
            disagreements.append({"problem": [str(e) for e in p.equations], "why": rep.disagreement})
        frag = fragment_report(p)
        for s in rep.oracle.unifiers:
            if s.holes()[0] >= frag.hU_safe:
                over_bound.append({
                    "problem": [str(e) for e in p.equations],
                    "unifier": str(s),
                    "hU_safe": frag.hU_safe,
                    "certified": frag.certified,
                })
    return {
        "config": asdict(cfg),
        "problems": len(corpus),
        "seconds": round(time.perf_counter() - start, 2),
        "verdicts": dict(verdicts),
        "disagreements": disagreements,
        "over_bound": over_bound,
    }


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    for name, default in asdict(Config()).items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=int, default=default)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    cfg = Config(**{k: getattr(args, k) for k in asdict(Config())})
    out = run(cfg)
    if args.json:
        print(json.dumps(out, indent=2))
        return
    print(f"{out['problems']} problems in {out['seconds']}s, verdicts {out['verdicts']}")
    print(f"disagreements: {len(out['disagreements'])}")
    for d in out["disagreements"]:
        print("  ", d)
    print(f"oracle unifiers at or above hU_safe: {len(out['over_bound'])}")
    for o in out["over_bound"]:
        print("  ", o)


if __name__ == "__main__":
    main()
