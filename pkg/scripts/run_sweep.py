"""Run the registered property sweeps with a configurable corpus and write a JSON report.

    python scripts/run_sweep.py --max-size 8 --out results/sweep.json
    python scripts/run_sweep.py --theorem duality-roundtrips --max-points 3
"""
import argparse
import dataclasses
import json
import platform
import sys
import time
from pathlib import Path

from maxspec.theorems import REGISTRY, SweepConfig, run_all


def parse_args(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    defaults = SweepConfig()
    for f in dataclasses.fields(SweepConfig):
        flag = "--" + f.name.replace("_", "-")
        if f.name == "product_primes":
            p.add_argument(flag, type=int, nargs="+", default=list(defaults.product_primes))
        else:
            p.add_argument(flag, type=int, default=getattr(defaults, f.name))
    p.add_argument("--theorem", action="append", choices=list(REGISTRY), help="repeatable; default all")
    p.add_argument("--out", type=Path, help="write the JSON report here (default stdout)")
    return p.parse_args(argv)


def main(argv=None) -> int:
    args = parse_args(argv)
    kwargs = {f.name: getattr(args, f.name) for f in dataclasses.fields(SweepConfig)}
    kwargs["product_primes"] = tuple(kwargs["product_primes"])
    cfg = SweepConfig(**kwargs)

    start = time.perf_counter()
    results = run_all(cfg, args.theorem)
    elapsed = time.perf_counter() - start
    for r in results:
        print(f"{r.summary()} [{r.seconds:.2f}s]", file=sys.stderr)

    report = {
        "config": dataclasses.asdict(cfg),
        "python": platform.python_version(),
        "seconds": round(elapsed, 3),
        "results": [dict(r.to_json(), seconds=round(r.seconds, 3)) for r in results],
    }
    text = json.dumps(report, indent=2)
    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(text + "\n")
    else:
        print(text)
    return 0 if all(r.ok for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())
