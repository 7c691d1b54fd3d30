"""Classify every graph on 1..N vertices and write one JSONL file per n plus a
combined CSV summary.

    python3 scripts/census.py --max-n 7 --out results/
"""

import argparse
import time
from pathlib import Path

from wordrep.catalog import classify_all, manifest, revalidate, summarize, write_jsonl, write_summary_csv
from wordrep.config import load_config


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--max-n", type=int, default=7)
    ap.add_argument("--out", default="results")
    ap.add_argument("--workers", type=int)
    args = ap.parse_args()
    cfg = load_config({"workers": args.workers})
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    rows = []
    for n in range(1, args.max_n + 1):
        t0 = time.perf_counter()
        settings = {k: v for k, v in cfg.to_dict().items() if k not in ("output", "summary")}
        recs = write_jsonl(
            classify_all(n, cfg.budget, cfg.workers, allow_large=n > 7),
            out / f"census_n{n}.jsonl",
            manifest(settings, f"enumerate n={n}"),
        )
        bad = revalidate(recs)
        if bad:
            raise SystemExit(f"n={n}: {len(bad)} certificates failed re-validation")
        (row,) = summarize(recs)
        rows.append(row)
        stages = ", ".join(f"{k} {v}" for k, v in sorted(row.stages.items()))
        print(
            f"n={n}: {row.total} classes, {row.non_word_representable} non-word-representable "
            f"({row.non_word_representable_connected} connected), {row.unknown} unknown; "
            f"{stages}; {time.perf_counter() - t0:.1f}s"
        )
    write_summary_csv(rows, out / "census_summary.csv")


if __name__ == "__main__":
    main()
