#!/usr/bin/env python3
"""Generate a synthetic demo corpus in the causemap JSONL schema.

Usage:
  python scripts/make_demo_corpus.py --out demo.jsonl \
      --articles 10 --comments 2000 --commenters 50 --seed 7
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from synth import make_corpus_lines  # noqa: E402


def main() -> int:
    parser = argparse.ArgumentParser(
        description="Write a deterministic synthetic comment corpus.")
    parser.add_argument("--out", required=True)
    parser.add_argument("--articles", type=int, default=10)
    parser.add_argument("--comments", type=int, default=2000)
    parser.add_argument("--commenters", type=int, default=50)
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    lines = make_corpus_lines(args.articles, args.comments, args.commenters,
                              seed=args.seed)
    Path(args.out).write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(lines)} records to {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
