"""Run every verification and search campaign and write one JSON report per campaign.

    python3 scripts/run_campaigns.py --out results --labeled-max-n 7
"""

from __future__ import annotations

import argparse
import json
from dataclasses import asdict, dataclass
from pathlib import Path

from eccgraph import theorems


@dataclass
class CampaignConfig:
    out: Path = Path("results")
    labeled_max_n: int = 6
    tree_max_n: int = 14
    table_max_param: int = 30


def campaigns(cfg: CampaignConfig):
    yield "theorem2", lambda: theorems.verify_theorem2(cfg.labeled_max_n)
    yield "akiyama-gap", lambda: theorems.search_akiyama_gap(cfg.labeled_max_n)
    yield "same-diameter", lambda: theorems.search_problem1(cfg.labeled_max_n)
    yield "self-ecc", lambda: theorems.search_problem2(cfg.labeled_max_n)
    yield "tree-diameter", lambda: theorems.verify_tree_diameter_bound(cfg.tree_max_n)
    yield "two-center", lambda: theorems.verify_two_center_structure(cfg.tree_max_n)
    yield "lemma5", lambda: theorems.verify_lemma5(cfg.tree_max_n)
    yield "table1", lambda: theorems.verify_table1(cfg.table_max_param)
    yield "grid", theorems.grid_fixture_check


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=CampaignConfig.out)
    ap.add_argument("--labeled-max-n", type=int, default=CampaignConfig.labeled_max_n)
    ap.add_argument("--tree-max-n", type=int, default=CampaignConfig.tree_max_n)
    ap.add_argument("--table-max-param", type=int, default=CampaignConfig.table_max_param)
    cfg = CampaignConfig(**vars(ap.parse_args()))
    cfg.out.mkdir(parents=True, exist_ok=True)

    summary = {"config": {k: str(v) for k, v in asdict(cfg).items()}, "campaigns": {}}
    for name, run in campaigns(cfg):
        report = run()
        (cfg.out / f"{name}.json").write_text(report.to_json() + "\n")
        summary["campaigns"][name] = {
            "checked": report.checked,
            "violations": len(report.violations),
            "findings": len(report.findings),
            "elapsed_ms": report.elapsed_ms,
        }
        print(f"{name:14s} checked={report.checked:<9d} violations={len(report.violations):<4d} "
              f"findings={len(report.findings):<5d} {report.elapsed_ms / 1000:.1f}s")
    (cfg.out / "summary.json").write_text(json.dumps(summary, indent=2) + "\n")


if __name__ == "__main__":
    main()
