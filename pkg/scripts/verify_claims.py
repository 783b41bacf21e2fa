"""Run the claim harness over connected graphs and write the reports as JSON.

    python3 scripts/verify_claims.py --max-n 6 --out reports.json
"""

import argparse
import json
import logging
import time

from fixatic.claims import CLAIMS, VerifyConfig, harness_ok, run_claim

log = logging.getLogger("verify_claims")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=5)
    ap.add_argument("--join-max-n", type=int, default=4)
    ap.add_argument("--claims", nargs="*", default=list(CLAIMS))
    ap.add_argument("--out")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(message)s")

    cfg = VerifyConfig(max_n=args.max_n, join_max_n=args.join_max_n)
    reports = []
    for cid in args.claims:
        t0 = time.perf_counter()
        r = run_claim(cid, CLAIMS[cid].corpus(cfg))
        tag = r.verdict + (" (expected)" if r.expected_fail else "")
        log.info("%-28s %6d  %-15s %5.1fs", cid, r.tested, tag, time.perf_counter() - t0)
        reports.append(r)
    if args.out:
        with open(args.out, "w") as fh:
            json.dump([r.to_json() for r in reports], fh, indent=1, sort_keys=True)
    raise SystemExit(0 if harness_ok(reports) else 1)


if __name__ == "__main__":
    main()
