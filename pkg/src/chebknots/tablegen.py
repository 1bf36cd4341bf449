"""Regenerate ``data/knot_table.json``.

Each Jones polynomial is computed by this package's bracket from a standard
diagram: KnotInfo's PD code (``database_knotinfo``, install the ``tables``
extra) or, for ``11_1``, the closed two-strand braid.  Run::

    python -m chebknots.tablegen
"""

from __future__ import annotations

import argparse
import json
from pathlib import Path

from .diagram import PDCode
from .invariants import jones_from_pd, standard_torus_pd

# Knot types named in the two reference tables of reduced triples and
# alternating (i,j)-knots, plus the unknot.
TABLE_NAMES = [
    "0_1",
    "3_1", "4_1", "5_1", "5_2", "6_2", "6_3",
    "7_1", "7_3", "7_4", "7_5", "7_7",
    "8_3", "8_7", "8_12", "8_15",
    "9_1", "9_18", "9_20", "9_31",
    "10_116", "11_1",
]

# not in KnotInfo under this name: the (2,11) torus knot
TORUS_ONLY = {"11_1": 11}

DEFAULT_PATH = Path(__file__).with_name("data") / "knot_table.json"


def knotinfo_pd(rows: dict, name: str) -> PDCode:
    raw = rows[name]["pd_notation"]
    return PDCode(tuple(tuple(x) for x in json.loads(raw)) if raw else ())


def build_table() -> dict:
    import database_knotinfo

    rows = {r["name"]: r for r in database_knotinfo.link_list()}
    knots = []
    for name in TABLE_NAMES:
        if name in TORUS_ONLY:
            pd = standard_torus_pd(TORUS_ONLY[name])
            source = f"standard (2,{TORUS_ONLY[name]}) torus diagram"
        else:
            pd = knotinfo_pd(rows, name)
            source = "KnotInfo PD notation"
        v = jones_from_pd(pd)
        knots.append(
            {
                "name": name,
                "crossing_number": int(name.split("_")[0]),
                "diagram": source,
                "jones": v.to_json(),
            }
        )
    return {
        "schema": "chebknots.knot_table/1",
        "variable": "x = t^(1/4)",
        "knots": knots,
    }


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=DEFAULT_PATH)
    args = ap.parse_args(argv)
    table = build_table()
    args.out.write_text(json.dumps(table, indent=1) + "\n")
    print(f"wrote {len(table['knots'])} knots to {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
