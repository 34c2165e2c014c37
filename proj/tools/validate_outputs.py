#!/usr/bin/env python3
"""Run every rdw subcommand once and validate its JSON against schemas/.

Usage: validate_outputs.py <rdw binary> <schemas dir> <scratch dir>
"""
import csv
import json
import pathlib
import subprocess
import sys

import jsonschema

CSV_HEADERS = {
    "growth": ["group", "radius", "count"],
    "rdprofile": ["group", "family", "r", "l2", "op_lower", "op_upper"],
    "centroid": ["r", "cond1_max", "cond2_max", "cond3_max"],
}


def main() -> int:
    rdw, schema_dir, scratch = map(pathlib.Path, sys.argv[1:4])
    scratch.mkdir(parents=True, exist_ok=True)
    schemas = {}
    for path in sorted(schema_dir.glob("*.schema.json")):
        doc = json.loads(path.read_text())
        jsonschema.Draft202012Validator.check_schema(doc)
        schemas[doc["properties"]["schema"]["const"]] = doc

    growth_csv = scratch / "growth.csv"
    rd_csv = scratch / "rd.csv"
    centroid_csv = scratch / "centroid.csv"
    runs = [
        (["growth", "--group", "zd:2", "--radius", "6", "--out", growth_csv], 0, growth_csv, "growth"),
        (["rd-degree", "--group", "zd:1", "--rmax", "8", "--window", "2:8", "--out", rd_csv], 0, rd_csv, "rdprofile"),
        (["rd-degree", "--group", "free:2", "--family", "random", "--rmax", "3", "--seed", "4"], 0, None, None),
        (["centroid-verify", "--group", "free:2", "--rmax", "4", "--hradius", "4", "--out", centroid_csv], 0,
         centroid_csv, "centroid"),
        (["centroid-verify", "--group", "zd:1", "--rmax", "2", "--hradius", "3", "--out", centroid_csv], 0,
         centroid_csv, "centroid"),
        (["opnorm", "--group", "free:2", "--fn", "gen-sum", "--radius", "5", "--dense", "--return-prob", "6"], 0,
         None, None),
        (["kesten", "--group", "zd:2", "--fn", "ball:1", "--radius", "6"], 0, None, None),
        (["median-check", "--graph", "cube:3"], 0, None, None),
        (["median-check", "--graph", "k23"], 4, None, None),
        (["hyperplanes", "--graph", "grid:3x3", "--pair", "0,8"], 0, None, None),
        (["hyperplanes", "--graph", "tree:12,1"], 0, None, None),
        (["coeff-decay", "--group", "free:2", "--xi", "ball:1", "--eta", "sphere:2", "--s", "1.5", "--radius", "4"],
         0, None, None),
    ]
    failures = 0
    for args, code, csv_path, kind in runs:
        proc = subprocess.run([str(rdw), *map(str, args)], capture_output=True, text=True)
        label = " ".join(map(str, args[:1]))
        if proc.returncode != code:
            print(f"FAIL {label}: exit {proc.returncode}, expected {code}: {proc.stderr.strip()}")
            failures += 1
            continue
        docs = [json.loads(proc.stdout)]
        if csv_path is not None:
            docs.append(json.loads(pathlib.Path(f"{csv_path}.json").read_text()))
            with open(csv_path, newline="", encoding="utf-8") as fh:
                header = next(csv.reader(fh))
            if header != CSV_HEADERS[kind]:
                print(f"FAIL {label}: csv header {header}")
                failures += 1
        for doc in docs:
            try:
                jsonschema.validate(doc, schemas[doc["schema"]], cls=jsonschema.Draft202012Validator)
            except (KeyError, jsonschema.ValidationError) as exc:
                print(f"FAIL {label}: {str(exc).splitlines()[0]}")
                failures += 1
        print(f"ok   {' '.join(map(str, args))}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
