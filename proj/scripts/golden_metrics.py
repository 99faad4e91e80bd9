#!/usr/bin/env python3
# Copyright 2026 the sd2 authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Brute-force set metrics for combination expressions over raw input files.

Membership is decided paper by paper from the profile lists; citation counts
come from a scan of the accepted links; the h-index is the definitional scan
over h = 0..n.
"""

import argparse
import json
import re

import golden_report as raw


def accepted(papers_path, citations_path):
  ids = set()
  for row in raw.json_lines(papers_path):
    if raw.paper_ok(row):
      ids.add(row["id"])
  links = set()
  with open(citations_path, encoding="utf-8-sig") as f:
    lines = [l.strip() for l in f if l.strip()]
  for line in lines[1:]:
    parts = line.split(",")
    if len(parts) != 2:
      continue
    a, b = raw.unquote(parts[0]), raw.unquote(parts[1])
    if a and b and a != b and a in ids and b in ids:
      links.add((a, b))
  return ids, links


def profiles(path):
  out, seen = {}, set()
  for row in raw.json_lines(path):
    sid = row.get("scholar_id")
    if sid in seen:
      continue
    seen.add(sid)
    out[row["name"]] = set(row["paper_ids"])
  return out


def parse(expr):
  """'A + B + (C | D) - E' or 'A | B - C' -> (ands, ors, nots) of names."""
  parts = re.split(r"\s+-\s+", expr.strip())
  positive, nots = parts[0], parts[1:]
  ands, ors = [], []
  group = re.search(r"\(([^)]*)\)", positive)
  if group:
    ors = [s.strip() for s in group.group(1).split("|")]
    positive = positive.replace(group.group(0), "")
    ands = [s.strip() for s in positive.split("+") if s.strip()]
  elif "|" in positive:
    ors = [s.strip() for s in positive.split("|")]
  else:
    ands = [s.strip() for s in positive.split("+")]
  return ands, ors, [s.strip() for s in nots]


def h_index(counts):
  h = 0
  for k in range(len(counts) + 1):
    if sum(1 for c in counts if c >= k) >= k:
      h = k
  return h


def main():
  ap = argparse.ArgumentParser()
  ap.add_argument("--dir", required=True)
  ap.add_argument("--expressions", required=True,
                  help="JSON list of expression strings")
  ap.add_argument("--out", required=True)
  args = ap.parse_args()
  d = args.dir.rstrip("/")
  ids, links = accepted(d + "/papers.jsonl", d + "/citations.csv")
  prof = profiles(d + "/profiles.jsonl")
  cites = {p: 0 for p in ids}
  for _, cited in links:
    cites[cited] += 1

  results = []
  for expr in json.load(open(args.expressions)):
    ands, ors, nots = parse(expr)
    members = []
    for p in sorted(ids):
      ok = all(p in prof[n] for n in ands)
      ok = ok and (not ors or any(p in prof[n] for n in ors))
      ok = ok and not any(p in prof[n] for n in nots)
      if ok:
        members.append(p)
    counts = [cites[p] for p in members]
    results.append({"expression": expr,
                    "paper_count": len(members),
                    "total_citations": sum(counts),
                    "h_index": h_index(counts)})
  with open(args.out, "w") as f:
    json.dump(results, f, indent=2)
    f.write("\n")


if __name__ == "__main__":
  main()
