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
"""Seeded synthetic corpus: ~1000 papers, ~5000 links, 12 scholars.

Venue strings are drawn from the packaged venue table (canonical names,
aliases, one-edit typos, unknown names, nulls). A few malformed rows and bad
links are mixed in so the load report has something to count.
"""

import argparse
import json
import os
import random

SCHOLARS = [
    ("lin", "Ada Lin"), ("chen", "Bo Chen"), ("zhou", "Mei-Ling Zhou"),
    ("iyer", "Ravi Iyer"), ("greco", "Sofia Greco"), ("novak", "Tomas Novak"),
    ("sato", "Yuki Sato"), ("fischer", "Lena Fischer"),
    ("haddad", "Omar Haddad"), ("duarte", "Ines Duarte"),
    ("mensah", "Kwame Mensah"), ("berg", "Nora Berg"),
]
LABS = [SCHOLARS[0:4], SCHOLARS[4:8], SCHOLARS[8:12]]

WORDS = ("adaptive sparse graph citation visual learning robust query index "
         "stream career network temporal hierarchy scholar metric ranking "
         "embedding cluster venue survey model bias fairness scalable").split()


def typo(rng, s):
  i = rng.randrange(1, len(s) - 1)
  return s[:i] + s[i + 1] + s[i] + s[i + 2:]  # adjacent transposition


def main():
  ap = argparse.ArgumentParser()
  ap.add_argument("--venues", required=True)
  ap.add_argument("--out", required=True)
  ap.add_argument("--seed", type=int, default=20200)
  ap.add_argument("--papers", type=int, default=1000)
  ap.add_argument("--links", type=int, default=5000)
  args = ap.parse_args()
  rng = random.Random(args.seed)
  os.makedirs(args.out, exist_ok=True)

  table = json.load(open(args.venues, encoding="utf-8"))
  popular = rng.sample(table, 80)
  weights = [1.0 / (k + 1) for k in range(len(popular))]

  papers = []
  for i in range(args.papers):
    pid = f"w{i:04d}"
    year = rng.randint(1998, 2023) if rng.random() > 0.02 else None
    r = rng.random()
    if r < 0.10:
      venue = None
    elif r < 0.17:
      venue = f"Proceedings of Regional Meeting {rng.randint(1, 40)}"
    else:
      v = rng.choices(popular, weights)[0]
      roll = rng.random()
      if roll < 0.15 and v["aliases"]:
        venue = rng.choice(v["aliases"])
      elif roll < 0.25:
        venue = typo(rng, v["canonical"])
      else:
        venue = v["canonical"]
    authors = []
    if rng.random() < 0.6:
      lab = rng.choice(LABS)
      authors = [s[0] for s in rng.sample(lab, rng.randint(1, 3))]
      if rng.random() < 0.15:
        other = rng.choice(SCHOLARS)[0]
        if other not in authors:
          authors.append(other)
    title = " ".join(rng.choice(WORDS) for _ in range(rng.randint(3, 6)))
    papers.append({"id": pid, "title": title.capitalize(), "year": year,
                   "venue": venue, "authors": authors})

  rows = [json.dumps(p, ensure_ascii=False) for p in papers]
  bad = [
      {"id": "", "title": "empty id", "year": 2001},
      {"title": "no id", "year": 2002},
      {"id": "bad-year", "title": "too old", "year": 1850},
      {"id": "bad-authors", "title": "authors not a list", "authors": "lin"},
      {"id": "bad-year-type", "title": "year as text", "year": "2010"},
  ]
  for b in bad:
    rows.insert(rng.randrange(len(rows)), json.dumps(b))
  with open(os.path.join(args.out, "papers.jsonl"), "w") as f:
    f.write("\n".join(rows) + "\n")

  # Citations: newer papers cite older ones, preferentially popular ones.
  by_year = sorted((p for p in papers), key=lambda p: p["year"] or 0)
  indeg = {p["id"]: 1 for p in papers}
  links = set()
  attempts = 0
  while len(links) < args.links and attempts < args.links * 20:
    attempts += 1
    citing = rng.choice(papers)
    y = citing["year"] or 2023
    pool = [p for p in by_year[: rng.randint(1, len(by_year))]
            if (p["year"] or 0) <= y and p["id"] != citing["id"]]
    if not pool:
      continue
    sample = rng.sample(pool, min(8, len(pool)))
    cited = rng.choices(sample, [indeg[p["id"]] ** 1.3 for p in sample])[0]
    key = (citing["id"], cited["id"])
    if key in links:
      continue
    links.add(key)
    indeg[cited["id"]] += 1
  lines = [f"{a},{b}" for a, b in sorted(links)]
  rng.shuffle(lines)
  extras = ([f"{p},{p}" for p in rng.sample([p["id"] for p in papers], 10)] +
            [f"{rng.choice(papers)['id']},zz{k:03d}" for k in range(10)] +
            rng.sample(lines, 15) +
            ["w0001;w0002", "w0003,w0004,w0005", ",w0006", "w0007,", "justone"])
  for e in extras:
    lines.insert(rng.randrange(len(lines)), e)
  with open(os.path.join(args.out, "citations.csv"), "w") as f:
    f.write("citing,cited\n" + "\n".join(lines) + "\n")

  # Profiles: the authorship as generated, minus a few omissions, plus a few
  # ids that are not in the corpus.
  with open(os.path.join(args.out, "profiles.jsonl"), "w") as f:
    for sid, name in SCHOLARS:
      ids = [p["id"] for p in papers if sid in p["authors"]]
      ids = [i for i in ids if rng.random() > 0.03]
      ids += [f"x{sid}{k}" for k in range(rng.randint(0, 2))]
      rng.shuffle(ids)
      f.write(json.dumps({"scholar_id": sid, "name": name,
                          "paper_ids": ids}) + "\n")
    f.write(json.dumps({"scholar_id": "lin", "name": "Duplicate Lin",
                        "paper_ids": []}) + "\n")


if __name__ == "__main__":
  main()
