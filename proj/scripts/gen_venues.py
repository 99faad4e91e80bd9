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
"""Writes the packaged CCF-style venue table (571 venues, 10 categories).

A handful of well-known venues carry their real names and aliases; the rest
are synthetic, built from word lists so that canonical names stay far apart
in edit distance.
"""

import argparse
import json
import random

CATEGORIES = [
    ("system and architecture", "arch"),
    ("networks", "net"),
    ("security", "sec"),
    ("database and mining", "db"),
    ("software engineering", "se"),
    ("theory", "th"),
    ("computer graphics", "cg"),
    ("artificial intelligence", "ai"),
    ("human-computer interaction", "hci"),
    ("interdisciplinary", "inter"),
]

TOTAL = 571

REAL = [
    ("tvcg", "IEEE Transactions on Visualization and Computer Graphics",
     ["Visualization and Computer Graphics, IEEE Transactions on",
      "IEEE Trans. Vis. Comput. Graph.", "IEEE TVCG", "TVCG"],
     "computer graphics", "A"),
    ("cgf", "Computer Graphics Forum", ["CGF", "Comput. Graph. Forum"],
     "computer graphics", "B"),
    ("kdd", "ACM SIGKDD Conference on Knowledge Discovery and Data Mining",
     ["KDD", "SIGKDD"], "database and mining", "A"),
    ("icde", "IEEE International Conference on Data Engineering",
     ["ICDE"], "database and mining", "A"),
    ("sigmod", "ACM SIGMOD Conference on Management of Data",
     ["SIGMOD"], "database and mining", "A"),
    ("vldb", "International Conference on Very Large Data Bases",
     ["VLDB", "PVLDB"], "database and mining", "A"),
    ("chi", "ACM Conference on Human Factors in Computing Systems",
     ["CHI"], "human-computer interaction", "A"),
]

KINDS = ["International Conference on", "Symposium on", "Journal of",
         "Transactions on", "Workshop on", "Annual Meeting on",
         "Colloquium on", "Letters on", "Review of", "Forum for"]

QUALIFIERS = ["Adaptive", "Quantum", "Distributed", "Embedded", "Robust",
              "Scalable", "Verified", "Wireless", "Cognitive", "Parallel",
              "Probabilistic", "Secure", "Visual", "Empirical", "Mobile",
              "Autonomous", "Heterogeneous", "Interactive", "Symbolic",
              "Formal", "Geometric", "Neural", "Temporal", "Spatial",
              "Elastic", "Ubiquitous", "Declarative", "Stochastic"]

TOPICS = ["Storage", "Compilers", "Protocols", "Cryptography", "Retrieval",
          "Testing", "Algorithms", "Rendering", "Learning", "Interfaces",
          "Bioinformatics", "Networking", "Hardware", "Optimization",
          "Databases", "Semantics", "Animation", "Planning", "Usability",
          "Economics", "Circuits", "Privacy", "Languages", "Simulation",
          "Robotics", "Vision", "Streaming", "Scheduling", "Caching",
          "Forensics", "Topology", "Acoustics", "Ontologies", "Auditing"]


def rank_for(i, n):
  # About 15% A, 35% B, 50% C within a category.
  frac = i / n
  return "A" if frac < 0.15 else ("B" if frac < 0.50 else "C")


def main():
  ap = argparse.ArgumentParser()
  ap.add_argument("--out", required=True)
  ap.add_argument("--seed", type=int, default=571)
  args = ap.parse_args()
  rng = random.Random(args.seed)

  venues = []
  per_cat = {name: [] for name, _ in CATEGORIES}
  for vid, canonical, aliases, cat, rank in REAL:
    per_cat[cat].append({"id": "ccf-" + vid, "canonical": canonical,
                         "aliases": aliases, "category": cat, "rank": rank})

  projections = set()
  used = set(v["canonical"].lower() for vs in per_cat.values() for v in vs)
  target = [TOTAL // len(CATEGORIES)] * len(CATEGORIES)
  for i in range(TOTAL - sum(target)):
    target[i] += 1

  for (cat, abbrev), want in zip(CATEGORIES, target):
    n = 0
    while len(per_cat[cat]) < want:
      kind = rng.choice(KINDS)
      q = rng.choice(QUALIFIERS)
      t1, t2 = rng.sample(TOPICS, 2)
      name = f"{kind} {q} {t1} and {t2}"
      # Any two synthetic names differ in at least two of the four slots,
      # which keeps them several edits apart.
      slots = (kind, q, t1, t2)
      keys = [slots[:i] + ("*",) + slots[i + 1:] for i in range(4)]
      if name.lower() in used or any(k in projections for k in keys):
        continue
      used.add(name.lower())
      projections.update(keys)
      n += 1
      per_cat[cat].append({"id": f"ccf-{abbrev}-{n:03d}", "canonical": name,
                           "aliases": [], "category": cat, "rank": None})

  for cat, _ in CATEGORIES:
    entries = per_cat[cat]
    synthetic = [v for v in entries if v["rank"] is None]
    for i, v in enumerate(synthetic):
      v["rank"] = rank_for(i, len(synthetic))
    venues.extend(entries)

  assert len(venues) == TOTAL
  with open(args.out, "w") as f:
    json.dump(venues, f, indent=1, ensure_ascii=False)
    f.write("\n")


if __name__ == "__main__":
  main()
