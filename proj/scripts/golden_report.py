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
"""Counts what a corpus load should accept and drop, line by line.

Written independently of the C++ loader; its output is checked in as the
golden load report for a fixture directory.
"""

import argparse
import json
import math
import string

ARTICLES = ("the ", "a ", "an ")
PUNCT = set(string.punctuation)
SPACE = set(" \t\n\r\f\v")


def normalize(raw):
  words, cur = [], []
  for ch in raw:
    if ch in PUNCT or ch in SPACE:
      if cur:
        words.append("".join(cur))
        cur = []
    else:
      cur.append(ch.lower() if "A" <= ch <= "Z" else ch)
  if cur:
    words.append("".join(cur))
  out = " ".join(words)
  changed = True
  while changed:
    changed = False
    for art in ARTICLES:
      if len(out) > len(art) and out.startswith(art):
        out = out[len(art):]
        changed = True
  return out


def osa(a, b):
  d = [[0] * (len(b) + 1) for _ in range(len(a) + 1)]
  for i in range(len(a) + 1):
    d[i][0] = i
  for j in range(len(b) + 1):
    d[0][j] = j
  for i in range(1, len(a) + 1):
    for j in range(1, len(b) + 1):
      cost = 0 if a[i - 1] == b[j - 1] else 1
      d[i][j] = min(d[i - 1][j] + 1, d[i][j - 1] + 1, d[i - 1][j - 1] + cost)
      if i > 1 and j > 1 and a[i - 1] == b[j - 2] and a[i - 2] == b[j - 1]:
        d[i][j] = min(d[i][j], d[i - 2][j - 2] + 1)
  return d[len(a)][len(b)]


def limit(n):
  return min(2, math.ceil(0.1 * n - 1e-9))


def resolve(aliases, raw):
  """Returns (venue_id or None, fuzzy)."""
  key = normalize(raw)
  if not key:
    return None, False
  if key in aliases:
    return aliases[key], False
  best = {}
  for alias, vid in aliases.items():
    lim = limit(len(alias))
    if lim == 0 or abs(len(alias) - len(key)) > lim:
      continue
    d = osa(key, alias)
    if d <= lim:
      best[vid] = min(best.get(vid, d), d)
  if not best:
    return None, False
  top = min(best.values())
  winners = [v for v, d in best.items() if d == top]
  return (winners[0], True) if len(winners) == 1 else (None, False)


def load_aliases(path):
  table = {}
  for v in json.load(open(path, encoding="utf-8")):
    for name in [v["canonical"]] + list(v.get("aliases") or []):
      table[normalize(name)] = v["id"]
  return table


def is_int(x):
  return isinstance(x, int) and not isinstance(x, bool)


def paper_ok(row):
  pid = row.get("id")
  if not isinstance(pid, str) or not pid:
    return False
  if "title" in row and not isinstance(row["title"], str):
    return False
  y = row.get("year")
  if y is not None and (not is_int(y) or not 1900 <= y <= 2100):
    return False
  v = row.get("venue")
  if v is not None and not isinstance(v, str):
    return False
  a = row.get("authors")
  if a is not None:
    if not isinstance(a, list):
      return False
    if any(not isinstance(x, str) or not x for x in a):
      return False
  return True


def json_lines(path):
  with open(path, encoding="utf-8-sig") as f:
    for line in f:
      if line.strip():
        yield json.loads(line)


def unquote(s):
  s = s.strip()
  if len(s) >= 2 and s[0] == '"' and s[-1] == '"':
    s = s[1:-1]
  return s


def report(papers, citations, venues, profiles):
  aliases = load_aliases(venues)
  r = dict.fromkeys([
      "papers_accepted", "papers_malformed", "papers_unknown_year",
      "papers_unknown_venue", "venues_unresolved", "venues_fuzzy",
      "links_accepted", "links_malformed", "links_self_citation",
      "links_dangling", "links_duplicate", "profiles_accepted",
      "profiles_malformed", "profile_papers_unresolved"], 0)
  ids = set()
  for row in json_lines(papers):
    if not paper_ok(row):
      r["papers_malformed"] += 1
      continue
    ids.add(row["id"])
    r["papers_accepted"] += 1
    if row.get("year") is None:
      r["papers_unknown_year"] += 1
    venue = row.get("venue")
    if venue is None or not venue.strip():
      r["papers_unknown_venue"] += 1
    else:
      vid, fuzzy = resolve(aliases, venue)
      if vid is None:
        r["venues_unresolved"] += 1
      elif fuzzy:
        r["venues_fuzzy"] += 1

  seen = set()
  with open(citations, encoding="utf-8-sig") as f:
    lines = [l.strip() for l in f if l.strip()]
  for line in lines[1:]:
    parts = line.split(",")
    if len(parts) != 2:
      r["links_malformed"] += 1
      continue
    a, b = unquote(parts[0]), unquote(parts[1])
    if not a or not b:
      r["links_malformed"] += 1
    elif a == b:
      r["links_self_citation"] += 1
    elif a not in ids or b not in ids:
      r["links_dangling"] += 1
    elif (a, b) in seen:
      r["links_duplicate"] += 1
    else:
      seen.add((a, b))
      r["links_accepted"] += 1

  scholars = set()
  for row in json_lines(profiles):
    sid, name, pids = row.get("scholar_id"), row.get("name"), row.get("paper_ids")
    ok = (isinstance(sid, str) and sid and isinstance(name, str) and name and
          isinstance(pids, list) and all(isinstance(p, str) for p in pids))
    if not ok or sid in scholars:
      r["profiles_malformed"] += 1
      continue
    scholars.add(sid)
    r["profiles_accepted"] += 1
    r["profile_papers_unresolved"] += len(set(p for p in pids if p not in ids))
  return r


def main():
  ap = argparse.ArgumentParser()
  ap.add_argument("--dir", required=True,
                  help="directory with papers.jsonl, citations.csv, "
                       "venues.json, profiles.jsonl")
  ap.add_argument("--venues", help="override the venue file")
  ap.add_argument("--out", required=True)
  args = ap.parse_args()
  d = args.dir.rstrip("/")
  r = report(d + "/papers.jsonl", d + "/citations.csv",
             args.venues or d + "/venues.json", d + "/profiles.jsonl")
  with open(args.out, "w") as f:
    json.dump(r, f, indent=2, sort_keys=True)
    f.write("\n")


if __name__ == "__main__":
  main()
