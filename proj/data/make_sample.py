#!/usr/bin/env python3
# Copyright 2026 The TextDP Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates data/sample/embeddings.txt from the bundled corpora.

Vectors are synthetic: each word gets a seeded topic centroid plus noise, so
nearest neighbours are meaningful enough for demos but carry no semantics.
"""

import collections
import csv
import pathlib
import string

import numpy as np

SEED = 20260101
DIM = 16
VOCAB_SIZE = 400
TOPICS = 24

HERE = pathlib.Path(__file__).resolve().parent / "sample"

FILLER = """
about above across act add age ago agree air all almost alone along already
also always among animal answer any appear apple area arm army around art ask
away baby back ball bank base be bear beat bed begin behind bell below best
between big bird black blue boat body bone both box boy bread break bright
bring brother brown build burn busy buy call camp can car card care carry case
cat catch cause cell center chair chance change charge check child choose
circle class clean clear climb clock close cloud coast coat cold color come
common cook corn cost cotton count course cover cow cross crowd dance dark day
dead deal dear decide deep desert design dog door double down draw dream dress
drink drive drop dry duck early earth east easy eat edge egg eight enemy enough
enter even event ever every exact face fact fall farm fast father fear feel
field fight figure fill final find fire fish five floor flower fly follow food
foot force forest form free friend front fruit game garden gas gather gentle
girl glad glass gold gone grass gray green ground group grow guess half hand
happen hat head hear heat heavy help high hill hold hole home hope horse hot
hour house hunt ice idea inch iron island job join joy jump keep key kind kitchen
lake land large last late lead leaf learn leave left leg letter lie light line
list little lost low machine main map mark market matter meat meet metal middle
mile milk mind minute miss money moon morning mother mountain mouth move
""".split()


def peel(word):
  head, tail = [], []
  while word and word[0] in string.punctuation:
    head.append(word[0])
    word = word[1:]
  while word and word[-1] in string.punctuation:
    tail.insert(0, word[-1])
    word = word[:-1]
  return head + ([word] if word else []) + tail


def corpus_counts():
  counts = collections.Counter()
  for name, columns in (("sst2_sample.tsv", ("sentence",)),
                        ("qnli_sample.tsv", ("question", "sentence"))):
    with open(HERE / name, newline="") as f:
      for row in csv.DictReader(f, delimiter="\t"):
        for column in columns:
          for word in row[column].lower().split():
            counts.update(peel(word))
  return counts


def main():
  counts = corpus_counts()
  words = [w for w, _ in sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))]
  for w in FILLER:
    if len(words) >= VOCAB_SIZE:
      break
    if w not in counts:
      words.append(w)
  rng = np.random.default_rng(SEED)
  centroids = rng.normal(0.0, 1.0, size=(TOPICS, DIM))
  topic = rng.integers(0, TOPICS, size=len(words))
  vectors = centroids[topic] + rng.normal(0.0, 0.35, size=(len(words), DIM))
  with open(HERE / "embeddings.txt", "w") as f:
    f.write(f"{len(words)} {DIM}\n")
    for w, v in zip(words, vectors):
      f.write(w + " " + " ".join(f"{x:.6f}" for x in v) + "\n")


if __name__ == "__main__":
  main()
