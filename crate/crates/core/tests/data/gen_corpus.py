"""Regenerates corpus.g6 and corpus_meta.txt with networkx's graph6 encoder.

Usage: python3 gen_corpus.py  (run from this directory)
"""
import random

import networkx as nx

rng = random.Random(20240607)
seen = {}
for g in nx.graph_atlas_g():
    if g.number_of_nodes() > 0:
        seen.setdefault(nx.to_graph6_bytes(g, header=False).decode().strip(), g)
while len(seen) < 11000:
    n = rng.choice([rng.randint(1, 12), rng.randint(1, 30), rng.randint(1, 62)])
    g = nx.gnp_random_graph(n, rng.random(), seed=rng.randrange(2**32))
    seen.setdefault(nx.to_graph6_bytes(g, header=False).decode().strip(), g)

with open("corpus.g6", "w") as words, open("corpus_meta.txt", "w") as meta:
    for word, g in seen.items():
        words.write(word + "\n")
        meta.write(f"{g.number_of_nodes()} {g.number_of_edges()}\n")
