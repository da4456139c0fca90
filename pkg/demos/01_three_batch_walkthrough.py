"""Replay a tiny three-batch stream and watch the dictionary grow.

The first two batches carry the same B-A-C-D path. In the third, the C-A-B
wedge already in the dictionary is matched and then closed by the B-C edge
that sits between two of its matched vertices, so a triangle enters the
dictionary.
"""
# %%
from graphzip import LabeledGraph, mine_stream

def batch(labels, edges):
    g = LabeledGraph()
    for v, lab in labels.items():
        g.add_vertex(v, lab)
    for u, v in edges:
        g.add_edge(u, v, "x")
    return g


batches = [
    batch({0: "A", 1: "B", 2: "C", 3: "D"}, [(0, 1), (2, 0), (3, 2)]),
    batch({10: "A", 11: "B", 12: "C", 13: "D"}, [(10, 11), (12, 10), (13, 12)]),
    # C-A-B closes into a triangle here; D-B is unrelated
    batch({20: "A", 21: "B", 22: "C", 23: "D", 24: "B"}, [(20, 21), (22, 20), (21, 22), (23, 24)]),
]

# %%
def show(res, d):
    print(f"batch {res.index}: {res.edges} edges, {res.edges_used} used by patterns, "
          f"{res.singletons_added} singletons, dictionary size {len(d)}")


d, results = mine_stream(batches, alpha=4, theta=50, on_batch=show)

# %% the final dictionary, best first
for rank, entry in enumerate(d.ranked()):
    labels = "".join(sorted(entry.pattern.label(v) for v in entry.pattern.vertices))
    print(f"{rank:>2}  edges={entry.edge_count}  freq={entry.frequency}  "
          f"score={entry.score}  labels={labels}")

# %% the dictionary serializes to plain text
print(d.dumps())
