"""Plant a motif in a random graph, stream it, and check it comes back."""
# %%
import io
import time

from graphzip import GenConfig, accuracy, generate, mine_stream, read_truth
from graphzip.cli import DEFAULT_ALPHA, DEFAULT_THETA
from graphzip.generator import PATTERN_NAMES
from graphzip.stream_io import batch_stream, parse_stream

# %%
gen = generate(GenConfig(vertices=1000, edges=5000, coverage=0.5, seed=1), "4-CLIQ")
print(f"planted {gen.plant_count} copies of a {gen.pattern.n_edges}-edge clique")
print("\n".join(gen.stream.splitlines()[:6]))

# %%
batches = batch_stream(parse_stream(io.StringIO(gen.stream)), DEFAULT_ALPHA)
d, results = mine_stream(batches, DEFAULT_ALPHA, DEFAULT_THETA)
truth = read_truth(io.StringIO(gen.truth))
print(accuracy([t[2] for t in truth], d, names=[t[0] for t in truth]).format())

top = d.ranked()[0]
print(f"top pattern: {top.edge_count} edges, freq {top.frequency}, score {top.score}")

# %% every shape at three coverages
for name in PATTERN_NAMES:
    row = []
    for cov in (0.2, 0.5, 0.8):
        gen = generate(GenConfig(coverage=cov, seed=7), name)
        t0 = time.perf_counter()
        d, _ = mine_stream(batch_stream(parse_stream(io.StringIO(gen.stream)), DEFAULT_ALPHA),
                           DEFAULT_ALPHA, DEFAULT_THETA)
        (_, _, g), = read_truth(io.StringIO(gen.truth))
        row.append(f"{accuracy([g], d).accuracy:.0f} ({time.perf_counter() - t0:.1f}s)")
    print(f"{name:>6}  " + "  ".join(row))
