"""Per-batch timing over a longer stream, plus the shape of the final dictionary."""
# %%
import io

import numpy as np

from graphzip import GenConfig, dict_histogram, generate, mine_stream, rate_summary
from graphzip.cli import DEFAULT_ALPHA, DEFAULT_THETA
from graphzip.stream_io import batch_stream, parse_stream

gen = generate(GenConfig(vertices=10_000, edges=50_000, coverage=0.5, seed=8), "4-CLIQ")
batches = batch_stream(parse_stream(io.StringIO(gen.stream)), DEFAULT_ALPHA)
d, results = mine_stream(batches, DEFAULT_ALPHA, DEFAULT_THETA)

# %% batch time should not drift upward as the stream goes on
s = rate_summary(results, warmup=0.1)
print(f"{s.batches} batches: median {s.median * 1e3:.2f} ms, p90 {s.p90 * 1e3:.2f} ms, "
      f"ratio {s.ratio:.2f}")
times = np.array([r.elapsed for r in results])
for i, chunk in enumerate(np.array_split(times, 10)):
    print(f"  tenth {i}: mean {chunk.mean() * 1e3:6.2f} ms")

# %% (edges, frequency) for each kept pattern
for edges, freq in sorted(dict_histogram(d), key=lambda p: (-p[0], -p[1]))[:15]:
    print(f"  {edges:>2} edges  freq {freq}")
