"""Random search over G12 at length 32, then a summary table of the records."""

import sys
import tempfile
from pathlib import Path

from revdna import search

trials = int(sys.argv[1]) if len(sys.argv) > 1 else 20
cfg = search.SearchConfig("G12", 32, 4, strategy="random", seed=1, trials=trials, min_k=20)
records = list(search.run_search(cfg))
for rec in records:
    print(f"trial {rec.index}: k={rec.k} d in [{rec.d_lower}, {rec.d_upper}] {rec.coeffs}")

path = Path(tempfile.mkdtemp()) / "records.jsonl"
search.write_jsonl(records, path)
print(f"\n{len(records)} records written to {path}\n")
print(search.render_table(search.read_records(path)))
