# %% [markdown]
# # Batch verification from the command line
#
# The `ternwb` command runs every suite and writes a JSON report plus a
# markdown summary.  Here it is driven through `ternwb.cli.main`.

# %%
import json
import tempfile
from pathlib import Path

from ternwb import cli

out = Path(tempfile.mkdtemp())
code = cli.main(["report", "--out", str(out)])
print("exit code", code)
print(sorted(p.name for p in out.iterdir()))

# %%
records = json.loads((out / "report.json").read_text())
by_status = {}
for r in records:
    by_status[r["status"]] = by_status.get(r["status"], 0) + 1
print(by_status)
print([r["check_id"] for r in records if r["status"] == "discrepancy_documented"][:5])

# %%
print((out / "summary.md").read_text()[:600])
