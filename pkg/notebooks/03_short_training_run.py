# %% [markdown]
# # A short training run
#
# The harness reads the shipped defaults, applies overrides, trains, and
# writes CSVs that the plotting helper turns into SVG curves. Empty-8 is easy
# enough that plain PPO solves it in a minute or so.

# %%
import json
import tempfile
from pathlib import Path

from rapidim import harness, plotting, schedule

out = Path(tempfile.mkdtemp()) / "empty8"
cfg = harness.load_config(env="Empty-8", method="ppo", total_frames=100_000, run_seeds=[0, 1])
summary = harness.run_experiment(cfg, out)
print(json.dumps({k: summary[k] for k in ("mean", "std")}, indent=2))

# %%
rows = harness.read_csv(out / "seed_0" / "metrics.csv")
for r in rows[::100]:
    print(r["frames"], r["running_mean_100"], r["entropy"])

# %% [markdown]
# Greedy evaluation on held-out seeds, then a plot of both runs.

# %%
print(harness.evaluate(out / "seed_0" / "checkpoint.npz", "Empty-8", 10, (1000, 1010))["mean"])
print(plotting.plot(sorted(out.glob("seed_*/metrics.csv")), out / "figures"))

# %% [markdown]
# How often behavioural cloning runs relative to PPO depends on episode
# length. The table compares the counting rule against the published cells.

# %%
print(schedule.format_ratio_table())
