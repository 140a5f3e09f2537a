# %% [markdown]
# # Novelty bonuses and episode scores
#
# Visit counts are shared by the whole run. The BeBold-style bonus pays when a
# step crosses from a well-visited state into a rarer one, at most once per
# state per episode. The same counts feed the global term of an episode's
# ranking score.

# %%
import numpy as np

import rapidim.gridworld as gw
from rapidim.agent import ActorCritic
from rapidim.intrinsic import IntrinsicConfig, IntrinsicModule
from rapidim.ppo import EnvRunner, LevelSampler, collect_rollout
from rapidim.rapid import RankedBuffer, score_episode

module = IntrinsicModule(IntrinsicConfig("bebold", beta=0.005, key_mode="obs"))
runner = EnvRunner(gw.parse_env("MultiRoom-N4-S5"), LevelSampler(np.random.default_rng(1)), module)
model = ActorCritic(np.random.default_rng(0))

episodes = []
rng = np.random.default_rng(2)
while len(episodes) < 30:
    _, finished = collect_rollout(runner, model, 128, rng)
    episodes.extend(finished)

print("distinct states counted:", len(module.table))
for ep in episodes[:5]:
    print(f"len {len(ep):3d}  bonus paid on {int((ep.r_int > 0).sum()):3d} steps  "
          f"total bonus {ep.r_int.sum():.3f}")

# %% [markdown]
# Scores mix the extrinsic return (weight 1), the fraction of distinct states
# in the episode (0.1) and how rare those states are overall (0.001).

# %%
buffer = RankedBuffer(capacity=400)
for ep in episodes:
    s = score_episode(ep, module.table)
    report = buffer.insert(s)
print(f"last episode: ext {s.s_ext:.3f} local {s.s_local:.3f} global {s.s_global:.3f} -> {s.score:.4f}")
print("buffer:", buffer.stats())
print("experiences per level seed:", buffer.seed_histogram())
