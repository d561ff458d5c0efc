# %% [markdown]
# Scoring a model by the logged rewards on the steps where it agrees with
# the log can be gamed. The model below behaves exactly like the logging
# policy and still looks better under that score.

# %%
from hybridq import random_world
from hybridq.evalkit import CherryPickingAgent, GenerosityRule, rollout_policy, same_deviated_eval
from hybridq.simworld import generate_dataset, policy_from_sim, split_dataset

sim = random_world(seed=0)
logging = policy_from_sim(sim, "M")
data = generate_dataset(sim, logging, 50_000, seed=1)
train, _, test = split_dataset(data, seed=2)

# %% [markdown]
# The rule looks at one observation dimension and remembers which of its
# values came with above-average rewards in the training split.

# %%
rule = GenerosityRule(train)
agent = CherryPickingAgent(sim.action_freq, rule, seed=3)
res = same_deviated_eval(agent, test)
print(f"SAME mean {res.same_mean:.3f} over {res.same_count} steps")
print(f"DEVIATED mean {res.deviated_mean:.3f} over {res.deviated_count} steps")
print(f"test-set mean {test.mean_reward:.3f}")

# %% [markdown]
# In the simulator the agent draws its actions from the logging policy's
# distribution, so its real value is the logging policy's value.

# %%
mine = rollout_policy(sim, agent, 2000, seed=4)
base = rollout_policy(sim, logging, 2000, seed=5)
print(f"agent {mine.per_step:.3f} +- {mine.ci95():.3f}   logging policy {base.per_step:.3f} +- {base.ci95():.3f}")
