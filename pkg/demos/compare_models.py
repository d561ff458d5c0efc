# %% [markdown]
# Train a few models on one logged dataset and score them in the world that
# produced it. Small budget: a couple of minutes on one core.

# %%
from hybridq import Agent, Hyperparams, evaluate_policy, random_world
from hybridq.simworld import generate_dataset, policy_from_sim, split_dataset
from hybridq.trainers import train_agent

sim = random_world(seed=0)
data = generate_dataset(sim, policy_from_sim(sim, "M"), 20_000, seed=1)
train, valid, test = split_dataset(data, seed=2)
print(len(train), "training donors; mean logged reward", round(train.mean_reward, 3))

# %% [markdown]
# The logging policy itself is the baseline any learned policy should beat.

# %%
print("policy M      ", round(evaluate_policy(sim, policy_from_sim(sim, "M"), 1000, seed=3), 3))

# %%
hp = Hyperparams(iterations=800, lr=0.1, clip_norm=1.0)
for kind, window in [("SL-DNN", None), ("DQN", 2), ("RL-RNN", None), ("SL-RNN+RL-DQN", None)]:
    agent = Agent(kind, sim.config, window, seed=0)
    train_agent(agent, train, hp, valid=valid)
    print(f"{agent.name:14s}", round(evaluate_policy(sim, agent, 1000, seed=3), 3))

# %% [markdown]
# The same agents can be saved with `hybridq.agents.save_checkpoint` and
# scored later from the shell with `hybridq eval --checkpoint ... --world ...`.
