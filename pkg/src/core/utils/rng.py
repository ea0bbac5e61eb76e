import numpy as np


def make_rng(seed: int) -> np.random.Generator:
    """
    Build the project-wide random generator: a counter-based Philox stream keyed by ``seed``.
    """
    return np.random.Generator(np.random.Philox(seed))


def derive_seed(master: int, *keys: int) -> int:
    """
    Mix a master seed with integer keys (e.g. n index and repetition index) into a child seed.

    The mix is a fixed integer hash, so the child seed of a work item does not depend on the
    order in which workers pick items up.
    """
    sequence = np.random.SeedSequence([master, *keys])
    return int(sequence.generate_state(1, dtype=np.uint64)[0])
