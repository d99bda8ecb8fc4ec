import random

import pytest

from arp import ArpInstance, Feature, ReleaseConfig
from arp import fixtures as bundled
from arp.dataio import build_instance, load_dataset

MOTIVATING_VALUES = [
    # (id, name, sat, dissat), unit efforts
    (1, "Instant streaming", 9, 1),
    (2, "Multi-casting", 9, 2),
    (3, "Replay", 9, 3),
    (4, "Video on demand", 8, 4),
    (5, "Playlist", 7, 7),
    (6, "Video recommendation", 4, 8),
    (7, "Video history", 3, 9),
    (8, "Parental control", 2, 9),
    (9, "Share video", 1, 9),
]

# The six published trade-off plans of the walkthrough instance.
MOTIVATING_FRONT = [
    (frozenset({7, 8, 9}), 6.0, 25.0),
    (frozenset({5, 7, 8}), 12.0, 27.0),
    (frozenset({5, 6, 7}), 14.0, 28.0),
    (frozenset({3, 4, 5}), 24.0, 38.0),
    (frozenset({2, 3, 5}), 25.0, 40.0),
    (frozenset({1, 2, 3}), 27.0, 46.0),
]


def make_instance(values, efforts=None, capacities=(3.0,), sat_discounts=None, dissat_discounts=None):
    """Instance from (id, name, sat, dissat) rows; efforts default to 1."""
    features = tuple(
        Feature(id=fid, name=name, effort=1.0 if efforts is None else efforts[idx],
                sat_value=s, dissat_value=ds)
        for idx, (fid, name, s, ds) in enumerate(values)
    )
    config = ReleaseConfig(
        k_releases=len(capacities),
        capacities=tuple(capacities),
        sat_discounts=sat_discounts,
        dissat_discounts=dissat_discounts,
    )
    return ArpInstance(features=features, config=config)


@pytest.fixture
def motivating_instance():
    return make_instance(MOTIVATING_VALUES)


@pytest.fixture
def motivating_dataset_path():
    return bundled.motivating_path()


@pytest.fixture
def motivating_from_file():
    return build_instance(load_dataset(bundled.motivating_path()))


def random_instance(rng: random.Random, max_n: int = 12, max_k: int = 2) -> ArpInstance:
    """Small random instance with valid discounts, for oracle comparisons."""
    n = rng.randint(3, max_n)
    k = rng.randint(1, max_k)
    features = tuple(
        Feature(
            id=i + 1,
            name=f"F{i + 1}",
            effort=round(rng.uniform(0.5, 5.0), 3),
            sat_value=round(rng.uniform(0.0, 9.0), 3),
            dissat_value=round(rng.uniform(0.0, 9.0), 3),
        )
        for i in range(n)
    )
    total_effort = sum(f.effort for f in features)
    capacities = tuple(round(rng.uniform(0.25, 0.6) * total_effort, 3) for _ in range(k))
    if k == 1:
        config = ReleaseConfig(k_releases=1, capacities=capacities)
    else:
        w_mid = round(rng.uniform(0.2, 0.8), 3)
        z_mid = round(rng.uniform(0.2, 0.8), 3)
        config = ReleaseConfig(
            k_releases=2,
            capacities=capacities,
            sat_discounts=(1.0, w_mid, 0.0),
            dissat_discounts=(0.0, z_mid, 1.0),
        )
    return ArpInstance(features=features, config=config)
