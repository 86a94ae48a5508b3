"""Shared random-tensor corpus, built once per session with a frozen seed.

The corpus interleaves field modes and forces half the draws commutative;
entries are zero-inflated from {-2, ..., 2} so structural degeneracies
(annihilators, ideal-rich algebras) appear often. Enumerations are computed
once and shared, since several suites assert different facts about the same
classification output.
"""

import random
from fractions import Fraction

import pytest

from ideals3.algebra import StructureTensor
from ideals3.onedim import enumerate_onedim
from ideals3.scalar import FieldMode, GaussianRational
from ideals3.twodim import enumerate_twodim

CORPUS_SEED = 20250816
CORPUS_SIZE = 500


def draw_entries(mode_complex: bool, commutative: bool, rng: random.Random) -> dict:
    """One random sparse entry table; commutative draws fill the upper triangle."""
    entries = {}
    for i in range(1, 4):
        for j in range(i if commutative else 1, 4):
            for k in range(1, 4):
                v = rng.choice([0, 0, 0, -2, -1, 1, 2])
                if mode_complex and rng.random() < 0.25:
                    im = rng.choice([0, 0, -1, 1, 2, -2])
                else:
                    im = 0
                if v or im:
                    val = (
                        GaussianRational(Fraction(v), Fraction(im))
                        if mode_complex
                        else v
                    )
                    entries[(i, j, k)] = val
                    if commutative and i != j:
                        entries[(j, i, k)] = val
    return entries


def build_corpus(size: int = CORPUS_SIZE, seed: int = CORPUS_SEED) -> list:
    """The frozen corpus: a single RNG drawn sequentially, modes interleaved."""
    rng = random.Random(seed)
    out = []
    for idx in range(size):
        mode_complex = idx % 2 == 1
        commutative = idx % 4 < 2
        mode = FieldMode.COMPLEX if mode_complex else FieldMode.REAL
        entries = draw_entries(mode_complex, commutative, rng)
        out.append(StructureTensor.from_entries(entries, mode))
    return out


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


@pytest.fixture(scope="session")
def corpus_enumerations(corpus):
    """(index, tensor, one-dim enumeration, two-dim enumeration) for the corpus.

    Computing these is the expensive part; every property that quantifies over
    the corpus shares this single pass.
    """
    return [
        (idx, tensor, enumerate_onedim(tensor), enumerate_twodim(tensor))
        for idx, tensor in enumerate(corpus)
    ]
