"""
Shared fixtures: small hand-checked grammars and a deterministic corpus.
"""

import os
import random
from typing import List, Tuple

import pytest

from grc.config.settings import reset_settings
from grc.grammar.slp import Slp
from grc.services import corpus

A, B = ord("a"), ord("b")
SIGMA = 256


def codes(text: str) -> List[int]:
    return list(text.encode("ascii"))


def oracle_case_count() -> int:
    return int(os.getenv("GRC_ORACLE_CASES", "120"))


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    """Every test starts from default settings"""
    for key in ("GRC_DEBUG_VERIFY", "GRC_LOG_LEVEL", "GRC_HYBRID_T", "GRC_LOCALITY_CONSTANT"):
        monkeypatch.delenv(key, raising=False)
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def abab_slp() -> Slp:
    """X0 -> ab, X1 -> X0 X0"""
    return Slp(sigma=SIGMA, rules=[(A, B), (SIGMA, SIGMA)])


@pytest.fixture
def aaaa_slp() -> Slp:
    """X0 -> aa, X1 -> X0 X0"""
    return Slp(sigma=SIGMA, rules=[(A, A), (SIGMA, SIGMA)])


@pytest.fixture
def fig1_slp() -> Slp:
    """Seven-rule grammar of "aabababaabaaaba" with vocc X2=3, X1=4, X4=1"""
    x = [SIGMA + i for i in range(7)]
    return Slp(
        sigma=SIGMA,
        rules=[
            (A, A),
            (B, A),
            (x[0], x[1]),
            (x[2], x[1]),
            (B, x[2]),
            (x[4], x[2]),
            (x[3], x[5]),
        ],
    )


def _build_corpus(cases: int) -> List[Tuple[str, bytes]]:
    rng = random.Random(20240901)
    texts: List[Tuple[str, bytes]] = []
    for i in range(cases):
        sigma = (2, 4, 16)[i % 3]
        length = rng.randint(2, 160)
        texts.append((f"random-{i}-s{sigma}", corpus.random_text(length, sigma, seed=rng.randrange(1 << 30))))
    for k in range(3, 15):
        texts.append((f"fib-{k}", corpus.fibonacci_word(k)))
    for k in range(2, 9):
        texts.append((f"thue-morse-{k}", corpus.thue_morse(k)))
    for n in (2, 3, 5, 8, 13, 31, 64):
        texts.append((f"unary-{n}", corpus.unary(n)))
    texts.append(("copy-mutate", corpus.copy_mutate(24, sigma=4, seed=7)))
    return texts


SMALL_CORPUS = _build_corpus(oracle_case_count())


@pytest.fixture(scope="session")
def small_corpus() -> List[Tuple[str, bytes]]:
    return SMALL_CORPUS


def random_slp(seed: int, rules: int, alphabet: int = 3, max_len: int = 400) -> Slp:
    """
    Arbitrary SLP: each rule picks terminals or any earlier variable.

    Earlier variables are reused at uneven depths and some stay unreachable
    from the start rule. Expansions are capped at ``max_len``.
    """
    rng = random.Random(seed)
    pairs: List[Tuple[int, int]] = []
    lengths: List[int] = []

    def pick(budget: int) -> int:
        options = [SIGMA + var for var, length in enumerate(lengths) if length <= budget]
        if options and rng.random() < 0.7:
            return rng.choice(options)
        return A + rng.randrange(alphabet)

    def length_of(symbol: int) -> int:
        return lengths[symbol - SIGMA] if symbol >= SIGMA else 1

    for _ in range(rules):
        left = pick(max_len - 1)
        right = pick(max_len - length_of(left))
        pairs.append((left, right))
        lengths.append(length_of(left) + length_of(right))
    return Slp(sigma=SIGMA, rules=pairs)


RANDOM_SLPS = [
    (f"slp-{i}-r{rules}-s{alphabet}", random_slp(9000 + i, rules, alphabet))
    for i, (rules, alphabet) in enumerate(
        (rules, alphabet) for rules in (1, 2, 4, 8, 16, 30) for alphabet in (1, 2, 3, 4) for _ in range(6)
    )
]


@pytest.fixture(scope="session")
def random_slps() -> List[Tuple[str, Slp]]:
    return RANDOM_SLPS
