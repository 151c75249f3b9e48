import random

import pytest

from wpmx import build_index, generate_random, parse_pwm

EXAMPLE_PWM = """\
pwm v1
alphabet: ab
length: 10
# [(a,0.5),(b,0.5)] b a b [(a,0.5),(b,0.5)] [(a,0.5),(b,0.5)] a a b a
1 a:0.5 b:0.5
2 b:1
3 a:1
4 b:1
5 a:0.5 b:0.5
6 a:0.5 b:0.5
7 a:1
8 a:1
9 b:1
10 a:1
"""


@pytest.fixture(scope="session")
def example_seq():
    return parse_pwm(EXAMPLE_PWM)


@pytest.fixture(scope="session")
def example_index(example_seq):
    return build_index(example_seq, 4)


def small_instances(count, seed=0, max_n=12, max_sigma=3, zs=(1, 2, 4, 8, 3)):
    """Deterministic list of (X, z) desk-scale instances."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(1, max_n)
        sigma = rng.randint(1, max_sigma)
        X = generate_random(
            n, "abc"[:sigma], rng.randrange(1 << 30), rng.random(),
            resolution=rng.choice([4, 16, None]),
        )
        out.append((X, rng.choice(zs)))
    return out


ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
