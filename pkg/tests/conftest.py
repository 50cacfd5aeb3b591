import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from rigidity_lab import bigraded_betti, build  # noqa: E402

CORPUS_SEED = 20240611
CORPUS_SIZE = 120
MAX_M = 12


def _leaf(rng: random.Random) -> str:
    kind = rng.choice(["simplex", "simplex", "polygon", "cube"])
    if kind == "simplex":
        return f"simplex({rng.randint(1, 4)})"
    if kind == "polygon":
        return f"polygon({rng.randint(3, 8)})"
    return f"cube({rng.randint(1, 4)})"


def _grow(rng: random.Random, expr: str, P):
    """One random construction step applied to ``expr``; None if it overshoots."""
    K = P.complex
    op = rng.choice(["vc", "vc", "truncate", "product", "consum"])
    if op == "vc":
        if P.n < 2:
            return None
        return f"vc({expr},{rng.randrange(len(K.facets))})"
    if op == "truncate":
        facet = rng.choice(K.facets)
        if len(facet) < 2:
            return None
        size = rng.randint(2, len(facet))
        face = sorted(rng.sample(facet, size))
        return f"truncate({expr},[{','.join(map(str, face))}])"
    other = _leaf(rng)
    Q = build(other)
    if op == "product":
        return f"product({expr},{other})"
    if Q.n != P.n or P.n < 2:
        return None
    return f"consum({expr},{rng.randrange(len(K.facets))},{other},{rng.randrange(len(Q.complex.facets))})"


def make_corpus(seed: int = CORPUS_SEED, size: int = CORPUS_SIZE, max_m: int = MAX_M):
    rng = random.Random(seed)
    out = {}
    attempts = 0
    while len(out) < size:
        attempts += 1
        assert attempts < 50 * size, "corpus generator is stuck"
        expr = _leaf(rng)
        P = build(expr)
        for _ in range(rng.randint(0, 3)):
            nxt = _grow(rng, expr, P)
            if nxt is None:
                continue
            Q = build(nxt)
            if Q.m > max_m:
                break
            expr, P = nxt, Q
        if P.m <= max_m and expr not in out:
            out[expr] = P
    return list(out.items())


@pytest.fixture(scope="session")
def corpus():
    return make_corpus()


@pytest.fixture(scope="session")
def corpus_betti(corpus):
    return {expr: bigraded_betti(P) for expr, P in corpus}


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    verdicts = getattr(module, "VERDICTS", None)
    if not verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(verdicts):
        terminalreporter.write_line(verdicts[number])
