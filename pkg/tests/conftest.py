import random
from fractions import Fraction

import pytest

from crlab.core.scalars import Q
from crlab.lie import from_matrices, preset
from crlab.lie.algebra import generated_subalgebra


@pytest.fixture
def h3():
    return preset("heisenberg:1")


@pytest.fixture
def sl2():
    return preset("sl2")


@pytest.fixture
def similitude():
    return preset("similitude")


@pytest.fixture(scope="session")
def su15():
    return preset("su15")


def random_matrix_algebra(rng: random.Random, size: int, count: int, solvable: bool):
    """Algebra generated under commutators by random strictly upper (or upper) triangular matrices."""
    start = 0 if solvable else 1
    mats = []
    for _ in range(count):
        m = [[Fraction(0)] * size for _ in range(size)]
        for r in range(size):
            for c in range(r + start, size):
                if rng.random() < 0.5:
                    m[r][c] = Fraction(rng.randint(-2, 2))
        mats.append(m)
    span = []
    flat = []
    queue = list(mats)
    while queue and len(span) < 6:
        m = queue.pop(0)
        vec = [x for row in m for x in row]
        if not any(vec):
            continue
        candidate = flat + [vec]
        if _rank(candidate) == len(candidate):
            flat.append(vec)
            span.append(m)
            for other in list(span):
                queue.append(_commutator(m, other))
    if not span or queue:
        return None
    return from_matrices(span, Q, name="random")[0]


def _commutator(a, b):
    n = len(a)
    return [
        [sum(a[i][k] * b[k][j] - b[i][k] * a[k][j] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]


def _rank(rows):
    rows = [list(r) for r in rows]
    rank, col, ncols = 0, 0, len(rows[0]) if rows else 0
    while rank < len(rows) and col < ncols:
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                f = rows[r][col] / rows[rank][col]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
        col += 1
    return rank


def random_cases(seed: int, count: int):
    """Seeded stream of (algebra, generating l0 vectors) with dim <= 6."""
    rng = random.Random(seed)
    produced = 0
    while produced < count:
        algebra = random_matrix_algebra(rng, rng.choice([3, 4]), rng.randint(2, 3), rng.random() < 0.5)
        if algebra is None or algebra.dim < 2:
            continue
        for _ in range(8):
            k = rng.randint(1, algebra.dim)
            vectors = [[Fraction(rng.randint(-1, 1)) for _ in range(algebra.dim)] for _ in range(k)]
            l0 = algebra.span(vectors)
            if l0.is_zero() or l0.is_full():
                continue
            if generated_subalgebra(algebra, l0).is_full():
                produced += 1
                yield rng, algebra, l0
                break
