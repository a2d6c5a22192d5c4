import random

from symdom import make_factor, product

# Every canonical factor of rank <= 3 with smallish parameters; the pool
# for random product domains in the sweep-style tests.
RANK3_POOL = [
    make_factor("I", (1, 1)),
    make_factor("I", (2, 1)),
    make_factor("I", (3, 1)),
    make_factor("I", (4, 1)),
    make_factor("I", (2, 2)),
    make_factor("I", (3, 2)),
    make_factor("I", (4, 2)),
    make_factor("I", (3, 3)),
    make_factor("I", (4, 3)),
    make_factor("II", (5,)),
    make_factor("II", (6,)),
    make_factor("II", (7,)),
    make_factor("III", (2,)),
    make_factor("III", (3,)),
    make_factor("IV", (5,)),
    make_factor("IV", (6,)),
    make_factor("V"),
    make_factor("VI"),
]


def random_domains(count, seed, max_factors=4, pool=RANK3_POOL):
    """Seeded random product domains with 1..max_factors factors each."""
    rng = random.Random(seed)
    return [
        product(rng.choices(pool, k=rng.randint(1, max_factors)))
        for _ in range(count)
    ]
