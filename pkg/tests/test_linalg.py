import random

from twistzeta.linalg import (
    LatticeCoords,
    howell_form,
    integer_kernel,
    kernel_mod,
    smith_normal_form,
    solve_integer,
    solve_mod,
)


def mat_mul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
            for i in range(len(a))]


def test_snf_transforms():
    rng = random.Random(11)
    for _ in range(30):
        n, m = rng.randint(1, 5), rng.randint(1, 5)
        a = [[rng.randint(-6, 6) for _ in range(m)] for _ in range(n)]
        d, u, v, diag = smith_normal_form(a)
        prod = mat_mul(mat_mul(u, a), v)
        for i in range(n):
            for j in range(m):
                expected = diag[i][j]
                assert prod[i][j] == expected
                if i != j:
                    assert expected == 0


def test_integer_kernel():
    a = [[2, 4, 6], [1, 2, 3]]
    ker = integer_kernel(a)
    assert len(ker) == 2
    for row in ker:
        assert all(sum(a[i][j] * row[j] for j in range(3)) == 0 for i in range(2))


def test_solve_integer():
    a = [[2, 0], [0, 3]]
    assert solve_integer(a, [4, 9]) == [2, 3]
    assert solve_integer(a, [1, 0]) is None


def test_solve_mod_basic():
    # 2x = 2 mod 4 has solutions x in {1, 3}
    x = solve_mod([[2]], [2], 4)
    assert x is not None and (2 * x[0]) % 4 == 2
    assert solve_mod([[2]], [1], 4) is None


def test_solve_mod_random_consistency():
    rng = random.Random(99)
    for _ in range(120):
        n = rng.choice([2, 3, 4, 6, 8, 9, 12])
        rows = rng.randint(1, 4)
        cols = rng.randint(1, 4)
        a = [[rng.randrange(n) for _ in range(cols)] for _ in range(rows)]
        # planted solution
        x0 = [rng.randrange(n) for _ in range(cols)]
        b = [sum(a[i][j] * x0[j] for j in range(cols)) % n for i in range(rows)]
        x = solve_mod(a, b, n)
        assert x is not None
        for i in range(rows):
            assert sum(a[i][j] * x[j] for j in range(cols)) % n == b[i]


def test_solve_mod_vs_brute():
    rng = random.Random(5)
    for _ in range(80):
        n = rng.choice([2, 3, 4])
        rows, cols = rng.randint(1, 3), rng.randint(1, 3)
        a = [[rng.randrange(n) for _ in range(cols)] for _ in range(rows)]
        b = [rng.randrange(n) for _ in range(rows)]
        brute = None
        for mask in range(n ** cols):
            x = []
            t = mask
            for _ in range(cols):
                x.append(t % n)
                t //= n
            if all(sum(a[i][j] * x[j] for j in range(cols)) % n == b[i]
                   for i in range(rows)):
                brute = x
                break
        got = solve_mod(a, b, n)
        assert (got is None) == (brute is None)


def test_howell_membership():
    # row span of [[2,0],[0,2]] over Z/4 contains [2,2] but not [1,0]
    h, _ = howell_form([[2, 0], [0, 2]], 4)
    assert solve_mod([[2, 0], [0, 2]], [2, 2], 4) is not None
    assert solve_mod([[2, 0], [0, 2]], [1, 0], 4) is None


def test_kernel_mod():
    gens = kernel_mod([[2]], 4)
    vals = {tuple(g) for g in gens}
    assert (2,) in vals
    for g in gens:
        assert (2 * g[0]) % 4 == 0


def test_lattice_coords():
    basis = [[1, 2, 0], [0, 3, 1]]
    lc = LatticeCoords(basis)
    v = [2, 7, 1]  # 2*b0 + 1*b1
    assert lc.coords(v) == [2, 1]
    assert lc.coords([1, 0, 0]) is None
