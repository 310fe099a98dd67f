"""Independent brute-force reference implementations for the tests.

Everything here is written directly from the definitions using plain
``Fraction`` arithmetic and explicit permutation-sign counting, sharing
no code path with the package: the wedge product assembles terms by
counting inversions, the interior product applies the alternating-sum
definition position by position, and the cubic endomorphism is built
entry by entry from contractions against the volume form.  The real
implementations are tested against these on random inputs.
"""

from fractions import Fraction
from itertools import combinations
from random import Random

DIM = 6
VOLUME_INDICES = tuple(range(1, DIM + 1))


def perm_sign(seq):
    """Sign of the permutation sorting ``seq``; 0 on repeats."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def wedge_dicts(f: dict, g: dict) -> dict:
    """Wedge product on coefficient dicts keyed by sorted index tuples."""
    out = {}
    for idx1, c1 in f.items():
        for idx2, c2 in g.items():
            sign = perm_sign(idx1 + idx2)
            if sign == 0:
                continue
            key = tuple(sorted(idx1 + idx2))
            out[key] = out.get(key, Fraction(0)) + sign * c1 * c2
    return {k: v for k, v in out.items() if v != 0}


def contract_dict(f: dict, vector) -> dict:
    """Interior product with a coordinate vector, from the definition."""
    out = {}
    for idx, c in f.items():
        for p, i in enumerate(idx):
            coeff = c * vector[i - 1] * (-1) ** p
            if coeff == 0:
                continue
            key = idx[:p] + idx[p + 1:]
            out[key] = out.get(key, Fraction(0)) + coeff
    return {k: v for k, v in out.items() if v != 0}


def basis_vector(i: int):
    return [Fraction(1 if j == i else 0) for j in range(1, DIM + 1)]


def k_matrix_bruteforce(rho: dict):
    """The cubic-form endomorphism, entry by entry.

    Column j is the coordinate vector X solving iota_X nu = eta for
    eta = (iota_{e_j} rho) ^ rho and nu = e^{1...6}: contracting the
    volume by e_i removes index i with sign (-1)^(i-1), so
    X_i = (-1)^(i-1) * coefficient of eta on the complement of {i}.
    """
    cols = []
    for j in range(1, DIM + 1):
        eta = wedge_dicts(contract_dict(rho, basis_vector(j)), rho)
        col = []
        for i in range(1, DIM + 1):
            key = tuple(k for k in VOLUME_INDICES if k != i)
            col.append((-1) ** (i - 1) * eta.get(key, Fraction(0)))
        cols.append(col)
    return [[cols[j][i] for j in range(DIM)] for i in range(DIM)]


def lambda_bruteforce(rho: dict) -> Fraction:
    k = k_matrix_bruteforce(rho)
    return Fraction(sum(k[i][j] * k[j][i]
                        for i in range(DIM) for j in range(DIM)), DIM)


def mat_mul(a, b):
    n = len(a)
    return [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)]


def mat_scalar_identity(value, n=DIM):
    return [[value if i == j else Fraction(0) for j in range(n)]
            for i in range(n)]


def form_to_dict(form) -> dict:
    """Convert a package Form with Fraction coefficients to a plain dict."""
    return {idx: Fraction(c) for idx, c in form.terms.items()}


def random_form_dict(rng: Random, degree: int, bound: int = 9,
                     density: float = 1.0) -> dict:
    """Seeded random form with rational coefficients, as a plain dict."""
    out = {}
    for idx in combinations(VOLUME_INDICES, degree):
        if density < 1.0 and rng.random() > density:
            continue
        num = rng.randint(-bound, bound)
        den = rng.randint(1, 4)
        if num:
            out[idx] = Fraction(num, den)
    return out


def determinant(m) -> Fraction:
    """Fraction-exact determinant by Gaussian elimination with pivoting."""
    n = len(m)
    a = [[Fraction(x) for x in row] for row in m]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            factor = a[r][col] * inv
            if factor:
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return det


def random_invertible_matrix(rng: Random, bound: int = 3):
    """Seeded random integer matrix with nonzero determinant."""
    while True:
        m = [[Fraction(rng.randint(-bound, bound)) for _ in range(DIM)]
             for _ in range(DIM)]
        if determinant(m) != 0:
            return m


def pullback_dict(f: dict, m) -> dict:
    """Pullback under the coframe substitution e^i -> sum_j m[i][j] e^j."""
    images = [{(j + 1,): m[i][j] for j in range(DIM) if m[i][j] != 0}
              for i in range(DIM)]
    out = {}
    for idx, c in f.items():
        term = {(): c}
        for i in idx:
            term = wedge_dicts(term, images[i - 1])
        for key, value in term.items():
            out[key] = out.get(key, Fraction(0)) + value
    return {k: v for k, v in out.items() if v != 0}
