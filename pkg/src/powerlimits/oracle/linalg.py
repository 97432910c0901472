"""Matrices and polynomials over a :class:`FiniteField`.

Matrices are flat row-major tuples of field codes. Polynomials are lists
of coefficients, lowest degree first, with no trailing zeros (the zero
polynomial is ``[]``).
"""

from __future__ import annotations

from .field import FiniteField


# -- polynomials ----------------------------------------------------------------

def poly_trim(f: list[int]) -> list[int]:
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def poly_add(F: FiniteField, f, g) -> list[int]:
    n = max(len(f), len(g))
    out = [F.add(f[i] if i < len(f) else 0, g[i] if i < len(g) else 0) for i in range(n)]
    return poly_trim(out)


def poly_sub(F: FiniteField, f, g) -> list[int]:
    n = max(len(f), len(g))
    out = [F.sub(f[i] if i < len(f) else 0, g[i] if i < len(g) else 0) for i in range(n)]
    return poly_trim(out)


def poly_mul(F: FiniteField, f, g) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] = F.add(out[i + j], F.mul(a, b))
    return poly_trim(out)


def poly_scale(F: FiniteField, f, c: int) -> list[int]:
    return poly_trim([F.mul(a, c) for a in f])


def poly_monic(F: FiniteField, f) -> list[int]:
    if not f:
        return []
    return poly_scale(F, f, F.inv(f[-1]))


def poly_divmod(F: FiniteField, f, g) -> tuple[list[int], list[int]]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    dg = len(g) - 1
    lead_inv = F.inv(g[-1])
    if len(r) - 1 < dg:
        return [], poly_trim(r)
    quot = [0] * (len(r) - dg)
    for i in range(len(r) - 1, dg - 1, -1):
        c = r[i]
        if c:
            c = F.mul(c, lead_inv)
            quot[i - dg] = c
            for j in range(dg + 1):
                r[i - dg + j] = F.sub(r[i - dg + j], F.mul(c, g[j]))
    return poly_trim(quot), poly_trim(r[:dg])


def poly_gcd(F: FiniteField, f, g) -> list[int]:
    """Monic gcd; ``gcd(0, 0) = 0``."""
    f, g = poly_trim(f), poly_trim(g)
    while g:
        f, g = g, poly_divmod(F, f, g)[1]
    return poly_monic(F, f)


def poly_lcm(F: FiniteField, f, g) -> list[int]:
    if not f or not g:
        return []
    quot, rem = poly_divmod(F, poly_mul(F, f, g), poly_gcd(F, f, g))
    assert not rem
    return poly_monic(F, quot)


def poly_derivative(F: FiniteField, f) -> list[int]:
    return poly_trim([F.mul(F.from_int(i), f[i]) for i in range(1, len(f))])


def is_squarefree(F: FiniteField, f) -> bool:
    """``gcd(f, f') == 1``; a vanishing derivative means not squarefree."""
    d = poly_derivative(F, f)
    if not d:
        return len(poly_trim(f)) <= 1
    return len(poly_gcd(F, f, d)) == 1


def poly_eval_matrix(F: FiniteField, f, A, n: int):
    """``f(A)`` by Horner's rule."""
    result = zero_matrix(n)
    for c in reversed(f):
        result = mat_mul(F, result, A, n)
        if c:
            result = tuple(
                F.add(result[i], c) if i % (n + 1) == 0 else result[i] for i in range(n * n)
            )
    return result


# -- matrices ---------------------------------------------------------------------

def identity(n: int) -> tuple[int, ...]:
    return tuple(1 if i % (n + 1) == 0 else 0 for i in range(n * n))


def zero_matrix(n: int) -> tuple[int, ...]:
    return (0,) * (n * n)


def mat_mul(F: FiniteField, A, B, n: int) -> tuple[int, ...]:
    add, mul = F.add, F.mul
    out = []
    for i in range(n):
        row = A[i * n:(i + 1) * n]
        for j in range(n):
            acc = 0
            for k in range(n):
                a = row[k]
                if a:
                    b = B[k * n + j]
                    if b:
                        acc = add(acc, mul(a, b))
            out.append(acc)
    return tuple(out)


def mat_pow(F: FiniteField, A, e: int, n: int) -> tuple[int, ...]:
    result = identity(n)
    base = tuple(A)
    while e:
        if e & 1:
            result = mat_mul(F, result, base, n)
        e >>= 1
        if e:
            base = mat_mul(F, base, base, n)
    return result


def mat_vec(F: FiniteField, A, v, n: int) -> list[int]:
    add, mul = F.add, F.mul
    out = []
    for i in range(n):
        acc = 0
        for k in range(n):
            a = A[i * n + k]
            if a and v[k]:
                acc = add(acc, mul(a, v[k]))
        out.append(acc)
    return out


def determinant(F: FiniteField, A, n: int) -> int:
    m = [list(A[i * n:(i + 1) * n]) for i in range(n)]
    det = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col]), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = F.neg(det)
        pv = m[col][col]
        det = F.mul(det, pv)
        inv = F.inv(pv)
        for r in range(col + 1, n):
            if m[r][col]:
                factor = F.mul(m[r][col], inv)
                m[r] = [F.sub(x, F.mul(factor, y)) for x, y in zip(m[r], m[col])]
    return det


def char_poly(F: FiniteField, A, n: int) -> list[int]:
    """det(xI - A) by Berkowitz's algorithm (ring operations only)."""
    add, mul, neg = F.add, F.mul, F.neg
    vect = [1]  # high-to-low coefficients of the leading r x r block
    for r in range(n):
        a = A[r * n + r]
        R = [A[r * n + j] for j in range(r)]
        C = [A[i * n + r] for i in range(r)]
        # Toeplitz column: 1, -a, -R C, -R A_r C, ..., -R A_r^{r-1} C
        col = [1, neg(a)]
        v = C
        for _ in range(r):
            acc = 0
            for x, y in zip(R, v):
                if x and y:
                    acc = add(acc, mul(x, y))
            col.append(neg(acc))
            v = [
                _dot(F, [A[i * n + j] for j in range(r)], v)
                for i in range(r)
            ]
        new = []
        for i in range(r + 2):
            acc = 0
            for j in range(min(i, r) + 1):
                t = col[i - j]
                if t and vect[j]:
                    acc = add(acc, mul(t, vect[j]))
            new.append(acc)
        vect = new
    return list(reversed(vect))


def _dot(F: FiniteField, u, v) -> int:
    acc = 0
    for x, y in zip(u, v):
        if x and y:
            acc = F.add(acc, F.mul(x, y))
    return acc


def _krylov_annihilator(F: FiniteField, A, n: int, start: list[int]) -> list[int]:
    """Monic polynomial of least degree with f(A) start = 0."""
    basis = []  # (pivot, vector normalized at pivot, combination polynomial)
    raw = list(start)
    w = raw
    combo = [1]
    while True:
        for pivot, b, cb in basis:
            c = w[pivot]
            if c:
                w = [F.sub(x, F.mul(c, y)) for x, y in zip(w, b)]
                combo = poly_sub(F, combo, poly_scale(F, cb, c))
        pivot = next((i for i, x in enumerate(w) if x), None)
        if pivot is None:
            return poly_monic(F, combo)
        inv = F.inv(w[pivot])
        basis.append((pivot, [F.mul(x, inv) for x in w], poly_scale(F, combo, inv)))
        raw = mat_vec(F, A, raw, n)
        w = raw
        combo = [0] * len(basis) + [1]


def min_poly(F: FiniteField, A, n: int) -> list[int]:
    """LCM over the standard basis of the Krylov annihilators."""
    result = [1]
    for i in range(n):
        e = [0] * n
        e[i] = 1
        result = poly_lcm(F, result, _krylov_annihilator(F, A, n, e))
    return result


def classify_matrix(F: FiniteField, A, n: int) -> tuple[bool, bool, bool]:
    """``(regular semisimple, semisimple, regular)`` via char/min polynomial criteria."""
    cp = char_poly(F, A, n)
    if is_squarefree(F, cp):
        return True, True, True
    mp = min_poly(F, A, n)
    return False, is_squarefree(F, mp), len(mp) == len(cp)
