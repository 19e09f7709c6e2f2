"""Exact integer/rational linear algebra with certified results.

Rank and kernel computations run modulo word-sized primes for speed, and
every modular result is then promoted to a proof over the rationals:

* a nonzero pivot minor modulo p certifies ``rank >= r`` over Q;
* candidate kernel vectors are rebuilt over Q by Chinese remaindering and
  rational reconstruction, denominators are cleared, and ``M @ V == 0`` is
  established exactly by checking it modulo fresh primes whose product
  exceeds twice an explicit bound on the entries of ``M @ V``; the
  ``n - r`` verified independent kernel vectors certify ``rank <= r``.

The kernel basis returned is a basis of the *saturated* integer lattice
``ker_Q(M) ∩ Z^n``: integrality of a rational combination of the reduced
kernel vectors is one congruence per non-free coordinate, each solved by an
O(t^2) update of a coefficient lattice, and the result is merged into a
triangular basis.  Basis vectors of a saturated lattice are automatically
primitive.

Also provided: fraction Gauss-Jordan elimination, kernels and solvers over
Q, exact determinants by fraction-free elimination, row-space membership,
and builders for the integer matrices of the maps alpha and delta on the
class basis.

>>> certified_kernel([[1, 2, 3], [2, 4, 6]]).rank
1
>>> det_bareiss([[2, 1], [7, 4]])
1
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt, lcm
from typing import Sequence

import numpy as np

from .compositions import enumerate_compositions
from .delta import delta_class, delta_explicit
from .lincomb import LinComb, alpha
from .stuffle import stuffle as _stuffle_fn


class ReconstructionError(RuntimeError):
    """Raised when rational reconstruction keeps failing as primes grow."""


# ---------------------------------------------------------------------------
# primes


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _primes_below(limit: int, count: int) -> tuple[int, ...]:
    out = []
    n = limit - 1 if limit % 2 == 0 else limit - 2
    while len(out) < count:
        if _is_prime(n):
            out.append(n)
        n -= 2
    return tuple(out)


#: primes just below 2^21: residue elimination and rational reconstruction.
#: Small enough that p^2 products accumulated over a <= 2^11-wide panel stay
#: below 2^53, so the elimination runs on exact float64 matmuls (BLAS).
PRIMES21 = _primes_below(1 << 21, 384)
#: primes just below 2^20: verification products (int64 matmul cannot
#: overflow: q^2 * n_cols < 2^63 for n_cols up to 2^22).
PRIMES20 = _primes_below(1 << 20, 512)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b) >= 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _ratrec(a: int, m: int) -> Fraction | None:
    """Rational reconstruction of a mod m with |num|, den <= sqrt(m/2)."""
    bound = isqrt(m // 2)
    r0, r1 = m, a % m
    t0, t1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        t0, t1 = t1, t0 - q * t1
    if t1 == 0:
        return None
    num, den = (r1, t1) if t1 > 0 else (-r1, -t1)
    if den > bound or gcd(num, den) != 1:
        return None
    if (num - a * den) % m != 0:
        return None
    return Fraction(num, den)


# ---------------------------------------------------------------------------
# modular kernels


def _kernel_mod_p(M: np.ndarray, p: int, work: int = 4_000_000):
    """Row-reduce M mod p.  Returns (rank, pivot columns, X) where X is the
    reduced-echelon block on the non-pivot (free) columns: the kernel vector
    of free column f has 1 at that column and -X[i, f] at pivot column i."""
    if p < (1 << 21):
        return _kernel_mod_p_fast(M, p)
    return _kernel_mod_p_int(M, p, work)


def _mod_into(A: np.ndarray, p: float) -> np.ndarray:
    """Reduce exact-integer float64 entries into [0, p), in place."""
    q = np.floor(A * (1.0 / p))
    q *= p
    A -= q
    np.add(A, p, out=A, where=A < 0)
    np.subtract(A, p, out=A, where=A >= p)
    return A


def _kernel_mod_p_fast(M: np.ndarray, p: int, block: int = 64):
    """Blocked Gauss-Jordan mod p (p < 2^21) on exact float64 arithmetic.

    Every value is an integer below 2^53, so float64 matmuls are exact and
    run on BLAS; entries stay lazily unreduced between reductions.  Pivot
    choice matches _kernel_mod_p_int, so the two return identical results.
    """
    pf = float(p)
    W = np.asarray(M % p, dtype=np.float64)
    m, n = W.shape
    pivots: list[int] = []
    X = np.empty((m, 0), dtype=np.float64)
    r = 0
    acc = 0  # panel applications since the trailing block was last reduced
    for c0 in range(0, n, block):
        c1 = min(c0 + block, n)
        wb = c1 - c0
        buf = _mod_into(np.ascontiguousarray(W[:, c0:c1]), pf)
        F = np.zeros((m, wb), dtype=np.float64)
        pivs: list[int] = []
        wp = 0
        for j in range(wb):
            col = np.ascontiguousarray(buf[:, j])
            _mod_into(col, pf)
            buf[:, j] = col
            rr = r + wp
            if rr >= m:
                continue
            nz = np.flatnonzero(col[rr:])
            if nz.size == 0:
                continue
            i0 = rr + int(nz[0])
            if i0 != rr:
                W[[rr, i0]] = W[[i0, rr]]
                buf[[rr, i0]] = buf[[i0, rr]]
                F[[rr, i0]] = F[[i0, rr]]
                if X.shape[1]:
                    X[[rr, i0]] = X[[i0, rr]]
                col = buf[:, j].copy()
            piv = int(col[rr])
            row = buf[rr]
            _mod_into(row, pf)
            row *= float(pow(piv, p - 2, p))
            _mod_into(row, pf)
            fcol = col
            fcol[rr] = 0.0
            F[:, wp] = fcol
            buf -= fcol[:, None] * buf[rr]
            pivs.append(piv)
            pivots.append(c0 + j)
            wp += 1
        if wp:
            pr = np.arange(r, r + wp)
            G = F[pr, :wp].astype(np.int64)
            lam = [[0] * wp for _ in range(wp)]
            for i in range(wp):
                row = [0] * wp
                row[i] = 1
                for jj in range(i):
                    g = int(G[i, jj])
                    if g:
                        lrow = lam[jj]
                        for kk in range(jj + 1):
                            row[kk] = (row[kk] - g * lrow[kk]) % p
                inv = pow(pivs[i], p - 2, p)
                lam[i] = [x * inv % p for x in row]
            lam_np = np.array(lam, dtype=np.int64)
            lam2 = (lam_np - np.triu(G, 1) @ lam_np) % p
            Ft = _mod_into(F[:, :wp] @ lam_np.astype(np.float64), pf)
            Ft[pr] = ((np.eye(wp, dtype=np.int64) - lam2) % p).astype(np.float64)
            chunk = max(1, (1 << 24) // max(m, 1))
            if c1 < n:
                Pold = _mod_into(W[pr, c1:], pf)
                for a in range(0, n - c1, chunk):
                    W[:, c1 + a : c1 + a + chunk] -= Ft @ Pold[:, a : a + chunk]
            if X.shape[1]:
                PoldX = _mod_into(X[pr].copy(), pf)
                X -= Ft @ PoldX
            r += wp
            acc += 1
            if acc >= 16:
                if c1 < n:
                    _mod_into(W[:, c1:], pf)
                if X.shape[1]:
                    _mod_into(X, pf)
                acc = 0
        pivset = set(pivots)
        fr = [j for j in range(wb) if c0 + j not in pivset]
        if fr:
            add = _mod_into(buf[:, fr], pf)
            X = np.concatenate([X, add], axis=1) if X.shape[1] else add
    _mod_into(X, pf)
    return r, tuple(pivots), X[:r].astype(np.int64)


def _kernel_mod_p_int(M: np.ndarray, p: int, work: int = 4_000_000):
    """Reference row reduction mod p in pure int64, valid for p < 2^31."""
    R = (M % p).astype(np.int64)
    m, n = R.shape
    pivots: list[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        col = R[r:, c]
        nz = np.flatnonzero(col)
        if nz.size == 0:
            continue
        i0 = r + int(nz[0])
        if i0 != r:
            R[[r, i0]] = R[[i0, r]]
        piv = int(R[r, c])
        if piv != 1:
            R[r, c:] = R[r, c:] * pow(piv, p - 2, p) % p
        below = np.flatnonzero(R[r + 1 :, c])
        if below.size:
            idx = below + (r + 1)
            step = max(1, work // max(1, n - c))
            for s in range(0, idx.size, step):
                ii = idx[s : s + step]
                f = R[ii, c][:, None]
                R[ii, c:] = (R[ii, c:] - f * R[r, c:]) % p
        pivots.append(c)
        r += 1
    pivset = set(pivots)
    free = [c for c in range(n) if c not in pivset]
    X = R[:r, free].copy() if free else np.zeros((r, 0), dtype=np.int64)
    for i in range(r - 1, 0, -1):
        if X.shape[1] == 0:
            break
        fcol = R[:i, pivots[i]]
        if np.any(fcol):
            X[:i, :] = (X[:i, :] - fcol[:, None] * X[i, :]) % p
    return r, tuple(pivots), X


def _crt_matrix(mats, primes):
    """Entrywise Chinese remaindering; returns (list-of-list ints, modulus)."""
    r, t = mats[0].shape
    cur = [[int(mats[0][i, j]) for j in range(t)] for i in range(r)]
    mod = primes[0]
    for X, p in zip(mats[1:], primes[1:]):
        minv = pow(mod % p, p - 2, p)
        for i in range(r):
            row, xrow = cur[i], X[i]
            for j in range(t):
                a = row[j]
                h = (int(xrow[j]) - a) * minv % p
                row[j] = a + mod * h
        mod *= p
    return cur, mod


# ---------------------------------------------------------------------------
# saturation


def _sweep(B: list[list[int]], pvec: list[int], d: int, D: int) -> None:
    """Restrict the coefficient lattice span(B) + D*Z^t to the sublattice
    where sum_j lambda_j * pvec[j] = 0 mod d (requires d | D)."""
    t = len(B)
    res = [sum(B[m][j] * pvec[j] for j in range(t)) % d for m in range(t)]
    car = None
    for m in range(t):
        if res[m] == 0:
            continue
        if car is None:
            car = m
            continue
        g, x, y = _xgcd(res[car], res[m])
        u, v = res[m] // g, res[car] // g
        bc, bm = B[car], B[m]
        B[car] = [(x * bc[j] + y * bm[j]) % D for j in range(t)]
        B[m] = [(u * bc[j] - v * bm[j]) % D for j in range(t)]
        res[car], res[m] = g % d, 0
    if car is not None and res[car]:
        s = d // gcd(res[car], d)
        if s > 1:
            B[car] = [s * x % D for x in B[car]]


def _echelon_basis_int(rows) -> list[list[int]]:
    """Triangular Z-basis of the lattice generated by integer rows."""
    work = [list(map(int, r)) for r in rows if any(r)]
    if not work:
        return []
    n = len(work[0])
    out = []
    for col in range(n):
        cand = [r for r in work if r[col] != 0]
        if not cand:
            continue
        while len(cand) > 1:
            cand.sort(key=lambda r: abs(r[col]))
            s = cand[0]
            sc = s[col]
            for r in cand[1:]:
                q = r[col] // sc
                if q:
                    for j in range(col, n):
                        r[j] -= q * s[j]
            cand = [r for r in cand if r[col] != 0]
        piv = cand[0]
        if piv[col] < 0:
            piv[:] = [-x for x in piv]
        work = [r for r in work if r is not piv and r[col] == 0]
        out.append(piv)
    return out


def _saturate(F, pivots, free, n) -> tuple[tuple[int, ...], ...]:
    """Saturated basis of the lattice Q-spanned by the reduced kernel
    vectors (1 at own free column, -F[i][f] at pivot column i) inside Z^n."""
    r, t = len(pivots), len(free)
    if t == 0:
        return ()
    row_den = [lcm(*(F[i][f].denominator for f in range(t))) if t else 1 for i in range(r)]
    D = lcm(1, *row_den) if r else 1
    if D == 1:
        basis = []
        for f in range(t):
            v = [0] * n
            v[free[f]] = 1
            for i in range(r):
                v[pivots[i]] = -int(F[i][f])
            basis.append(tuple(v))
        return tuple(basis)
    B = [[1 if i == j else 0 for j in range(t)] for i in range(t)]
    for i in range(r):
        d = row_den[i]
        if d == 1:
            continue
        pvec = [int(-F[i][f] * d) % d for f in range(t)]
        _sweep(B, pvec, d, D)
    gens = [row for row in B if any(row)]
    gens += [[D if j == f else 0 for j in range(t)] for f in range(t)]
    H = _echelon_basis_int(gens)
    if len(H) != t:
        raise ReconstructionError("coefficient lattice lost full rank")
    basis = []
    for lam in H:
        v = [0] * n
        for f in range(t):
            v[free[f]] = lam[f]
        for i in range(r):
            entry = sum(Fraction(lam[f]) * (-F[i][f]) for f in range(t) if lam[f])
            if entry.denominator != 1:
                raise ReconstructionError("saturation produced a non-integer entry")
            v[pivots[i]] = int(entry)
        basis.append(tuple(v))
    return tuple(basis)


# ---------------------------------------------------------------------------
# the certified pipeline


@dataclass(frozen=True)
class KernelCertificate:
    """Exact rank and (optionally) a saturated integer kernel basis.

    ``rank`` is proven: a nonzero pivot minor mod p gives rank >= rank, and
    ``nullity`` exactly-verified independent kernel vectors give the reverse
    inequality.  ``basis`` rows span ker_Q(M) ∩ Z^{n_cols}."""

    n_rows: int
    n_cols: int
    rank: int
    basis: tuple[tuple[int, ...], ...] | None
    primes: tuple[int, ...]

    @property
    def nullity(self) -> int:
        return self.n_cols - self.rank


def _verify_product(M, mmax, P, L, pivots, free, chunk_rows=4096):
    """Exactly establish M @ V == 0 for the integer kernel matrix V with
    diag(L) on the free rows and P on the pivot rows, by modular checks whose
    combined modulus exceeds twice a bound on |M @ V| entries."""
    m, n = M.shape
    t = len(free)
    vmax = max([1] + [abs(x) for x in L] + [abs(x) for row in P for x in row])
    bound = 2 * n * max(mmax, 1) * vmax
    qs, prod = [], 1
    for q in PRIMES20:
        qs.append(q)
        prod *= q
        if prod > bound:
            break
    if prod <= bound:
        raise ReconstructionError("verification primes exhausted")
    free_idx = np.array(free, dtype=np.intp)
    piv_idx = np.array(pivots, dtype=np.intp)
    for q in qs:
        V = np.zeros((n, t), dtype=np.int64)
        V[free_idx, np.arange(t)] = np.array([x % q for x in L], dtype=np.int64)
        if pivots:
            V[piv_idx, :] = np.array([[x % q for x in row] for row in P], dtype=np.int64)
        for a in range(0, m, chunk_rows):
            C = (M[a : a + chunk_rows] % q) @ V
            if np.any(C % q):
                return False
    return True


def certified_kernel(
    mat, *, need_basis: bool = True, max_primes: int = 12, chunk_rows: int = 4096
) -> KernelCertificate:
    """Certified rank and saturated kernel lattice of an integer matrix.

    >>> c = certified_kernel([[1, 1, 0], [0, 2, 2]])
    >>> c.rank, c.nullity, c.basis
    (2, 1, ((1, -1, 1),))
    """
    M = np.asarray(mat, dtype=np.int64)
    if M.ndim != 2:
        raise ValueError("a 2-D integer matrix is required")
    m, n = M.shape
    if n == 0:
        return KernelCertificate(m, 0, 0, () if need_basis else None, ())
    mmax = int(np.abs(M).max()) if M.size else 0
    if m == 0 or mmax == 0:
        basis = tuple(tuple(1 if j == f else 0 for j in range(n)) for f in range(n))
        return KernelCertificate(m, n, 0, basis if need_basis else None, ())
    attempts: list[tuple[int, int, tuple[int, ...], np.ndarray]] = []
    for idx in range(max_primes):
        p = PRIMES30[idx]
        r, pivots, X = _kernel_mod_p(M, p, chunk_rows * 1000)
        attempts.append((p, r, pivots, X))
        best_rank = max(a[1] for a in attempts)
        best_piv = min(a[2] for a in attempts if a[1] == best_rank)
        S = [a for a in attempts if a[1] == best_rank and a[2] == best_piv]
        r, pivots = best_rank, best_piv
        t = n - r
        if t == 0:
            return KernelCertificate(m, n, r, () if need_basis else None, tuple(a[0] for a in S))
        big, mod = _crt_matrix([a[3] for a in S], [a[0] for a in S])
        cache: dict[int, Fraction | None] = {}
        F: list[list[Fraction]] = []
        ok = True
        for row in big:
            frow = []
            for x in row:
                got = cache.get(x, 0)
                if got == 0 and x not in cache:
                    got = cache[x] = _ratrec(x, mod)
                if got is None:
                    ok = False
                    break
                frow.append(got)
            if not ok:
                break
            F.append(frow)
        if not ok:
            continue
        pivset = set(pivots)
        free = [c for c in range(n) if c not in pivset]
        L = [lcm(*(F[i][f].denominator for i in range(r))) if r else 1 for f in range(t)]
        P = [[int(-F[i][f] * L[f]) for f in range(t)] for i in range(r)]
        if not _verify_product(M, mmax, P, L, pivots, free, chunk_rows):
            continue
        basis = _saturate(F, pivots, free, n) if need_basis else None
        return KernelCertificate(m, n, r, basis, tuple(a[0] for a in S))
    raise ReconstructionError(f"no certificate after {max_primes} primes")


# ---------------------------------------------------------------------------
# fraction elimination, solvers, determinants


def rref_fraction(rows) -> tuple[int, tuple[int, ...], list[list[Fraction]]]:
    """Gauss-Jordan over Q: (rank, pivot columns, reduced nonzero rows)."""
    R = [[Fraction(x) for x in row] for row in rows]
    if not R:
        return 0, (), []
    n = len(R[0])
    pivots: list[int] = []
    r = 0
    for c in range(n):
        sel = next((i for i in range(r, len(R)) if R[i][c]), None)
        if sel is None:
            continue
        R[r], R[sel] = R[sel], R[r]
        inv = 1 / R[r][c]
        R[r] = [x * inv for x in R[r]]
        for i in range(len(R)):
            if i != r and R[i][c]:
                f = R[i][c]
                R[i] = [a - f * b for a, b in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
    return r, tuple(pivots), R[:r]


def rank_fraction(rows) -> int:
    return rref_fraction(rows)[0]


def fraction_kernel(rows, n_cols: int | None = None) -> list[list[Fraction]]:
    """Kernel basis over Q in reduced form (identity on free columns)."""
    rows = [list(r) for r in rows]
    if n_cols is None:
        if not rows:
            raise ValueError("n_cols is required for an empty matrix")
        n_cols = len(rows[0])
    r, pivots, R = rref_fraction(rows) if rows else (0, (), [])
    pivset = set(pivots)
    free = [c for c in range(n_cols) if c not in pivset]
    out = []
    for f in free:
        v = [Fraction(0)] * n_cols
        v[f] = Fraction(1)
        for i, c in enumerate(pivots):
            v[c] = -R[i][f]
        out.append(v)
    return out


def solve_fraction(A, b) -> list[Fraction] | None:
    """One exact solution of A x = b, or None when inconsistent (free
    variables are set to zero)."""
    rows = [list(r) + [bb] for r, bb in zip(A, b)]
    if len(rows) != len(list(b)):
        raise ValueError("shape mismatch")
    n = len(rows[0]) - 1
    r, pivots, R = rref_fraction(rows)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = R[i][n]
    return x


def det_bareiss(rows) -> int:
    """Exact determinant of an integer matrix (fraction-free elimination)."""
    A = [[int(x) for x in row] for row in rows]
    n = len(A)
    if any(len(r) != n for r in A):
        raise ValueError("square matrix required")
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if A[k][k] == 0:
            sel = next((i for i in range(k + 1, n) if A[i][k]), None)
            if sel is None:
                return 0
            A[k], A[sel] = A[sel], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


class RowSpaceQ:
    """Echelonized Q-row-space supporting fast membership tests."""

    def __init__(self, rows=()):
        self._rows: dict[int, list[Fraction]] = {}
        for r in rows:
            self.insert(r)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def _reduce(self, v) -> list[Fraction]:
        v = [Fraction(x) for x in v]
        for piv in sorted(self._rows):
            if v[piv]:
                f = v[piv]
                row = self._rows[piv]
                v = [a - f * b for a, b in zip(v, row)]
        return v

    def insert(self, v) -> bool:
        """Add a vector; True if it enlarged the space."""
        res = self._reduce(v)
        piv = next((i for i, x in enumerate(res) if x), None)
        if piv is None:
            return False
        inv = 1 / res[piv]
        self._rows[piv] = [x * inv for x in res]
        return True

    def contains(self, v) -> bool:
        return not any(self._reduce(v))


def lattice_contains(basis, v) -> bool:
    """Membership of an integer vector in the saturated lattice spanned by
    ``basis`` (integer vector + lies in the Q-span)."""
    if any(int(x) != x for x in v):
        return False
    return RowSpaceQ(basis).contains(v)


def lattices_equal(basis_a, basis_b) -> bool:
    """Equality of two saturated lattices: equal rank + mutual Q-span
    membership of integer bases."""
    a, b = list(basis_a), list(basis_b)
    if len(a) != len(b):
        return False
    ra, rb = RowSpaceQ(a), RowSpaceQ(b)
    if ra.rank != rb.rank:
        return False
    return all(ra.contains(v) for v in b) and all(rb.contains(v) for v in a)


# ---------------------------------------------------------------------------
# matrices of alpha and delta on the class basis


def matrix_from_columns(columns, row_basis) -> np.ndarray:
    """Integer matrix whose j-th column lists the coefficients of
    ``columns[j]`` (a LinComb) on ``row_basis``."""
    index = {b: i for i, b in enumerate(row_basis)}
    A = np.zeros((len(index), len(columns)), dtype=np.int64)
    for j, lc in enumerate(columns):
        for b, c in lc.items():
            A[index[b], j] = int(c)
    return A


def delta_matrix(k: int) -> np.ndarray:
    """Matrix of delta at weight k: rows are admissible compositions, columns
    are duality classes, both in enumeration order.  Large weights use the
    word-splitting formula column by column so no global table is retained."""
    comps = enumerate_compositions(k, "admissible")
    classes = enumerate_compositions(k, "classes")
    index = {a: i for i, a in enumerate(comps)}
    A = np.zeros((len(comps), len(classes)), dtype=np.int64)
    explicit = k >= 14
    for j, cls in enumerate(classes):
        img = delta_explicit(cls) if explicit else delta_class(cls)
        for a, c in img.items():
            A[index[a], j] = int(c)
        if explicit and (j & 255) == 255:
            _stuffle_fn.cache_clear()
    if explicit:
        _stuffle_fn.cache_clear()
    return A


def class_row_basis(k: int) -> list:
    """All duality classes of weight < k, graded, enumeration order within
    each weight."""
    return [cls for kp in range(k) for cls in enumerate_compositions(kp, "classes")]


def alpha_matrix(k: int) -> np.ndarray:
    """Matrix of alpha at weight k: rows are classes of all weights < k,
    columns are classes of weight k."""
    if k < 1:
        raise ValueError("k >= 1 required")
    cols = [alpha(LinComb.single(cls)) for cls in enumerate_compositions(k, "classes")]
    return matrix_from_columns(cols, class_row_basis(k))


_CERT_CACHE: dict[tuple[str, int], KernelCertificate] = {}


def kernel_of_delta(k: int, *, need_basis: bool = True) -> KernelCertificate:
    """Certified kernel of the weight-k delta matrix (over the class basis)."""
    key = ("delta", k)
    got = _CERT_CACHE.get(key)
    if got is None or (need_basis and got.basis is None):
        budget = 12 if k <= 12 else len(PRIMES30)
        got = certified_kernel(delta_matrix(k), need_basis=need_basis, max_primes=budget)
        if need_basis or key not in _CERT_CACHE:
            _CERT_CACHE[key] = got
    return got


def kernel_of_alpha(k: int, *, need_basis: bool = True) -> KernelCertificate:
    """Certified kernel of the weight-k alpha matrix (over the class basis)."""
    key = ("alpha", k)
    got = _CERT_CACHE.get(key)
    if got is None or (need_basis and got.basis is None):
        budget = 12 if k <= 12 else len(PRIMES30)
        got = certified_kernel(alpha_matrix(k), need_basis=need_basis, max_primes=budget)
        if need_basis or key not in _CERT_CACHE:
            _CERT_CACHE[key] = got
    return got


def preimage_lattice(k: int) -> KernelCertificate:
    """The lattice of weight-k class combinations whose alpha image lies,
    weight by weight, in the Q-span of the lower-weight delta kernels.

    Computed as the certified kernel of a stacked matrix: for each lower
    weight, the alpha component composed with a check matrix whose kernel is
    that weight's delta-kernel span."""
    if k < 1:
        raise ValueError("k >= 1 required")
    classes_k = enumerate_compositions(k, "classes")
    cols = [alpha(LinComb.single(cls)) for cls in classes_k]
    blocks: list[np.ndarray] = []
    for kp in range(k):
        classes_kp = enumerate_compositions(kp, "classes")
        if not classes_kp:
            continue
        A_kp = matrix_from_columns([c.homogeneous_part(kp) for c in cols], classes_kp)
        cert = kernel_of_delta(kp)
        if cert.nullity == 0:
            blocks.append(A_kp)
        else:
            check = certified_kernel(np.asarray(cert.basis, dtype=np.int64)).basis
            C = np.asarray(check, dtype=np.int64)
            blocks.append(C @ A_kp)
    return certified_kernel(np.vstack(blocks))
