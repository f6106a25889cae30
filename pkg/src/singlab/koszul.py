"""Koszul complexes on exterior-algebra bases, and sigma-nullhomotopies.

Degree -j holds wedge words e_S over index subsets S of size j, ordered
lexicographically within each size.  The differential contracts:

    d(e_{i_1} ^ ... ^ e_{i_j}) = sum_k (-1)^{k+1} f_{i_k} e_{...omit k...}

(the sign normalised so the one-variable complex is R --f--> R), and the
nullhomotopy for sigma = sum sigma_i f_i is left exterior multiplication
by the vector sum sigma_i e_i.  Together (h+d)^2 = sigma, which is the
identity the stabilisation module builds on.
"""

from __future__ import annotations

from itertools import combinations

from .errors import BadCoefficients, InputError
from .complexes import FreeComplex
from .polymat import PolyMatrix


def index_subsets(r, size):
    """Size-`size` subsets of range(r) as sorted tuples, lex order."""
    return list(combinations(range(r), size))


def wedge_sign(l, subset):
    """Sign of e_l ^ e_S brought to sorted order; 0 if l in S."""
    if l in subset:
        return 0
    return -1 if sum(1 for i in subset if i < l) % 2 else 1


class KoszulComplex:
    """Koszul complex of a sequence f_1..f_r with its wedge basis."""

    __slots__ = ("ring", "sequence", "complex", "bases")

    def __init__(self, ring, sequence):
        if not sequence:
            raise InputError("need at least one element")
        for f in sequence:
            if f.ring != ring:
                raise InputError("sequence element from wrong ring")
        self.ring = ring
        self.sequence = tuple(sequence)
        r = len(sequence)
        weights = []
        for f in sequence:
            hw = f.homogeneous_weight()
            weights.append(hw if hw is not None else f.total_weight())
        self.bases = {-j: index_subsets(r, j) for j in range(r + 1)}
        comps = {
            -j: tuple(sum(weights[i] for i in S) for S in self.bases[-j])
            for j in range(r + 1)
        }
        diffs = {}
        for j in range(r, 0, -1):
            src = self.bases[-j]
            tgt = self.bases[-j + 1]
            index = {S: k for k, S in enumerate(tgt)}
            grid = [[ring.zero() for _ in src] for _ in tgt]
            for col, S in enumerate(src):
                for k, i in enumerate(S):
                    rest = S[:k] + S[k + 1 :]
                    sign = -1 if k % 2 else 1  # (-1)^{k+1} for 1-indexed k
                    row = index[rest]
                    grid[row][col] = grid[row][col] + sequence[i] * sign
            diffs[-j] = PolyMatrix(ring, grid, len(tgt), len(src))
        self.complex = FreeComplex(ring, "Z", comps, diffs)

    @property
    def r(self):
        return len(self.sequence)

    def wedge_matrix(self, vector, degree):
        """Matrix of left wedge by sum vector[i] e_i : K^degree -> K^{degree-1}."""
        src = self.bases[degree]
        tgt = self.bases[degree - 1]
        index = {S: k for k, S in enumerate(tgt)}
        grid = [[self.ring.zero() for _ in src] for _ in tgt]
        for col, S in enumerate(src):
            for l, coeff in enumerate(vector):
                if coeff.is_zero():
                    continue
                sign = wedge_sign(l, S)
                if sign == 0:
                    continue
                merged = tuple(sorted(S + (l,)))
                row = index[merged]
                grid[row][col] = grid[row][col] + coeff * sign
        return PolyMatrix(self.ring, grid, len(tgt), len(src))


class SigmaHomotopy:
    """Nullhomotopy h = (sum sigma_i e_i) ^ -  with dh + hd = sigma."""

    __slots__ = ("koszul", "sigma", "coeffs", "matrices")

    def __init__(self, koszul, sigma, coeffs):
        if len(coeffs) != koszul.r:
            raise InputError("one coefficient per sequence element")
        combo = koszul.ring.zero()
        for c, f in zip(coeffs, koszul.sequence):
            combo = combo + c * f
        if combo != sigma:
            raise BadCoefficients("sum(coeffs[i]*f[i]) != sigma")
        self.koszul = koszul
        self.sigma = sigma
        self.coeffs = tuple(coeffs)
        self.matrices = {
            -j: koszul.wedge_matrix(list(coeffs), -j)
            for j in range(koszul.r)  # K^{-j} -> K^{-j-1}, top degree excluded
        }

    def matrix(self, degree):
        mat = self.matrices.get(degree)
        if mat is None:
            src = len(self.koszul.bases.get(degree, ()))
            tgt = len(self.koszul.bases.get(degree - 1, ()))
            return PolyMatrix.zero(self.koszul.ring, tgt, src)
        return mat


def koszul_complex(ring, sequence):
    return KoszulComplex(ring, list(sequence))


def sigma_homotopy(koszul, sigma, coeffs):
    return SigmaHomotopy(koszul, sigma, coeffs)


def verify_null_homotopy(hom):
    """True iff d h + h d = sigma * id in every degree."""
    K = hom.koszul
    ring = K.ring
    for j in range(K.r + 1):
        deg = -j
        n = len(K.bases[deg])
        dh = K.complex.differential(deg - 1) @ hom.matrix(deg)
        hd = hom.matrix(deg + 1) @ K.complex.differential(deg)
        expect = PolyMatrix.identity(ring, n, scale=hom.sigma)
        if dh + hd != expect:
            return False
    return True


def h_squared_is_zero(hom):
    K = hom.koszul
    for j in range(K.r + 1):
        if not (hom.matrix(-j - 1) @ hom.matrix(-j)).is_zero():
            return False
    return True
