"""Reduced integral simplicial homology and cohomology via Smith normal form.

The chain complex is augmented: the empty face spans the chain group in
dimension -1, so the irrelevant complex has one unit of homology there and
the void complex (no faces at all) has all groups zero.  Cohomology is
computed from the transposed boundary maps with its own Smith reductions,
so duality checks compare two independent computations.

All arithmetic is exact over Python integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .complexes import Complex, InputError, alexander_dual


# -- integer matrix reduction ----------------------------------------------


def smith_normal_form(matrix: list) -> list:
    """Invariant factors d1 | d2 | ... (positive) of an integer matrix.

    Elementary row/column reduction; each round moves a minimum-magnitude
    entry into pivot position to limit coefficient growth.
    """
    m = [list(row) for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    factors: list = []
    t = 0
    while t < rows and t < cols:
        pivot = None
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = abs(m[i][j])
                if v and (best is None or v < best):
                    best, pivot = v, (i, j)
        if pivot is None:
            break
        pi, pj = pivot
        m[t], m[pi] = m[pi], m[t]
        for row in m:
            row[t], row[pj] = row[pj], row[t]
        while True:
            # clear the pivot column
            for i in range(t + 1, rows):
                if m[i][t]:
                    q = m[i][t] // m[t][t]
                    for j in range(t, cols):
                        m[i][j] -= q * m[t][j]
                    if m[i][t]:
                        m[t], m[i] = m[i], m[t]
            if any(m[i][t] for i in range(t + 1, rows)):
                continue
            # clear the pivot row
            for j in range(t + 1, cols):
                if m[t][j]:
                    q = m[t][j] // m[t][t]
                    for i in range(t, rows):
                        m[i][j] -= q * m[i][t]
                    if m[t][j]:
                        for row in m:
                            row[t], row[j] = row[j], row[t]
            if any(m[t][j] for j in range(t + 1, cols)):
                continue
            # force divisibility of the remaining block by the pivot
            culprit = None
            d = m[t][t]
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if m[i][j] % d:
                        culprit = i
                        break
                if culprit is not None:
                    break
            if culprit is None:
                break
            for j in range(t, cols):
                m[t][j] += m[culprit][j]
        factors.append(abs(m[t][t]))
        t += 1
    return factors


def matrix_rank(matrix: list) -> int:
    return sum(1 for d in smith_normal_form(matrix) if d)


def transpose(matrix: list) -> list:
    if not matrix:
        return []
    return [[row[j] for row in matrix] for j in range(len(matrix[0]))]


# -- boundary matrices -------------------------------------------------------


def faces_by_dim(c: Complex) -> dict:
    """Faces grouped by dimension (including the empty face at -1), sorted."""
    out: dict = {}
    for face in c.faces():
        out.setdefault(len(face) - 1, []).append(face)
    for k in out:
        out[k].sort(key=c.face_key)
    return out


def boundary_matrix(c: Complex, k: int) -> list:
    """Matrix of the boundary map from k-faces to (k-1)-faces.

    Rows are indexed by (k-1)-faces, columns by k-faces, both in ground
    order; signs alternate along each face's ground-ordered vertex list.
    The k = 0 row is the augmentation onto the empty face.
    """
    if k < -1 or k > c.dim():
        raise InputError(f"dimension {k} out of range for this complex")
    by_dim = faces_by_dim(c)
    return _boundary(c, by_dim.get(k, []), by_dim.get(k - 1, []))


def _boundary(c: Complex, k_faces: list, below: list) -> list:
    row_index = {face: i for i, face in enumerate(below)}
    matrix = [[0] * len(k_faces) for _ in below]
    for j, face in enumerate(k_faces):
        items = sorted(face, key=c.index)
        for pos, x in enumerate(items):
            sub = face - {x}
            if sub in row_index:
                matrix[row_index[sub]][j] = -1 if pos % 2 else 1
    return matrix


# -- profiles ----------------------------------------------------------------


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced Betti numbers and torsion coefficients per dimension.

    Indexed from -1 up to the complex dimension; queries outside the range
    return 0 / no torsion.  Torsion is stored as invariant factors > 1.
    """

    lo: int
    hi: int
    betti: dict
    torsion: dict

    def betti_at(self, k: int) -> int:
        return self.betti.get(k, 0)

    def torsion_at(self, k: int) -> tuple:
        return self.torsion.get(k, ())

    def is_trivial(self) -> bool:
        return all(v == 0 for v in self.betti.values()) and all(
            not t for t in self.torsion.values()
        )

    def to_json(self) -> dict:
        return {
            "betti": {str(k): self.betti[k] for k in sorted(self.betti)},
            "torsion": {str(k): list(self.torsion[k]) for k in sorted(self.torsion)},
        }


def _profile(c: Complex, flip: bool) -> HomologyProfile:
    if c.is_void:
        return HomologyProfile(-1, -2, {}, {})
    by_dim = faces_by_dim(c)
    top = c.dim()
    matrices = {}
    for k in range(-1, top + 2):
        mat = _boundary(c, by_dim.get(k, []), by_dim.get(k - 1, []))
        matrices[k] = transpose(mat) if flip else mat
    snf = {k: smith_normal_form(matrices[k]) for k in matrices}
    rank = {k: sum(1 for d in snf[k] if d) for k in snf}
    betti = {}
    torsion = {}
    for k in range(-1, top + 1):
        betti[k] = len(by_dim.get(k, [])) - rank[k] - rank[k + 1]
        if flip:
            # cocycles modulo coboundaries: torsion enters from the map below
            torsion[k] = tuple(d for d in snf[k] if d > 1)
        else:
            torsion[k] = tuple(d for d in snf[k + 1] if d > 1)
    return HomologyProfile(-1, top, betti, torsion)


def reduced_homology(c: Complex) -> HomologyProfile:
    """Reduced integral homology, dimensions -1 through dim(c)."""
    return _profile(c, flip=False)


def reduced_cohomology(c: Complex) -> HomologyProfile:
    """Reduced integral cohomology, from the transposed boundary maps."""
    return _profile(c, flip=True)


# -- simple-homotopy classes -------------------------------------------------


@dataclass(frozen=True)
class SHClass:
    """Simple-homotopy class: void, or the boundary of a cross-polytope.

    ``cross_dim`` is None for the void class; n >= 0 names the boundary of
    the n-dimensional cross-polytope (n = 0 is the irrelevant complex, the
    (-1)-sphere).
    """

    cross_dim: Optional[int] = None

    def __post_init__(self) -> None:
        if self.cross_dim is not None and self.cross_dim < 0:
            raise InputError("cross-polytope dimension must be >= 0")

    @property
    def is_void_class(self) -> bool:
        return self.cross_dim is None

    def suspend(self) -> "SHClass":
        """Suspension: void stays void, sphere dimension goes up by one."""
        if self.cross_dim is None:
            return self
        return SHClass(self.cross_dim + 1)

    def dual_expected(self, ground_size: int) -> "SHClass":
        """Class of the Alexander dual predicted by duality (needs |X| > 0)."""
        if ground_size <= 0:
            raise InputError("dual class prediction needs a nonempty ground set")
        if self.cross_dim is None:
            return self
        return SHClass(ground_size - self.cross_dim - 1)

    def __str__(self) -> str:
        if self.cross_dim is None:
            return "void"
        return f"cross-polytope-boundary({self.cross_dim})"

    def to_json(self) -> dict:
        if self.cross_dim is None:
            return {"class": "void"}
        return {"class": "cross-polytope-boundary", "n": self.cross_dim}

    @staticmethod
    def from_json(data: object) -> "SHClass":
        if not isinstance(data, dict):
            raise InputError("class JSON must be an object")
        if data.get("class") == "void":
            return SHClass(None)
        if data.get("class") == "cross-polytope-boundary":
            n = data.get("n")
            if not isinstance(n, int):
                raise InputError('cross-polytope class needs an integer "n"')
            return SHClass(n)
        raise InputError("unrecognized simple-homotopy class")


VOID_CLASS = SHClass(None)


def matches_sphere(c: Complex, cls: SHClass) -> bool:
    """Does the reduced homology of c match the claimed class exactly?

    Void class: all groups zero.  Cross-polytope boundary of dimension n:
    one free unit in degree n - 1, nothing else, no torsion.
    """
    profile = reduced_homology(c)
    if cls.is_void_class:
        return profile.is_trivial()
    want = cls.cross_dim - 1
    for k, b in profile.betti.items():
        if b != (1 if k == want else 0):
            return False
    if profile.betti_at(want) != 1:
        return False
    return all(not t for t in profile.torsion.values())


# -- duality check -----------------------------------------------------------


def check_alexander_duality(c: Complex) -> dict:
    """Compare homology of c against cohomology of its Alexander dual.

    Verifies betti_i(c) = cobetti_{|X|-i-3}(dual) and the mirrored equality,
    plus matching torsion, over every index where either side could be
    nonzero.  Both sides are computed by independent Smith reductions.
    """
    dual = alexander_dual(c)
    n = len(c.ground)
    h_c = reduced_homology(c)
    h_d = reduced_homology(dual)
    ch_c = reduced_cohomology(c)
    ch_d = reduced_cohomology(dual)
    for i in range(-2, n + 1):
        j = n - i - 3
        checks = [
            ("homology vs dual cohomology", h_c.betti_at(i), ch_d.betti_at(j)),
            ("cohomology vs dual homology", ch_c.betti_at(i), h_d.betti_at(j)),
            (
                "torsion vs dual torsion",
                sorted(h_c.torsion_at(i)),
                sorted(ch_d.torsion_at(j)),
            ),
        ]
        for label, left, right in checks:
            if left != right:
                return {
                    "pass": False,
                    "ground_size": n,
                    "index": i,
                    "dual_index": j,
                    "which": label,
                    "left": left,
                    "right": right,
                }
    return {"pass": True, "ground_size": n}
