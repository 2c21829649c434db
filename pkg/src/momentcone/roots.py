"""Representations, weights, one-parameter subgroups and Weyl combinatorics.

Three families of representations of a product of general linear groups are
supported: tensor products (`kronecker`), exterior powers (`fermion`) and
symmetric powers (`boson`).  Weights are integer vectors in the epsilon basis
of the maximal torus of GL(d_1) x ... x GL(d_s); one-parameter subgroups (tau)
live in the same coordinates.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, product
from math import gcd

from .linalg import SpanTracker, primitive


@dataclass(frozen=True)
class RepSpec:
    kind: str                 # 'kronecker' | 'fermion' | 'boson'
    dims: tuple
    r: int = 0

    def __post_init__(self):
        if self.kind not in ("kronecker", "fermion", "boson"):
            raise ValueError("unknown representation kind %r" % (self.kind,))
        if any(d < 1 for d in self.dims):
            raise ValueError("dimensions must be positive")
        if list(self.dims) != sorted(self.dims, reverse=True):
            raise ValueError("dimensions must be non-increasing")
        if self.kind == "kronecker":
            if len(self.dims) < 2:
                raise ValueError("need at least two tensor factors")
        else:
            if len(self.dims) != 1:
                raise ValueError("fermion/boson take a single GL factor")
            d = self.dims[0]
            if self.kind == "fermion" and not (2 <= self.r <= d - 2):
                raise ValueError("fermion requires 2 <= r <= d-2")
            if self.kind == "boson" and self.r < 2:
                raise ValueError("boson requires r >= 2")

    @property
    def s(self):
        return len(self.dims)

    @property
    def n(self):
        return sum(self.dims)

    @property
    def offsets(self):
        off, tot = [], 0
        for d in self.dims:
            off.append(tot)
            tot += d
        return tuple(off)

    def block(self, vec, k):
        o = self.offsets[k]
        return tuple(vec[o:o + self.dims[k]])

    def blocks(self, vec):
        return tuple(self.block(vec, k) for k in range(self.s))


@dataclass(frozen=True)
class Weight:
    index: tuple      # canonical index form (1-based)
    coords: tuple     # epsilon-basis coordinates, length n
    mult: int = 1


def weights(spec):
    """All torus weights of the representation, multiplicity-free basis list."""
    n = spec.n
    out = []
    if spec.kind == "kronecker":
        for idx in product(*[range(1, d + 1) for d in spec.dims]):
            co = [0] * n
            for k, a in enumerate(idx):
                co[spec.offsets[k] + a - 1] = 1
            out.append(Weight(idx, tuple(co)))
    elif spec.kind == "fermion":
        for idx in combinations(range(1, spec.dims[0] + 1), spec.r):
            co = [0] * n
            for a in idx:
                co[a - 1] = 1
            out.append(Weight(idx, tuple(co)))
    else:
        for idx in combinations_with_replacement(range(1, spec.dims[0] + 1), spec.r):
            co = [0] * n
            for a in idx:
                co[a - 1] += 1
            out.append(Weight(idx, tuple(co)))
    return out


def pairing(tau, coords):
    return sum(t * c for t, c in zip(tau, coords))


def is_dominant(spec, tau):
    return all(b[i] >= b[i + 1] for b in spec.blocks(tau) for i in range(len(b) - 1))


def normalize(spec, tau):
    """Canonical representative of tau modulo the central torus, made indivisible.

    For tensor products a central cocharacter is added so that every block
    except the last ends in 0; single-factor cases are only rescaled.
    """
    tau = list(tau)
    if spec.kind == "kronecker":
        shifts = [-spec.block(tau, k)[-1] for k in range(spec.s - 1)]
        shifts.append(-sum(shifts))
        for k, c in enumerate(shifts):
            o = spec.offsets[k]
            for i in range(spec.dims[k]):
                tau[o + i] += c
    g = 0
    for x in tau:
        g = gcd(g, abs(x))
    if g > 1:
        tau = [x // g for x in tau]
    return tuple(tau)


@dataclass(frozen=True)
class FaceData:
    """Reduction of a dominant tau to the face of the dominant chamber it spans."""
    dbar: tuple       # number of distinct values per block
    taubar: tuple     # distinct values, concatenated block-wise
    mtau: tuple       # multiplicities of taubar entries, same layout
    proj: tuple       # full position -> reduced position


def reduce_to_face(spec, tau):
    if not is_dominant(spec, tau):
        raise ValueError("tau must be dominant")
    dbar, taubar, mtau, proj = [], [], [], []
    red = 0
    for k in range(spec.s):
        b = spec.block(tau, k)
        vals = []
        for x in b:
            if vals and x == vals[-1]:
                mtau[-1] += 1
            else:
                vals.append(x)
                taubar.append(x)
                mtau.append(1)
                red += 1
            proj.append(red - 1)
        dbar.append(len(vals))
    return FaceData(tuple(dbar), tuple(taubar), tuple(mtau), tuple(proj))


def face_leq(spec_dims, a, b):
    """Face (dominance) order on weight vectors in epsilon coordinates.

    a <= b iff <tau,a> <= <tau,b> for every dominant tau in the open face,
    i.e. per block: equal sums and prefix sums of b-a all nonnegative.
    """
    off = 0
    for d in spec_dims:
        run = 0
        for i in range(d):
            run += b[off + i] - a[off + i]
            if run < 0:
                return False
        if run != 0:
            return False
        off += d
    return True


def positive_roots(spec):
    """Positive roots of the product group, as (k, i, j) with 1 <= i < j <= d_k."""
    return [(k, i, j) for k in range(spec.s) for i in range(1, spec.dims[k] + 1)
            for j in range(i + 1, spec.dims[k] + 1)]


def root_coords(spec, root):
    k, i, j = root
    co = [0] * spec.n
    co[spec.offsets[k] + i - 1] = 1
    co[spec.offsets[k] + j - 1] = -1
    return tuple(co)


def root_level(spec, tau, root):
    k, i, j = root
    o = spec.offsets[k]
    return tau[o + i - 1] - tau[o + j - 1]


def perm_to_inversions(spec, w):
    """Inversion set of a block permutation w (tuple of 1-based one-line tuples)."""
    inv = set()
    for k in range(spec.s):
        wk = w[k]
        for i in range(1, spec.dims[k] + 1):
            for j in range(i + 1, spec.dims[k] + 1):
                if wk[i - 1] > wk[j - 1]:
                    inv.add((k, i, j))
    return frozenset(inv)


def inversions_to_perm(spec, inv):
    """Reconstruct the block permutation with the given inversion set.

    Raises ValueError when the set is not an inversion set.
    """
    w = []
    for k in range(spec.s):
        d = spec.dims[k]
        # i precedes j in w-value order iff they are not inverted
        order = list(range(1, d + 1))
        import functools

        def cmp(i, j, k=k):
            if i == j:
                return 0
            a, b = min(i, j), max(i, j)
            invd = ((k, a, b) in inv)
            if (i < j) != invd:
                return -1
            return 1

        order.sort(key=functools.cmp_to_key(cmp))
        wk = [0] * d
        for val, pos in enumerate(order, start=1):
            wk[pos - 1] = val
        w.append(tuple(wk))
    w = tuple(w)
    if perm_to_inversions(spec, w) != frozenset(inv):
        raise ValueError("not a valid inversion set")
    return w


def apply_w_to_tau(spec, w, tau):
    """The vector w.tau, so that <w.tau, lam> = <tau, w^{-1}.lam>."""
    out = [0] * spec.n
    for k in range(spec.s):
        o = spec.offsets[k]
        wk = w[k]
        for i in range(spec.dims[k]):
            out[o + wk[i] - 1] = tau[o + i]
    return tuple(out)


def act_elementary(spec, root_or_pair, widx):
    """Apply the elementary matrix E_{ij} of factor k to the basis vector widx.

    Returns (target_index, coeff) or None.  `root_or_pair` is (k, i, j) with
    arbitrary i, j (not necessarily i < j).
    """
    k, i, j = root_or_pair
    if spec.kind == "kronecker":
        if widx[k] != j:
            return None
        tgt = widx[:k] + (i,) + widx[k + 1:]
        return tgt, 1
    if spec.kind == "fermion":
        if j not in widx:
            return None
        if i == j:
            return widx, 1
        if i in widx:
            return None
        pos_j = widx.index(j)
        rest = widx[:pos_j] + widx[pos_j + 1:]
        tgt = tuple(sorted(rest + (i,)))
        pos_i = tgt.index(i)
        sign = -1 if (pos_i - pos_j) % 2 else 1
        return tgt, sign
    # boson
    mj = widx.count(j)
    if mj == 0:
        return None
    if i == j:
        return widx, mj
    lst = list(widx)
    lst.remove(j)
    lst.append(i)
    return tuple(sorted(lst)), mj


def weight_span_codim(spec, tau, wts=None):
    """Codimension of the span of the weights orthogonal to tau."""
    wts = weights(spec) if wts is None else wts
    tr = SpanTracker(spec.n)
    for w in wts:
        if pairing(tau, w.coords) == 0:
            tr.add(list(w.coords))
    return spec.n - tr.rank()


def dim_u_tau(spec, tau):
    """Dimension of the unipotent radical attached to tau (positive-level roots)."""
    return sum(1 for b in positive_roots(spec) if root_level(spec, tau, b) > 0)


@lru_cache(maxsize=None)
def _cached_weights(spec):
    return tuple(weights(spec))


def cached_weights(spec):
    return _cached_weights(spec)
