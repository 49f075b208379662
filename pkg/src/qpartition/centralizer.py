"""Brute force centralizer of the letter action, independent of any formula.

The oracle computes End over the Hecke algebra of V tensor r directly:
matrices X with X A_i = A_i X for all generator matrices A_i.  Because
each A_i only ever connects basis vectors inside one orbit, the A_i are
block diagonal over the orbit components (recovered here by union-find
on the matrix supports, not from any classification), and the commutant
splits into independent blocks X restricted to ordered component pairs.

Within a pair (C, C') the system is solved cyclically: every column of
A_i restricted to C touches at most one other basis vector, so each
generator equation either pins a column of X to an image of another
column or is a genuine linear constraint.  Columns propagate along a
spanning tree from a root column y; loop and non-tree equations become
linear constraints on y, collected into an exact echelon.  Constraints
are streamed lazily: solve with a subset, then verify every raw
equation on the candidate basis and feed back any violated equation.
The final basis therefore satisfies all equations exactly; no identity
from the module theory enters anywhere.

Default arithmetic specializes q at several generic rational points and
cross-checks the dimensions; a fully symbolic mode over the rational
function field Q(q) is available for small sizes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

try:
    from gmpy2 import mpq as _ratio
except ImportError:  # pragma: no cover
    _ratio = Fraction

from .coeff import LaurentPoly, ZeroSpecialization
from .linalg import Echelon
from .symcomb import all_permutations
from .tensoract import MultiIndex, all_indices, first_occurrence, _swap_letters

__all__ = [
    'DimensionLimitExceeded',
    'RationalFunction',
    'CommutantReport',
    'commutant_basis',
    'half_commutant_basis',
    'DoubleCentralizerReport',
    'double_centralizer_check',
    'StructureConstants',
    'structure_constants',
    'DEFAULT_Q_VALUES',
]

DEFAULT_Q_VALUES = (Fraction(2), Fraction(3), Fraction(7, 5))


class DimensionLimitExceeded(ValueError):
    """Raised when n^r exceeds the configured size guard."""


# ---------------------------------------------------------------------------
# rational function field Q(q), used by the symbolic mode

def _poly_trim(t: list[Fraction]) -> tuple[Fraction, ...]:
    while t and not t[-1]:
        t.pop()
    return tuple(t)


def _poly_add(a, b):
    out = [Fraction(0)] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _poly_trim(out)


def _poly_neg(a):
    return tuple(-c for c in a)


def _poly_mul(a, b):
    if not a or not b:
        return ()
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, c in enumerate(a):
        if c:
            for j, d in enumerate(b):
                out[i + j] += c * d
    return _poly_trim(out)


def _poly_divmod(a, b):
    if not b:
        raise ZeroDivisionError('polynomial division by zero')
    a = list(a)
    quo = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv = 1 / b[-1]
    for top in range(len(a) - 1, len(b) - 2, -1):
        c = a[top] * inv
        if c:
            quo[top - len(b) + 1] = c
            for j, d in enumerate(b):
                a[top - len(b) + 1 + j] -= c * d
    return _poly_trim(quo), _poly_trim(a)


def _poly_gcd(a, b):
    while b:
        _, a = _poly_divmod(a, b)
        a, b = b, a
    if a:
        inv = 1 / a[-1]
        a = tuple(c * inv for c in a)
    return a


class RationalFunction:
    """An element of Q(q): a reduced fraction of polynomials, monic bottom."""

    __slots__ = ('num', 'den')

    def __init__(self, num, den=(Fraction(1),)):
        num = _poly_trim(list(Fraction(c) for c in num))
        den = _poly_trim(list(Fraction(c) for c in den))
        if not den:
            raise ZeroDivisionError('zero denominator')
        g = _poly_gcd(num, den)
        if g and g != (Fraction(1),):
            num, _ = _poly_divmod(num, g)
            den, _ = _poly_divmod(den, g)
        lead = den[-1]
        if lead != 1:
            inv = 1 / lead
            num = tuple(c * inv for c in num)
            den = tuple(c * inv for c in den)
        object.__setattr__(self, 'num', num)
        object.__setattr__(self, 'den', den)

    @classmethod
    def from_laurent(cls, p: LaurentPoly) -> RationalFunction:
        if p.is_zero():
            return cls(())
        low = p.min_exponent()
        shift = -low if low < 0 else 0
        coeffs = [Fraction(0)] * (p.max_exponent() + shift + 1)
        for e, c in p.terms:
            coeffs[e + shift] = c
        den = [Fraction(0)] * shift + [Fraction(1)]
        return cls(coeffs, den)

    @classmethod
    def constant(cls, c) -> RationalFunction:
        return cls((Fraction(c),))

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self == RationalFunction.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        other = self._coerce(other)
        return RationalFunction(
            _poly_add(_poly_mul(self.num, other.den), _poly_mul(other.num, self.den)),
            _poly_mul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(_poly_neg(self.num), self.den)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return RationalFunction(_poly_mul(self.num, other.num), _poly_mul(self.den, other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if not other.num:
            raise ZeroDivisionError('division by zero rational function')
        return RationalFunction(_poly_mul(self.num, other.den), _poly_mul(self.den, other.num))

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    @staticmethod
    def _coerce(x) -> RationalFunction:
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, (int, Fraction)):
            return RationalFunction.constant(x)
        raise TypeError(f'cannot coerce {x!r} into Q(q)')

    @staticmethod
    def _poly_str(p) -> str:
        if not p:
            return '0'
        parts = []
        for e in range(len(p) - 1, -1, -1):
            c = p[e]
            if not c:
                continue
            if e == 0:
                parts.append(str(c))
            else:
                head = '' if c == 1 else '-' if c == -1 else f'{c}*'
                parts.append(f'{head}q' if e == 1 else f'{head}q^{e}')
        return ' + '.join(parts).replace('+ -', '- ')

    def __str__(self):
        top = self._poly_str(self.num)
        if self.den == (Fraction(1),):
            return top
        bot = self._poly_str(self.den)
        if ' ' in top:
            top = f'({top})'
        if ' ' in bot or '/' in bot:
            bot = f'({bot})'
        return f'{top}/{bot}'

    def __repr__(self):
        return f'RationalFunction({self})'


_RF_ONE = RationalFunction((Fraction(1),))
_RF_Q = RationalFunction((Fraction(0), Fraction(1)))


# ---------------------------------------------------------------------------
# orbit components straight from the matrix supports

def _components(n: int, r: int, gens: Sequence[int]) -> list[list[int]]:
    idxs = all_indices(n, r)
    gid = {j: t for t, j in enumerate(idxs)}
    parent = list(range(len(idxs)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for j in idxs:
        for i in gens:
            j2 = _swap_letters(j, i)
            if j2 != j:
                a, b = find(gid[j]), find(gid[j2])
                if a != b:
                    parent[a] = b
    groups: dict[int, list[int]] = {}
    for t in range(len(idxs)):
        groups.setdefault(find(t), []).append(t)
    return [sorted(g) for g in sorted(groups.values())]


def _classify(idx: MultiIndex, i: int) -> tuple[int, MultiIndex]:
    """(case, swapped index) for T_i on e_idx; case 1 means diagonal."""
    fi = first_occurrence(idx, i)
    fi1 = first_occurrence(idx, i + 1)
    if fi == 0 and fi1 == 0:
        return 1, idx
    return (2 if fi < fi1 else 3), _swap_letters(idx, i)


# ---------------------------------------------------------------------------
# the cyclic block solver

class _PairSolver:
    """Solve X A_i = A_i X restricted to one ordered component pair."""

    def __init__(self, C: list[int], Cp: list[int], idxs: list[MultiIndex],
                 gid_map: dict[MultiIndex, int], gens: Sequence[int],
                 qf, one, rng: random.Random):
        self.C, self.Cp, self.idxs, self.gens = C, Cp, idxs, gens
        self._gid_map = gid_map
        self.qf, self.one, self.zero = qf, one, one - one
        self.rng = rng
        self.m = len(Cp)
        self.posP = {g: t for t, g in enumerate(Cp)}
        # rows/cols of A_i restricted to Cp, local indices
        self.ap_rows: dict[int, list[list[tuple[int, object]]]] = {}
        self.ap_cols: dict[int, list[list[tuple[int, object]]]] = {}
        for i in gens:
            rows = [[] for _ in range(self.m)]
            cols = [[] for _ in range(self.m)]
            for cl, g in enumerate(Cp):
                case, swapped = _classify(idxs[g], i)
                if case == 1:
                    cols[cl].append((cl, qf))
                    rows[cl].append((cl, qf))
                elif case == 2:
                    rl = self.posP[self._gid(swapped)]
                    cols[cl].append((rl, one))
                    rows[rl].append((cl, one))
                else:
                    rl = self.posP[self._gid(swapped)]
                    cols[cl].append((rl, qf))
                    rows[rl].append((cl, qf))
                    cols[cl].append((cl, qf - one))
                    rows[cl].append((cl, qf - one))
            self.ap_rows[i], self.ap_cols[i] = rows, cols
        self._build_tree()
        self._collect_events()

    def _gid(self, idx: MultiIndex) -> int:
        return self._gid_map[idx]

    def _build_tree(self):
        self.root = self.C[0]
        self.par: dict[int, tuple[int, int, int]] = {}  # child -> (parent, i, case at parent)
        self.order = [self.root]
        seen = {self.root}
        frontier = [self.root]
        while frontier:
            nxt = []
            for c in frontier:
                for i in self.gens:
                    case, swapped = _classify(self.idxs[c], i)
                    if case == 1:
                        continue
                    c2 = self._gid(swapped)
                    if c2 not in seen:
                        seen.add(c2)
                        self.par[c2] = (c, i, case)
                        self.order.append(c2)
                        nxt.append(c2)
            frontier = nxt
        assert len(self.order) == len(self.C), 'component not connected by its own edges'

    def _collect_events(self):
        tree_children = {(i, p): c for c, (p, i, _) in self.par.items()}
        self.events = []
        for c in self.C:
            for i in self.gens:
                case, swapped = _classify(self.idxs[c], i)
                if case == 1:
                    self.events.append(('loop', i, c))
                    continue
                c2 = self._gid(swapped)
                if tree_children.get((i, c)) == c2:
                    continue  # holds by construction
                self.events.append(('edge', i, c, c2, case))
        self.ev_pos = {ev: pos for pos, ev in enumerate(self.events)}

    # -- functional pullback along the tree ---------------------------------

    def _pull(self, f: dict[int, object], c: int) -> dict[int, object]:
        qf, one, zero = self.qf, self.one, self.zero
        while c != self.root:
            p, i, case = self.par[c]
            rows = self.ap_rows[i]
            g: dict[int, object] = {}
            for rl, val in f.items():
                for cl, v in rows[rl]:
                    cur = g.get(cl, zero) + val * v
                    if cur:
                        g[cl] = cur
                    else:
                        g.pop(cl, None)
            if case == 3:
                lam = qf - one
                for cl, val in f.items():
                    cur = g.get(cl, zero) - lam * val
                    if cur:
                        g[cl] = cur
                    else:
                        g.pop(cl, None)
                g = {cl: val / qf for cl, val in g.items()}
            f = g
            c = p
        return f

    def _event_rows(self, ev) -> list[dict[int, object]]:
        qf, one, zero = self.qf, self.one, self.zero
        out = []
        if ev[0] == 'loop':
            _, i, c = ev
            for rl in range(self.m):
                f = {cl: v for cl, v in self.ap_rows[i][rl]}
                cur = f.get(rl, zero) - qf
                if cur:
                    f[rl] = cur
                else:
                    f.pop(rl, None)
                if f:
                    row = self._pull(f, c)
                    if row:
                        out.append(row)
        else:
            _, i, c, c2, case = ev
            for rl in range(self.m):
                if case == 2:
                    f2 = self._pull({rl: one}, c2)
                    f1 = {cl: zero - v for cl, v in self.ap_rows[i][rl]}
                else:
                    f2 = self._pull({rl: qf}, c2)
                    f1 = {cl: zero - v for cl, v in self.ap_rows[i][rl]}
                    cur = f1.get(rl, zero) + (qf - one)
                    if cur:
                        f1[rl] = cur
                    else:
                        f1.pop(rl, None)
                f1 = self._pull(f1, c) if f1 else {}
                row: dict[int, object] = dict(f2)
                for cl, v in f1.items():
                    cur = row.get(cl, zero) + v
                    if cur:
                        row[cl] = cur
                    else:
                        row.pop(cl, None)
                if row:
                    out.append(row)
        return out

    # -- column propagation and raw verification ----------------------------

    def _apply_ap(self, i: int, v: list) -> list:
        out = [self.zero] * self.m
        cols = self.ap_cols[i]
        for cl, val in enumerate(v):
            if val:
                for rl, coef in cols[cl]:
                    out[rl] = out[rl] + coef * val
        return out

    def _propagate(self, y: list) -> dict[int, list]:
        qf, one = self.qf, self.one
        cols = {self.root: y}
        for c in self.order[1:]:
            p, i, case = self.par[c]
            v = self._apply_ap(i, cols[p])
            if case == 3:
                lam = qf - one
                v = [(a - lam * b) / qf for a, b in zip(v, cols[p])]
            cols[c] = v
        return cols

    def _violations(self, cols: dict[int, list]) -> list:
        qf, one = self.qf, self.one
        bad = []
        for ev in self.events:
            if ev[0] == 'loop':
                _, i, c = ev
                lhs = self._apply_ap(i, cols[c])
                if any(a != qf * b for a, b in zip(lhs, cols[c])):
                    bad.append(ev)
            else:
                _, i, c, c2, case = ev
                lhs = self._apply_ap(i, cols[c])
                if case == 2:
                    if any(a != b for a, b in zip(lhs, cols[c2])):
                        bad.append(ev)
                else:
                    lam = qf - one
                    if any(a != qf * x2 + lam * x for a, x2, x in zip(lhs, cols[c2], cols[c])):
                        bad.append(ev)
            if len(bad) >= 8:
                break
        return bad

    def solve(self, with_basis: bool):
        ech = Echelon(self.m, self.one)
        chosen: set[int] = set()

        def feed(ev_pos: int):
            if ev_pos in chosen:
                return
            chosen.add(ev_pos)
            for row in self._event_rows(self.events[ev_pos]):
                ech.add(row)

        for pos, ev in enumerate(self.events):
            if ev[0] == 'loop' and ev[2] == self.root:
                feed(pos)
        if self.events:
            for pos in self.rng.sample(range(len(self.events)), min(3, len(self.events))):
                feed(pos)

        while True:
            candidates = ech.nullspace()
            if not candidates:
                return 0, []
            all_cols = []
            bad_positions: set[int] = set()
            for y in candidates:
                cols = self._propagate(y)
                for ev in self._violations(cols):
                    bad_positions.add(self.ev_pos[ev])
                all_cols.append(cols)
            if not bad_positions:
                if not with_basis:
                    return len(candidates), []
                basis = []
                for cols in all_cols:
                    entries = {}
                    for c, vec in cols.items():
                        for rl, val in enumerate(vec):
                            if val:
                                entries[(self.Cp[rl], c)] = val
                    basis.append(entries)
                return len(candidates), basis
            before = ech.rank
            for pos in sorted(bad_positions):
                feed(pos)
            assert ech.rank > before, 'violated equation did not cut the space'


# ---------------------------------------------------------------------------
# public entry points

@dataclass
class CommutantReport:
    """Dimensions of End over the subalgebra generated by the given T_i."""

    n: int
    r: int
    mode: str
    generators: tuple[int, ...]
    q_values: tuple[Fraction, ...]
    dims: tuple[int, ...]
    agree: bool
    components: int
    basis: list | None = None

    @property
    def dim(self) -> int:
        return self.dims[0]


def _check_limit(n: int, r: int, limit: int) -> None:
    if n ** r > limit:
        raise DimensionLimitExceeded(f'n^r = {n ** r} exceeds limit {limit}')


def commutant_basis(
    n: int,
    r: int,
    q_values: Sequence[Fraction] = DEFAULT_Q_VALUES,
    *,
    symbolic: bool = False,
    with_basis: bool = False,
    limit: int = 4096,
    symbolic_limit: int = 64,
    generators: Sequence[int] | None = None,
) -> CommutantReport:
    """Compute the centralizer dimension (and optionally a basis) exactly.

    Default mode specializes q at each value in q_values (nonzero
    rationals) and cross-checks that all runs agree; symbolic mode works
    over Q(q) directly and is gated by symbolic_limit.  The basis, if
    requested, is materialized as sparse matrices
    {(row index, column index): value} at the first q value, or over
    Q(q) in symbolic mode.
    """
    if n < 1 or r < 1:
        raise ValueError('need n >= 1 and r >= 1')
    _check_limit(n, r, limit)
    gens = tuple(generators) if generators is not None else tuple(range(1, n))
    if any(not 1 <= i <= n - 1 for i in gens):
        raise ValueError(f'generators out of range for n={n}: {gens}')
    idxs = all_indices(n, r)
    gid_map = {j: t for t, j in enumerate(idxs)}
    comps = _components(n, r, gens)

    if symbolic:
        _check_limit(n, r, symbolic_limit)
        dim, mats = _total_dim(
            comps, idxs, gid_map, gens, _RF_Q, _RF_ONE, with_basis)
        return CommutantReport(
            n, r, 'symbolic', gens, (), (dim,), True, len(comps), mats)

    q_values = tuple(Fraction(q0) for q0 in q_values)
    if not q_values:
        raise ValueError('need at least one q value')
    for q0 in q_values:
        if not q0:
            raise ZeroSpecialization('q must specialize to a unit, got 0')
    dims = []
    basis = None
    for which, q0 in enumerate(q_values):
        qf = _ratio(q0.numerator, q0.denominator)
        one = _ratio(1)
        want = with_basis and which == 0
        dim, mats = _total_dim(comps, idxs, gid_map, gens, qf, one, want)
        dims.append(dim)
        if want:
            basis = mats
    return CommutantReport(
        n, r, 'specialized', gens, q_values, tuple(dims),
        len(set(dims)) == 1, len(comps), basis)


def _total_dim(comps, idxs, gid_map, gens, qf, one, materialize: bool):
    total = 0
    basis = [] if materialize else None
    if not gens:
        # no generators: every matrix commutes
        total = len(idxs) ** 2
        if basis is not None:
            for a in range(len(idxs)):
                for b in range(len(idxs)):
                    basis.append({(a, b): one})
        return total, basis
    rng = random.Random(20259)
    for C in comps:
        for Cp in comps:
            solver = _PairSolver(C, Cp, idxs, gid_map, gens, qf, one, rng)
            dim, mats = solver.solve(with_basis=basis is not None)
            total += dim
            if basis is not None:
                basis.extend(mats)
    return total, basis


def half_commutant_basis(n: int, r: int, q_values: Sequence[Fraction] = DEFAULT_Q_VALUES,
                         **kwargs) -> CommutantReport:
    """Centralizer of the subalgebra generated by T_1..T_{n-2} only.

    This is the half-integer step between r and r+1: the last generator
    is dropped, the orbits refine, and the dimension jumps to the next
    odd Bell number once n is large enough.
    """
    if n < 2:
        raise ValueError('need n >= 2 for a restricted subalgebra')
    return commutant_basis(n, r, q_values, generators=range(1, n - 1), **kwargs)


@dataclass
class DoubleCentralizerReport:
    n: int
    r: int
    q0: Fraction
    dim_commutant: int
    dim_image: int
    dim_bicommutant: int
    image_contained: bool

    @property
    def holds(self) -> bool:
        return self.dim_image == self.dim_bicommutant and self.image_contained


def double_centralizer_check(n: int, r: int, q0: Fraction, limit: int = 4096) -> DoubleCentralizerReport:
    """Check that the bicommutant of the letter action is the action image.

    Computes the commutant basis at q0, then the space of matrices
    commuting with every basis element, and compares it with the span of
    all T_w action matrices.  Elements of the bicommutant commute in
    particular with the orbit projections (which lie in the commutant
    since the A_i are block diagonal), so the bicommutant ansatz can be
    taken block diagonal without loss.
    """
    q0 = Fraction(q0)
    if not q0:
        raise ZeroSpecialization('q must specialize to a unit, got 0')
    _check_limit(n, r, limit)
    report = commutant_basis(n, r, (q0,), with_basis=True, limit=limit)
    idxs = all_indices(n, r)
    gid_map = {j: t for t, j in enumerate(idxs)}
    comps = _components(n, r, tuple(range(1, n)))
    qf = _ratio(q0.numerator, q0.denominator)
    one = _ratio(1)
    zero = one - one

    comp_of = {}
    for b, C in enumerate(comps):
        for g in C:
            comp_of[g] = b
    offsets = []
    off = 0
    for C in comps:
        offsets.append(off)
        off += len(C) * len(C)
    width = off
    local = [{g: t for t, g in enumerate(C)} for C in comps]

    def var(row_gid: int, col_gid: int) -> int:
        b = comp_of[row_gid]
        assert comp_of[col_gid] == b
        s = len(comps[b])
        return offsets[b] + local[b][row_gid] * s + local[b][col_gid]

    # bicommutant: Y X = X Y for every commutant basis element X
    ech = Echelon(width, one)
    for X in report.basis:
        rows_of = {}
        cols_of = {}
        for (rg, cg), v in X.items():
            rows_of.setdefault(rg, []).append((cg, v))
            cols_of.setdefault(cg, []).append((rg, v))
        bp = comp_of[next(iter(X))[0]]
        bc = comp_of[next(iter(X))[1]]
        for rho in comps[bp]:
            for c in comps[bc]:
                row: dict[int, object] = {}
                for m, v in cols_of.get(c, ()):  # (Y X)[rho, c]
                    key = var(rho, m)
                    cur = row.get(key, zero) + v
                    row[key] = cur
                for m, v in rows_of.get(rho, ()):  # -(X Y)[rho, c]
                    key = var(m, c)
                    cur = row.get(key, zero) - v
                    if cur:
                        row[key] = cur
                    else:
                        row.pop(key, None)
                if row:
                    ech.add(row)
    bicommutant = ech.nullspace()

    # image of the algebra: span of all T_w matrices
    img = Echelon(width, one)
    spec_cols = {}
    for i in range(1, n):
        cols = []
        for j in idxs:
            case, swapped = _classify(j, i)
            if case == 1:
                cols.append(((gid_map[j], qf),))
            elif case == 2:
                cols.append(((gid_map[swapped], one),))
            else:
                cols.append(((gid_map[swapped], qf), (gid_map[j], qf - one)))
        spec_cols[i] = cols
    image_vectors = []
    for w in all_permutations(n):
        cols: dict[int, dict[int, object]] = {t: {t: one} for t in range(len(idxs))}
        for i in reversed(w.reduced_word()):
            new_cols = {}
            for c0, col in cols.items():
                acc: dict[int, object] = {}
                for mid, v in col.items():
                    for rg, coef in spec_cols[i][mid]:
                        cur = acc.get(rg, zero) + coef * v
                        if cur:
                            acc[rg] = cur
                        else:
                            acc.pop(rg, None)
                new_cols[c0] = acc
            cols = new_cols
        vec = {}
        for c0, col in cols.items():
            for rg, v in col.items():
                vec[var(rg, c0)] = v
        image_vectors.append(vec)
        img.add(vec)

    bic_ech = Echelon(width, one)
    for y in bicommutant:
        bic_ech.add({t: v for t, v in enumerate(y) if v})
    contained = all(not bic_ech.reduce(vec)[0] for vec in image_vectors)

    return DoubleCentralizerReport(
        n=n, r=r, q0=q0,
        dim_commutant=report.dim,
        dim_image=img.rank,
        dim_bicommutant=len(bicommutant),
        image_contained=contained,
    )


@dataclass
class StructureConstants:
    """Multiplication table of the centralizer in its computed basis."""

    n: int
    r: int
    q0: Fraction
    dim: int
    table: dict[tuple[int, int], dict[int, object]]
    closed: bool


def structure_constants(n: int, r: int, q0: Fraction, limit: int = 4096) -> StructureConstants:
    """Expand all pairwise products of commutant basis elements in the basis.

    Closure of the table (every product expands) confirms the computed
    space really is an algebra, not just a vector space of matrices.
    """
    q0 = Fraction(q0)
    report = commutant_basis(n, r, (q0,), with_basis=True, limit=limit)
    N = n ** r
    one = _ratio(1)
    zero = one - one

    ech = Echelon(N * N, one)
    for tag, X in enumerate(report.basis):
        ech.add({rg * N + cg: v for (rg, cg), v in X.items()}, tag=tag)

    indexed = []
    for X in report.basis:
        by_col: dict[int, list[tuple[int, object]]] = {}
        for (rg, cg), v in X.items():
            by_col.setdefault(cg, []).append((rg, v))
        indexed.append(by_col)

    table: dict[tuple[int, int], dict[int, object]] = {}
    closed = True
    for a, A in enumerate(report.basis):
        a_by_col = indexed[a]
        for b, B in enumerate(report.basis):
            prod: dict[int, object] = {}
            for (mg, cg), v in B.items():
                for rg, w in a_by_col.get(mg, ()):
                    key = rg * N + cg
                    cur = prod.get(key, zero) + w * v
                    if cur:
                        prod[key] = cur
                    else:
                        prod.pop(key, None)
            coords = ech.coordinates(prod)
            if coords is None:
                closed = False
                coords = {}
            table[(a, b)] = coords
    return StructureConstants(n, r, q0, len(report.basis), table, closed)
