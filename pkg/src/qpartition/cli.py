"""Command line interface.

Subcommands:

    verify     relation, orbit-matching and Young-sum checks at one (n, r)
    dims       centralizer dimension table with Bell-number comparison
    act        image of one basis tensor under one generator
    commutant  brute-force centralizer dimension (and optional basis)
    glq-dims   Gaussian-binomial dimension polynomial of the GL side
    export     JSON dumps of action matrices and hom-basis matrices

Exit codes are stable: 0 all checks pass, 1 a check failed, 2 a resource
limit was exceeded, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from math import factorial

from .centralizer import (
    DEFAULT_Q_VALUES,
    DimensionLimitExceeded,
    commutant_basis,
    half_commutant_basis,
)
from .coeff import Q, ZeroSpecialization, lp
from .glq import tq_dimension
from .hecke import t_w, young_sum, signed_young_sum
from .qperm import half_qpartition_dim, hom_matrix, qpartition_dim
from .symcomb import (
    Composition,
    NotDistinguished,
    Permutation,
    bell,
    coset_reps,
    double_coset_reps,
)
from .tensoract import (
    GeneratorOutOfRange,
    TensorVector,
    all_indices,
    apply,
    apply_generator,
    generator_matrix,
    orbit_correspondence,
    set_partitions,
    verify_relations,
)

__all__ = ['main']

EX_OK = 0
EX_FAIL = 1
EX_LIMIT = 2
EX_USAGE = 64

DEFAULT_LIMIT = 4096


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on bad usage; the contract here says 64."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f'{self.prog}: error: {message}\n')


# ---------------------------------------------------------------------------
# argument plumbing

def _parse_q_list(text: str) -> tuple[Fraction, ...]:
    try:
        values = tuple(Fraction(part) for part in text.split(','))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f'bad q list {text!r}: {exc}') from None
    for q0 in values:
        if not q0:
            raise ValueError('q must specialize to a unit, got 0')
    return values


def _parse_ints(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(','))
    except ValueError:
        raise ValueError(f'bad {what} {text!r}: expected comma-separated integers') from None


def _parse_index(text: str, n: int, r: int) -> tuple[int, ...]:
    idx = _parse_ints(text, 'index')
    if len(idx) != r:
        raise ValueError(f'index {text!r} has {len(idx)} letters, need r={r}')
    if any(not 1 <= a <= n for a in idx):
        raise ValueError(f'index {text!r} has letters outside 1..{n}')
    return idx


def _parse_composition(text: str, what: str) -> Composition:
    parts = _parse_ints(text, what)
    if any(p < 0 for p in parts):
        raise ValueError(f'{what} {text!r} has negative parts')
    return Composition(parts)


def _emit(ns, text: str) -> None:
    if ns.out:
        with open(ns.out, 'w') as fh:
            fh.write(text + '\n')
    else:
        print(text)


def _check_size(n: int, r: int, limit: int) -> None:
    if n ** r > limit:
        raise DimensionLimitExceeded(f'n^r = {n ** r} exceeds limit {limit}')


# ---------------------------------------------------------------------------
# verify

def _young_sum_checks(n: int) -> tuple[int, list[str]]:
    """T_i x_lambda = q x_lambda and T_i y_lambda = -y_lambda inside blocks."""
    checks = 0
    failures = []
    for k in range(n):
        lam = Composition.hook(n, k)
        x = young_sum(lam)
        y = signed_young_sum(lam)
        for i in range(1, n):
            if lam.block_index(i) != lam.block_index(i + 1):
                continue
            t = t_w(Permutation.simple(n, i))
            checks += 2
            if t * x != x.scale(Q):
                failures.append(f'T_{i} x_{lam.parts} != q x_{lam.parts}')
            if t * y != y.scale(lp(-1, 0)):
                failures.append(f'T_{i} y_{lam.parts} != -y_{lam.parts}')
    return checks, failures


def _associativity_samples(n: int, r: int, seed: int, count: int = 5) -> tuple[int, list[str]]:
    """Seeded spot check that (h h') v = h (h' v) on random inputs."""
    rng = random.Random(seed)
    failures = []
    letters = list(range(1, n + 1))
    for t in range(count):
        images = letters[:]
        rng.shuffle(images)
        w = Permutation(tuple(images))
        images = letters[:]
        rng.shuffle(images)
        v = Permutation(tuple(images))
        j = tuple(rng.choice(letters) for _ in range(r))
        vec = TensorVector.basis_vector(n, r, j)
        two_step = apply(t_w(w), apply(t_w(v), vec))
        one_step = apply(t_w(w) * t_w(v), vec)
        if two_step != one_step:
            failures.append(f'sample {t}: (T_w T_v) e_{j} != T_w (T_v e_{j})')
    return count, failures


def cmd_verify(ns) -> int:
    n, r = ns.n, ns.r
    _check_size(n, r, ns.limit)
    checks = []

    rel = verify_relations(n, r)
    checks.append(('hecke-relations', rel.passed, f'{rel.checks} identities', rel.failures))

    # orbit side: one task per (set partition, generator), pooled
    partitions = list(set_partitions(r, min(n, r)))
    gens = list(range(1, n))
    tasks = [(p, i) for p in partitions for i in gens]
    workers = min(8, os.cpu_count() or 1)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        results = list(pool.map(
            lambda task: orbit_correspondence(n, r, task[0], generators=(task[1],)),
            tasks))
    bad = [res for res in results if not res.equivariant]
    detail = f'{len(tasks)} orbit/generator pairs over {len(partitions)} orbits'
    checks.append((
        'orbit-module-matching', not bad, detail,
        tuple(f'{res.partition}: {f}' for res in bad for f in res.failures)))

    ycount, yfail = _young_sum_checks(n)
    checks.append(('young-sums', not yfail, f'{ycount} eigenvector identities', tuple(yfail)))

    scount, sfail = _associativity_samples(n, r, ns.seed)
    checks.append(('seeded-associativity', not sfail, f'{scount} random samples', tuple(sfail)))

    all_pass = all(ok for _, ok, _, _ in checks)
    if ns.format == 'json':
        _emit(ns, json.dumps({
            'n': n, 'r': r, 'seed': ns.seed, 'passed': all_pass,
            'checks': [
                {'name': name, 'passed': ok, 'detail': detail,
                 'failures': list(fails)}
                for name, ok, detail, fails in checks],
        }, indent=2))
    else:
        lines = []
        for name, ok, detail, fails in checks:
            lines.append(f'{"PASS" if ok else "FAIL"}  {name}: {detail}')
            lines.extend(f'      {f}' for f in fails)
        lines.append('all checks passed' if all_pass
                     else f'{sum(not ok for _, ok, _, _ in checks)} check(s) failed')
        _emit(ns, '\n'.join(lines))
    return EX_OK if all_pass else EX_FAIL


# ---------------------------------------------------------------------------
# dims

def cmd_dims(ns) -> int:
    rows = []
    # the half variant restricts to S_{n-1}, so it starts at n = 2
    for n in range(2 if ns.half else 1, ns.n + 1):
        for r in range(1, ns.r + 1):
            if ns.half:
                dim = half_qpartition_dim(n, r)
                target = bell(2 * r + 1) if n >= 2 * r + 1 else None
            else:
                dim = qpartition_dim(n, r)
                target = bell(2 * r) if n >= 2 * r else None
            rows.append({
                'n': n, 'r': r, 'dim': dim, 'bell': target,
                'match': None if target is None else dim == target,
            })
    mismatch = any(row['match'] is False for row in rows)

    if ns.format == 'json':
        _emit(ns, json.dumps({'half': ns.half, 'rows': rows}, indent=2))
    elif ns.format == 'csv':
        lines = ['n,r,dim,bell,match']
        for row in rows:
            target = '' if row['bell'] is None else row['bell']
            match = '' if row['match'] is None else str(row['match']).lower()
            lines.append(f"{row['n']},{row['r']},{row['dim']},{target},{match}")
        _emit(ns, '\n'.join(lines))
    else:
        label = 'bell(2r+1)' if ns.half else 'bell(2r)'
        lines = [f'{"n":>3} {"r":>3} {"dim":>16} {label:>16} match']
        for row in rows:
            target = '-' if row['bell'] is None else row['bell']
            match = '-' if row['match'] is None else ('yes' if row['match'] else 'NO')
            lines.append(f"{row['n']:>3} {row['r']:>3} {row['dim']:>16} {target:>16} {match}")
        _emit(ns, '\n'.join(lines))
    return EX_FAIL if mismatch else EX_OK


# ---------------------------------------------------------------------------
# act

def _term_key(item):
    return item[0]


def cmd_act(ns) -> int:
    n, r = ns.n, ns.r
    idx = _parse_index(ns.index, n, r)
    if not 1 <= ns.gen <= n - 1:
        raise GeneratorOutOfRange(f'T_{ns.gen} does not act for n={n}')
    image = apply_generator(ns.gen, TensorVector.basis_vector(n, r, idx))
    terms = sorted(image.terms, key=_term_key)
    if ns.format == 'json':
        _emit(ns, json.dumps({
            'n': n, 'r': r, 'generator': ns.gen, 'index': list(idx),
            'terms': [
                {'index': list(j), 'coeff': c.to_json()} for j, c in terms],
        }, indent=2))
    else:
        body = ' + '.join(f'({c}) e({",".join(map(str, j))})' for j, c in terms)
        _emit(ns, body if body else '0')
    return EX_OK


# ---------------------------------------------------------------------------
# commutant

def _basis_json(basis) -> list:
    out = []
    for mat in basis:
        out.append([[row, col, str(val)] for (row, col), val in sorted(mat.items())])
    return out


def cmd_commutant(ns) -> int:
    q_values = _parse_q_list(ns.q) if ns.q else DEFAULT_Q_VALUES
    compute = half_commutant_basis if ns.half else commutant_basis
    rep = compute(
        ns.n, ns.r, q_values,
        symbolic=ns.symbolic, with_basis=ns.with_basis, limit=ns.limit)
    formula = (half_qpartition_dim if ns.half else qpartition_dim)(ns.n, ns.r)
    ok = rep.agree and rep.dim == formula

    if ns.format == 'json':
        payload = {
            'n': ns.n, 'r': ns.r, 'mode': rep.mode, 'half': ns.half,
            'dim': rep.dim, 'dims': list(rep.dims),
            'q_values': [str(q0) for q0 in rep.q_values],
            'agree': rep.agree, 'components': rep.components,
            'formula_dim': formula, 'matches_formula': rep.dim == formula,
        }
        if rep.basis is not None:
            payload['basis'] = _basis_json(rep.basis)
        _emit(ns, json.dumps(payload, indent=2))
    else:
        qs = ','.join(str(q0) for q0 in rep.q_values) or 'symbolic'
        lines = [
            f'n={ns.n} r={ns.r} mode={rep.mode} half={"yes" if ns.half else "no"}',
            f'dim={rep.dim} q={qs} agree={"yes" if rep.agree else "NO"}',
            f'formula={formula} match={"yes" if rep.dim == formula else "NO"} '
            f'components={rep.components}',
        ]
        if rep.basis is not None:
            lines.append(f'basis: {len(rep.basis)} sparse matrices (use --format json)')
        _emit(ns, '\n'.join(lines))
    return EX_OK if ok else EX_FAIL


# ---------------------------------------------------------------------------
# glq-dims

def cmd_glq_dims(ns) -> int:
    poly = tq_dimension(ns.n, ns.r)
    at = Fraction(ns.at) if ns.at is not None else None
    if at is not None and not at:
        raise ZeroSpecialization('q must specialize to a unit, got 0')
    value = poly.evaluate(at) if at is not None else None
    if ns.format == 'json':
        payload = {'n': ns.n, 'r': ns.r, 'polynomial': poly.to_json()}
        if at is not None:
            payload['at'] = str(at)
            payload['value'] = str(value)
        _emit(ns, json.dumps(payload, indent=2))
    else:
        text = f'dim t_q({ns.n},{ns.r}) = {poly}'
        if at is not None:
            text += f'\nat q={at}: {value}'
        _emit(ns, text)
    return EX_OK


# ---------------------------------------------------------------------------
# export

def _action_payload(n: int, r: int, gen: int) -> dict:
    cols = generator_matrix(n, r, gen)
    return {
        'n': n, 'r': r, 'generator': gen,
        'columns': [
            {'index': list(j),
             'terms': [{'index': list(j2), 'coeff': c.to_json()}
                       for j2, c in sorted(cols[j].items(), key=_term_key)]}
            for j in all_indices(n, r)],
    }


def _coset_space_size(shape: Composition) -> int:
    size = factorial(shape.n)
    for part in shape.parts:
        size //= factorial(part)
    return size


def _hom_payload(mu: Composition, lam: Composition, d: Permutation) -> dict:
    mat = hom_matrix(mu, lam, d)
    return {
        'source': list(mu.parts), 'target': list(lam.parts),
        'd': list(d.images),
        'rows': [list(e.images) for e in coset_reps(lam)],
        'cols': [list(e.images) for e in coset_reps(mu)],
        'matrix': [[c.to_json() for c in row] for row in zip(*mat.columns)],
    }


def cmd_export(ns) -> int:
    if ns.what == 'action':
        if ns.n is None or ns.r is None or ns.gen is None:
            raise ValueError('export --what action needs --n, --r and --gen')
        _check_size(ns.n, ns.r, ns.limit)
        if not 1 <= ns.gen <= ns.n - 1:
            raise GeneratorOutOfRange(f'T_{ns.gen} does not act for n={ns.n}')
        _emit(ns, json.dumps(_action_payload(ns.n, ns.r, ns.gen), indent=2))
        return EX_OK

    if ns.mu is None or ns.lam is None:
        raise ValueError('export --what hom needs --mu and --lam')
    mu = _parse_composition(ns.mu, 'mu')
    lam = _parse_composition(ns.lam, 'lam')
    if mu.n != lam.n:
        raise ValueError(f'mu sums to {mu.n} but lam sums to {lam.n}')
    for shape in (mu, lam):
        if _coset_space_size(shape) > ns.limit:
            raise DimensionLimitExceeded(
                f'coset space of {shape.parts} exceeds limit {ns.limit}')
    if ns.d is not None:
        d = Permutation(_parse_ints(ns.d, 'd'))
        if d not in double_coset_reps(mu, lam):
            raise NotDistinguished(f'{d.images} is not distinguished for (mu, lam)')
        _emit(ns, json.dumps(_hom_payload(mu, lam, d), indent=2))
    else:
        _emit(ns, json.dumps({
            'maps': [_hom_payload(mu, lam, d) for d in double_coset_reps(mu, lam)],
        }, indent=2))
    return EX_OK


# ---------------------------------------------------------------------------
# parser assembly

def _add_common(sub, *, need_r=True) -> None:
    sub.add_argument('--n', type=int, required=True, help='number of letters')
    if need_r:
        sub.add_argument('--r', type=int, required=True, help='tensor exponent')
    sub.add_argument('--out', help='write output to this file instead of stdout')


def build_parser() -> _Parser:
    parser = _Parser(prog='qpartition', description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    subs = parser.add_subparsers(dest='command', required=True, parser_class=_Parser)

    sub = subs.add_parser('verify', help='run the relation and matching checks')
    _add_common(sub)
    sub.add_argument('--limit', type=int, default=DEFAULT_LIMIT)
    sub.add_argument('--seed', type=int, default=0)
    sub.add_argument('--format', choices=('text', 'json'), default='text')
    sub.set_defaults(func=cmd_verify)

    sub = subs.add_parser('dims', help='centralizer dimension table')
    _add_common(sub)
    sub.add_argument('--half', action='store_true',
                     help='half-integer variant (restrict the last generator)')
    sub.add_argument('--format', choices=('text', 'json', 'csv'), default='text')
    sub.set_defaults(func=cmd_dims)

    sub = subs.add_parser('act', help='apply one generator to one basis tensor')
    _add_common(sub)
    sub.add_argument('--gen', type=int, required=True, help='generator subscript i of T_i')
    sub.add_argument('--index', required=True, help='comma-separated letters, e.g. 2,1,1')
    sub.add_argument('--format', choices=('text', 'json'), default='text')
    sub.set_defaults(func=cmd_act)

    sub = subs.add_parser('commutant', help='brute-force centralizer dimension')
    _add_common(sub)
    sub.add_argument('--q', help='comma-separated nonzero rationals, e.g. 7/5,3')
    sub.add_argument('--symbolic', action='store_true', help='work over Q(q) directly')
    sub.add_argument('--half', action='store_true')
    sub.add_argument('--with-basis', action='store_true', dest='with_basis')
    sub.add_argument('--limit', type=int, default=DEFAULT_LIMIT)
    sub.add_argument('--format', choices=('text', 'json'), default='text')
    sub.set_defaults(func=cmd_commutant)

    sub = subs.add_parser('glq-dims', help='Gaussian dimension polynomial')
    _add_common(sub)
    sub.add_argument('--at', help='evaluate the polynomial at this rational')
    sub.add_argument('--format', choices=('text', 'json'), default='text')
    sub.set_defaults(func=cmd_glq_dims)

    sub = subs.add_parser('export', help='JSON dumps of matrices')
    sub.add_argument('--n', type=int, help='number of letters (action export)')
    sub.add_argument('--r', type=int, help='tensor exponent (action export)')
    sub.add_argument('--out', help='write output to this file instead of stdout')
    sub.add_argument('--what', choices=('action', 'hom'), required=True)
    sub.add_argument('--gen', type=int, help='generator for --what action')
    sub.add_argument('--mu', help='source composition for --what hom, e.g. 2,1,1')
    sub.add_argument('--lam', help='target composition for --what hom')
    sub.add_argument('--d', help='one-line double coset representative')
    sub.add_argument('--limit', type=int, default=DEFAULT_LIMIT)
    sub.set_defaults(func=cmd_export)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        return ns.func(ns)
    except DimensionLimitExceeded as exc:
        print(f'qpartition: resource limit: {exc}', file=sys.stderr)
        return EX_LIMIT
    except (GeneratorOutOfRange, NotDistinguished, ZeroSpecialization, ValueError) as exc:
        print(f'qpartition: error: {exc}', file=sys.stderr)
        return EX_USAGE


if __name__ == '__main__':
    sys.exit(main())
