"""The command line surface: exit codes, output schemas, determinism."""

import json
from fractions import Fraction

import pytest

from qpartition.cli import EX_FAIL, EX_LIMIT, EX_OK, EX_USAGE, main
from qpartition.coeff import LaurentPoly
from qpartition.qperm import qpartition_dim


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == EX_OK, err
    return json.loads(out)


# ---------------------------------------------------------------------------
# exit codes

def test_verify_passes(capsys):
    code, out, _ = run(capsys, 'verify', '--n', '3', '--r', '2')
    assert code == EX_OK
    assert 'all checks passed' in out
    assert out.count('PASS') == 4


def test_verify_vacuous_case(capsys):
    code, out, _ = run(capsys, 'verify', '--n', '1', '--r', '1')
    assert code == EX_OK


def test_verify_limit(capsys):
    code, _, err = run(capsys, 'verify', '--n', '20', '--r', '10')
    assert code == EX_LIMIT
    assert 'limit' in err


def test_verify_limit_override(capsys):
    code, _, _ = run(capsys, 'verify', '--n', '2', '--r', '2', '--limit', '3')
    assert code == EX_LIMIT
    code, _, _ = run(capsys, 'verify', '--n', '2', '--r', '2', '--limit', '4')
    assert code == EX_OK


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as info:
        main(['verify', '--n', '3'])  # missing --r
    assert info.value.code == EX_USAGE
    with pytest.raises(SystemExit) as info:
        main(['no-such-command'])
    assert info.value.code == EX_USAGE
    with pytest.raises(SystemExit) as info:
        main(['dims', '--n', '2', '--r', '2', '--format', 'yaml'])
    assert info.value.code == EX_USAGE


def test_malformed_index_is_usage_error(capsys):
    code, _, err = run(capsys, 'act', '--n', '3', '--r', '2', '--gen', '1',
                       '--index', '1,banana')
    assert code == EX_USAGE
    code, _, err = run(capsys, 'act', '--n', '3', '--r', '2', '--gen', '1',
                       '--index', '1,7')
    assert code == EX_USAGE
    code, _, err = run(capsys, 'act', '--n', '3', '--r', '2', '--gen', '5',
                       '--index', '1,2')
    assert code == EX_USAGE


def test_zero_q_is_usage_error(capsys):
    code, _, err = run(capsys, 'commutant', '--n', '2', '--r', '2', '--q', '0,2')
    assert code == EX_USAGE
    assert 'unit' in err


# ---------------------------------------------------------------------------
# act

def test_act_case_two(capsys):
    code, out, _ = run(capsys, 'act', '--n', '2', '--r', '1', '--gen', '1',
                       '--index', '2')
    assert code == EX_OK
    assert out.strip() == '(1) e(1)'


def test_act_case_three_json(capsys):
    data = run_json(capsys, 'act', '--n', '2', '--r', '1', '--gen', '1',
                    '--index', '1', '--format', 'json')
    assert data['n'] == 2 and data['generator'] == 1
    terms = {tuple(t['index']): LaurentPoly.from_json(t['coeff']) for t in data['terms']}
    assert terms == {(1,): LaurentPoly({0: -1, 1: 1}), (2,): LaurentPoly({1: 1})}


def test_act_case_one(capsys):
    code, out, _ = run(capsys, 'act', '--n', '3', '--r', '2', '--gen', '2',
                       '--index', '1,1')
    assert code == EX_OK
    assert out.strip() == '(q) e(1,1)'


# ---------------------------------------------------------------------------
# dims

def test_dims_rows(capsys):
    data = run_json(capsys, 'dims', '--n', '4', '--r', '2', '--format', 'json')
    rows = {(row['n'], row['r']): row for row in data['rows']}
    assert rows[(4, 2)]['dim'] == 15
    assert rows[(4, 2)]['bell'] == 15
    assert rows[(4, 2)]['match'] is True
    assert rows[(2, 2)]['dim'] == 8
    assert rows[(2, 2)]['bell'] is None


def test_dims_half_csv(capsys):
    code, out, _ = run(capsys, 'dims', '--n', '5', '--r', '2', '--half',
                       '--format', 'csv')
    assert code == EX_OK
    lines = out.strip().splitlines()
    assert lines[0] == 'n,r,dim,bell,match'
    assert '5,2,52,52,true' in lines


def test_dims_text_table(capsys):
    code, out, _ = run(capsys, 'dims', '--n', '2', '--r', '2')
    assert code == EX_OK
    assert 'match' in out.splitlines()[0]


# ---------------------------------------------------------------------------
# commutant

def test_commutant_json_schema(capsys):
    data = run_json(capsys, 'commutant', '--n', '3', '--r', '2',
                    '--format', 'json')
    assert data['dim'] == 14
    assert data['agree'] is True
    assert data['q_values'] == ['2', '3', '7/5']
    assert data['matches_formula'] is True
    assert 'basis' not in data


def test_commutant_with_basis(capsys):
    data = run_json(capsys, 'commutant', '--n', '2', '--r', '2',
                    '--with-basis', '--format', 'json')
    assert len(data['basis']) == data['dim'] == 8
    for mat in data['basis']:
        for row, col, value in mat:
            assert 0 <= row < 4 and 0 <= col < 4
            Fraction(value)  # parses back


def test_commutant_custom_q(capsys):
    data = run_json(capsys, 'commutant', '--n', '2', '--r', '3',
                    '--q', '5,9/2', '--format', 'json')
    assert data['q_values'] == ['5', '9/2']
    assert data['dim'] == qpartition_dim(2, 3)


def test_commutant_symbolic(capsys):
    data = run_json(capsys, 'commutant', '--n', '2', '--r', '2', '--symbolic',
                    '--format', 'json')
    assert data['mode'] == 'symbolic'
    assert data['dim'] == 8


def test_commutant_half(capsys):
    data = run_json(capsys, 'commutant', '--n', '5', '--r', '2', '--half',
                    '--format', 'json')
    assert data['dim'] == 52
    assert data['formula_dim'] == 52


def test_commutant_limit(capsys):
    code, _, err = run(capsys, 'commutant', '--n', '2', '--r', '8',
                       '--limit', '100')
    assert code == EX_LIMIT


# ---------------------------------------------------------------------------
# glq-dims

def test_glq_dims_evaluates(capsys):
    data = run_json(capsys, 'glq-dims', '--n', '4', '--r', '2', '--at', '1',
                    '--format', 'json')
    assert data['value'] == '16'
    poly = LaurentPoly.from_json(data['polynomial'])
    assert poly.evaluate(Fraction(1)) == 16


def test_glq_dims_zero_is_usage_error(capsys):
    code, _, _ = run(capsys, 'glq-dims', '--n', '4', '--r', '2', '--at', '0')
    assert code == EX_USAGE


# ---------------------------------------------------------------------------
# export

def test_export_action_schema(capsys, tmp_path):
    out_file = tmp_path / 'action.json'
    code, _, _ = run(capsys, 'export', '--n', '2', '--r', '2', '--what', 'action',
                     '--gen', '1', '--out', str(out_file))
    assert code == EX_OK
    data = json.loads(out_file.read_text())
    assert data['n'] == 2 and data['r'] == 2 and data['generator'] == 1
    assert len(data['columns']) == 4
    for col in data['columns']:
        assert set(col) == {'index', 'terms'}
        for term in col['terms']:
            LaurentPoly.from_json(term['coeff'])


def test_export_hom_schema(capsys):
    data = run_json(capsys, 'export', '--what', 'hom', '--mu', '2,1,1',
                    '--lam', '3,1', '--d', '1,2,4,3')
    assert data['source'] == [2, 1, 1]
    assert data['target'] == [3, 1]
    assert len(data['matrix']) == len(data['rows']) == 4
    assert len(data['matrix'][0]) == len(data['cols']) == 12


def test_export_hom_all_maps(capsys):
    data = run_json(capsys, 'export', '--what', 'hom', '--mu', '2,1,1',
                    '--lam', '3,1')
    assert len(data['maps']) == 3


def test_export_hom_rejects_bad_rep(capsys):
    code, _, err = run(capsys, 'export', '--what', 'hom', '--mu', '2,1,1',
                       '--lam', '3,1', '--d', '2,1,3,4')
    assert code == EX_USAGE


def test_export_action_needs_gen(capsys):
    code, _, err = run(capsys, 'export', '--n', '2', '--r', '2', '--what', 'action')
    assert code == EX_USAGE


# ---------------------------------------------------------------------------
# determinism

def test_verify_json_deterministic(capsys):
    first = run_json(capsys, 'verify', '--n', '3', '--r', '2', '--format', 'json',
                     '--seed', '11')
    second = run_json(capsys, 'verify', '--n', '3', '--r', '2', '--format', 'json',
                      '--seed', '11')
    assert first == second
    assert first['seed'] == 11


def test_export_deterministic(capsys):
    first = run_json(capsys, 'export', '--n', '3', '--r', '2', '--what', 'action',
                     '--gen', '2')
    second = run_json(capsys, 'export', '--n', '3', '--r', '2', '--what', 'action',
                      '--gen', '2')
    assert first == second
