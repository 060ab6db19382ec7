# test_cli.py - folconetool end to end: output and exit codes

import pytest

import folcone
import folconetool

from conftest import data_path, golden

GM = data_path('gm.json')
NEGATED = data_path('gm_negated.json')
BAD = data_path('bad.json')
PRODUCT = data_path('product.json')
SELFLOOP = data_path('selfloop.json')


def run(capsys, *argv):
    code = folconetool.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    for name in ('FOLCONEOPTS', 'FOLCONE_ENUM_CAP', 'FOLCONE_MAX_RANK'):
        monkeypatch.delenv(name, raising=False)


def test_check(capsys):
    code, out, err = run(capsys, 'check', GM)
    assert code == 0
    assert out == 'gm: rank 2, 2 letters, 3 transitions, 2 minimal loops\n'
    assert err == ''


def test_cone_json(capsys):
    code, out, _ = run(capsys, 'cone', GM, '--format', 'json')
    assert code == 0
    data = folcone.parse_report(out)
    assert len(data['facets']) == 2
    data.pop('witness')
    assert data == folcone.parse_report(golden('gm_cone.json'))


def test_cone_text(capsys):
    code, out, _ = run(capsys, 'cone', GM)
    assert code == 0
    assert 'foliation cone facets: 2' in out


def test_classify(capsys):
    code, out, _ = run(capsys, 'classify', GM, '--ray', '1,-1')
    assert code == 0
    assert 'BoundaryRay' in out
    code, out, _ = run(capsys, 'classify', GM, '--ray=-1,0',
                       '--format', 'json')
    assert code == 0
    assert folcone.parse_report(out)['verdict'] == 'OutsideRay'


def test_gordan_pair_exit_2(capsys):
    code, out, err = run(capsys, 'cone', BAD)
    assert code == folcone.EXIT_MATH
    assert out == ''
    assert err.startswith('folcone: bad: no class is positive')


def test_validation_exit_1(capsys):
    code, out, err = run(capsys, 'check', data_path('zeroloop.json'))
    assert code == folcone.EXIT_VALIDATION
    assert out == ''
    assert 'zero class' in err
    code, _, _ = run(capsys, 'classify', GM, '--ray', '1,x')
    assert code == folcone.EXIT_VALIDATION
    code, _, _ = run(capsys, 'classify', GM, '--ray', '1,0,0')
    assert code == folcone.EXIT_VALIDATION
    code, out, err = run(capsys, 'classify', GM, '--ray', '1/0,1')
    assert code == folcone.EXIT_VALIDATION
    assert out == ''
    assert 'zero denominator' in err
    code, _, _ = run(capsys, 'slice', GM, '--plane', '1/0,0;0,1')
    assert code == folcone.EXIT_VALIDATION


def test_usage_exit_1(capsys):
    code, out, err = run(capsys, 'frobnicate', GM)
    assert code == folcone.EXIT_VALIDATION
    assert err.startswith('folcone: ')
    code, _, _ = run(capsys, 'classify', GM)
    assert code == folcone.EXIT_VALIDATION


def test_input_exit_3(capsys, tmp_path):
    code, out, err = run(capsys, 'check', str(tmp_path / 'nope.json'))
    assert code == folcone.EXIT_INPUT
    assert out == ''
    code, _, err = run(capsys, 'check', data_path('broken.json'))
    assert code == folcone.EXIT_INPUT
    assert 'line 4' in err
    latin = tmp_path / 'latin.json'
    latin.write_bytes(b'{"name": "caf\xff"}')
    code, out, err = run(capsys, 'check', str(latin))
    assert code == folcone.EXIT_INPUT
    assert out == ''
    assert 'not UTF-8' in err


def test_version(capsys):
    code, out, _ = run(capsys, '--version')
    assert code == 0
    assert out.strip() == 'folcone ' + folcone.__version__


def test_family(capsys):
    code, out, _ = run(capsys, 'family', GM, NEGATED)
    assert code == 0
    assert 'DisjointInteriors' in out
    code, out, _ = run(capsys, 'family', GM, GM, '--format', 'json')
    assert code == 0
    flags = folcone.parse_report(out)['flags']
    assert flags == [{'pair': [0, 1], 'coincident': True, 'distinct': False}]
    code, out, err = run(capsys, 'family', GM, SELFLOOP)
    assert code == folcone.EXIT_MATH
    assert out == ''
    assert 'overlap' in err


def test_family_renamed_letters(capsys):
    code, out, err = run(capsys, 'family', GM, data_path('gm_renamed.json'))
    assert code == 0
    assert 'shared interior: gm gm-renamed (coincident)' in out
    assert err == ''


def test_loops(capsys):
    code, out, _ = run(capsys, 'loops', GM, '--max-len', '2')
    assert code == 0
    assert out.splitlines() == ['(a): (1, 0)', '(a,b): (1, 1)',
                                'string (a): (1, 0)', 'string (a,a): (2, 0)',
                                'string (a,b): (1, 1)']


def test_enum_cap_environment(capsys, monkeypatch):
    monkeypatch.setenv('FOLCONE_ENUM_CAP', '4')
    code, _, err = run(capsys, 'loops', GM, '--max-len', '6')
    assert code == folcone.EXIT_VALIDATION
    assert 'more than 4' in err


def test_folconeopts(capsys, monkeypatch):
    monkeypatch.setenv('FOLCONEOPTS', '-v 0')
    code, out, _ = run(capsys, 'check', GM)
    assert code == 0
    assert folcone.opts['verbosity'] == 0


def test_verify(capsys):
    code, out, _ = run(capsys, 'verify', GM, '--max-len', '6',
                       '--integer-max-len', '6', '--format', 'json')
    assert code == 0
    data = folcone.parse_report(out)
    assert data['cones_equal'] and data['failures'] == []


def test_disk(capsys):
    code, out, _ = run(capsys, 'disk', GM)
    assert code == 0
    assert 'subcone' in out


def test_simulate(capsys):
    argv = ['simulate', GM, '--steps', '2000', '--trials', '2', '--seed',
            '5', '--format', 'json']
    code, out, _ = run(capsys, *argv)
    assert code == 0
    data = folcone.parse_report(out)
    assert data['contained']
    assert [t['seed'] for t in data['trials']] == [5, 6]
    # byte-identical on a second run
    assert run(capsys, *argv)[1] == out
    code, out, _ = run(capsys, *(argv + ['--extend']))
    assert code == 0
    assert folcone.parse_report(out)['extend'] is True


def test_slice(capsys, tmp_path):
    out_path = tmp_path / 'gm.csv'
    code, out, _ = run(capsys, 'slice', GM, '--plane', '1,0;0,1',
                       '--out', str(out_path))
    assert code == 0
    assert out == ''
    assert out_path.read_text() == golden('gm_slice.csv')
    code, _, _ = run(capsys, 'slice', GM, '--plane', '1,1;2,2')
    assert code == folcone.EXIT_VALIDATION


def test_maximal(capsys):
    code, out, _ = run(capsys, 'maximal', GM, GM)
    assert code == 0
    assert out == 'maximality: Contained\n'
    code, out, _ = run(capsys, 'maximal', GM, NEGATED, '--format', 'json')
    assert folcone.parse_report(out)['verdict'] == 'Disjoint'


def test_facets(capsys):
    code, out, _ = run(capsys, 'facets', GM, '--height', '3')
    assert code == 0
    assert out.splitlines() == ['facet (1, 0): 1 rays', '  (0, 1)',
                                'facet (1, 1): 1 rays', '  (1, -1)']


def test_product_degenerate(capsys):
    code, out, _ = run(capsys, 'classify', PRODUCT, '--ray', '0,0')
    assert code == 0
    assert 'DegenerateProductRay' in out
