# coding: utf8
'''
    levmeas.tests.test_cli
    ----------------------

    The command-line interface, driven through `main(argv)`.

    :copyright: Copyright 2026 levmeas contributors, see AUTHORS.
    :license: GNU GPL v3.

'''
import argparse
import json

import pytest

from .. import VERSION
from ..__main__ import family_spec, main


def run(capsys, *argv):
    main(list(argv))
    out, _ = capsys.readouterr()
    return out


def fails(capsys, *argv):
    with pytest.raises(SystemExit) as error:
        main(list(argv))
    _, err = capsys.readouterr()
    assert error.value.code == 2
    return err


def test_family_spec():
    assert family_spec('additive') == ('additive', None)
    assert family_spec('gl:3') == ('GL', 3)
    assert family_spec('sl:2') == ('SL', 2)
    for text in ('gl', 'additive:2', 'pgl:2', 'sl:'):
        with pytest.raises(argparse.ArgumentTypeError):
            family_spec(text)


def test_version(capsys):
    with pytest.raises(SystemExit) as error:
        main(['--version'])
    assert error.value.code == 0
    out, _ = capsys.readouterr()
    assert out == 'levmeas version %s\n' % VERSION


class TestCommands:
    '''Exact output of each command.'''

    def test_measure(self, capsys):
        out = run(capsys, '--p', '2', '--dim', '2', '--family', 'additive',
                  'measure', 'D(0;2,3)')
        assert out == '1/4 * Y^3\n'

    def test_measure_difference(self, capsys):
        out = run(capsys, '--p', '3', 'measure', 'D(0;0,0) \\ D(1;1,0)')
        assert out == '2/3\n'
        out = run(capsys, 'measure', 'D(0;0,0) \\ D(0;0,1)')
        assert out == '1 - Y\n'

    def test_measure_three_dimensional(self, capsys):
        out = run(capsys, '--dim', '3', 'measure', 'D(0;1,-1,2)')
        assert out == '1/2 * Y2^-1*Y3^2\n'

    def test_index(self, capsys):
        out = run(capsys, '--p', '2', 'index', 'D(0;3,0)', 'D(0;0,0)')
        assert out == 'q^3 = 8\n'
        out = run(capsys, 'index', 'D(0;0,1)', 'D(0;0,0)')
        assert out == 'infinite\n'

    def test_gl_measure(self, capsys):
        out = run(capsys, '--p', '2', '--family', 'gl:2', 'measure',
                  'K([[1,0],[0,1]];1,0)')
        assert out == '1/6\n'
        out = run(capsys, '--family', 'gl:1', 'measure', 'K([[1]];1,0)')
        assert out == '1\n'

    def test_paper_scaling(self, capsys):
        '''SL measures in X with Y = X^3.'''
        out = run(capsys, '--family', 'sl:2', 'measure',
                  'K([[1,0],[0,1]];1,1)')
        assert out == '1/6 * Y\n'
        out = run(capsys, '--family', 'sl:2', '--paper-scaling', 'measure',
                  'K([[1,0],[0,1]];1,1)')
        assert out == '1/6 * X^3\n'
        out = run(capsys, '--paper-scaling', 'measure', 'D(0;0,1)')
        assert out == 'Y\n'

    def test_canon(self, capsys):
        out = run(capsys, 'canon', 'D(0;1,0) | D(1;1,0)')
        assert out == 'D(0; 0, 0)\n'
        out = run(capsys, 'canon', 'D(0;0,0) \\ D(0;0,0)')
        assert out == 'empty\n'

    def test_level(self, capsys):
        assert run(capsys, 'level', 'D(0;3,2)') == '(2)\n'
        assert run(capsys, 'level', 'empty') == 'empty\n'

    def test_uniform_level(self, capsys):
        out = run(capsys, 'uniform-level', 'D(0;0,1) | D(t2^-1;0,1)')
        assert out == 'uniform (1)\n'
        out = run(capsys, 'uniform-level',
                  '(D(0;0,1) | D(t2^-1;0,1)) | (D(0;0,0) \\ D(0;0,1))')
        assert out == 'not uniform (0), witness t2^-1\n'

    def test_compare(self, capsys):
        out = run(capsys, 'compare', 'D(0;1,0)', 'D(0;0,0)')
        assert out == 'first-inside-second\n'
        out = run(capsys, 'compare', 'D(0;1,0)', 'D(1;1,0)')
        assert out == 'disjoint\n'

    def test_classify(self, capsys):
        assert run(capsys, 'classify', 'D(0;0,0) \\ D(0;0,1)') == \
            'level (0)\n'
        assert run(capsys, 'classify', 'empty') == 'type S\n'


class TestJson:

    def test_measure(self, capsys):
        out = run(capsys, 'measure', '--json', 'D(0;2,3)')
        assert json.loads(out) == {
            'command': 'measure', 'input': ['D(0;2,3)'],
            'result': [{'coeff': '1/4', 'exponent': [3]}],
            'family': 'additive', 'p': 2, 'dim': 2}

    def test_family_name(self, capsys):
        out = run(capsys, '--family', 'sl:2', 'index', '--json',
                  'K([[1,0],[0,1]];2,0)', 'K([[1,0],[0,1]];1,0)')
        data = json.loads(out)
        assert data['family'] == 'sl:2'
        assert data['result'] == 'q^3 = 8'


class TestOracleCheck:

    def test_additive(self, capsys):
        out = run(capsys, '--p', '3', 'oracle-check', '--debug',
                  'D(0;0,0) \\ (D(1;1,0) | D(0;0,1))')
        assert out == 'measure 2/3 - Y, oracle 2/3 - Y: ok\n'

    def test_gl(self, capsys):
        out = run(capsys, '--family', 'gl:2', 'oracle-check', '--debug',
                  '--i', '1', '--j', '2')
        assert out == 'index q^4 = 16, enumerated 16: ok\n' \
                      'snake 16 = 2 * 8: ok\n'

    def test_sl(self, capsys):
        out = run(capsys, '--p', '3', '--family', 'sl:2', 'oracle-check',
                  '--debug', '--i', '1', '--j', '2')
        assert out == 'index q^3 = 27, enumerated 27: ok\n' \
                      'snake 81 = 3 * 27: ok\n'

    def test_json(self, capsys):
        out = run(capsys, '--family', 'gl:2', 'oracle-check', '--json',
                  '--debug', '--i', '1', '--j', '2')
        data = json.loads(out)
        assert data['input'] == []
        assert data['result']['gl'] == 16
        assert data['result']['passed'] is True


class TestErrors:
    '''Diagnostics go to stderr with exit status 2.'''

    def test_parse_error(self, capsys):
        err = fails(capsys, 'measure', 'D(0;1)')
        assert '1:1:' in err

    def test_bad_family(self, capsys):
        fails(capsys, '--family', 'gl', 'measure', 'D(0;0,0)')

    def test_not_prime(self, capsys):
        err = fails(capsys, '--p', '4', 'measure', 'D(0;0,0)')
        assert 'not a prime' in err

    def test_index_needs_atoms(self, capsys):
        err = fails(capsys, 'index', 'D(0;1,0) | D(1;1,0)', 'D(0;0,0)')
        assert 'not a single distinguished set' in err

    def test_index_not_nested(self, capsys):
        err = fails(capsys, 'index', 'D(0;0,0)', 'D(0;1,0)')
        assert 'is not inside' in err

    def test_oracle_arguments(self, capsys):
        fails(capsys, 'oracle-check', 'D(0;0,0)', '--i', '1')
        fails(capsys, '--family', 'gl:2', 'oracle-check', 'D(0;0,0)')

    def test_guard(self, capsys):
        err = fails(capsys, 'oracle-check', 'D(0;0,0) \\ D(0;30,0)')
        assert 'guard' in err

    def test_missing_command(self, capsys):
        fails(capsys)
