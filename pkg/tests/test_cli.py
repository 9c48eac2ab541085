"""End-to-end tests of the command-line interface."""

import json

import pytest

from main import COMMANDS, JohnsonLab, build_parser, main


@pytest.fixture
def run(tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv('JOHNSONLAB_CACHE', raising=False)
    cache = str(tmp_path / 'cache')

    def invoke(*argv):
        code = main(list(argv) + ['--cache-dir', cache])
        return code, capsys.readouterr()

    return invoke


def test_every_command_has_a_handler():
    for handler in COMMANDS.values():
        assert callable(getattr(JohnsonLab, handler))
    parser = build_parser()
    assert parser.parse_args(['pollack', '--which', '2']).which == 2


def test_pollack_passes(run):
    code, captured = run('pollack', '--which', '1')
    assert code == 0
    assert 'Status: PASS' in captured.out


def test_derbasis_json(run, tmp_path):
    code, captured = run('derbasis', '--genus', '2', '--weight', '1', '--kind', 'lie', '--format', 'json')
    assert code == 0
    report = json.loads(captured.out)
    assert report['command'] == 'derbasis'
    assert report['result']['dimension'] == 4
    assert (tmp_path / 'cache' / 'manifest.json').exists()


def test_bracket_of_compact_words(run):
    code, captured = run('bracket', '--genus', '1', '--x', 'a1.b1', '--y', 'a1', '--format', 'json')
    assert code == 0
    terms = json.loads(captured.out)['result']['bracket']['terms']
    assert terms == [{'coef': '-1', 'word': ['a1']}]


def test_appendix_a(run):
    code, _ = run('appendix-a', '--m', '2')
    assert code == 0


def test_relations(run):
    code, captured = run('relations0', '--n', '3', '--format', 'json')
    assert code == 0
    assert json.loads(captured.out)['result']['checked'] == 19


def test_divergence_of_generator(run):
    code, captured = run('div0', '--punctures', '5', '--ejk', '1,2', '--format', 'json')
    assert code == 0
    assert json.loads(captured.out)['result']['divergence']['terms'] == []


def test_mobius_dimensions(run):
    code, captured = run('mobius', '--series', '[1, -2]', '--n', '5', '--format', 'json')
    assert code == 0
    assert json.loads(captured.out)['result']['dimensions'] == [0, 2, 1, 2, 3, 6]


def test_inconsistent_framing_exits_with_one(run):
    framing = '{"genus": 1, "rot_a": [0], "rot_b": [2], "scc": [3]}'
    code, captured = run('framing', '--framing', framing)
    assert code == 1
    assert 'Status: FAIL' in captured.out


def test_unicode_minus_is_a_usage_error(run):
    x = '{"type": "cyclic", "terms": [{"coef": "−1", "word": ["a1"]}]}'
    code, captured = run('bracket', '--genus', '1', '--x', x, '--y', 'a1')
    assert code == 2
    assert 'Error' in captured.err


def test_missing_model_is_a_usage_error(run):
    code, _ = run('derbasis', '--weight', '1')
    assert code == 2


def test_missing_config_file(run, tmp_path):
    code, _ = run('pollack', '--config', str(tmp_path / 'nope.yaml'))
    assert code == 2


def test_no_command(capsys):
    assert main([]) == 2


def test_johnson_image_title_depends_on_genus(run):
    code, captured = run('johnson-image', '--genus', '2', '--weight', '1')
    assert code == 0
    assert 'Degree-1-Generated Subalgebra' in captured.out
    assert 'Johnson Image' not in captured.out
    code, captured = run('johnson-image', '--genus', '3', '--weight', '1')
    assert code == 0
    assert 'Graded Johnson Image' in captured.out


def test_epsilon_help_names_the_index(capsys):
    with pytest.raises(SystemExit):
        main(['epsilon', '--help'])
    assert 'epsilon_{2n}' in capsys.readouterr().out


def test_out_of_range_integer_flag(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(['appendix-a', '--m', '0'])
    assert excinfo.value.code == 2


@pytest.mark.parametrize('argv', [
    ('repring-decompose', '--genus', '2', '--partition', '1,2'),
    ('repring-decompose', '--genus', '2', '--partition', 'x'),
    ('mobius', '--series', '[2, 1]', '--n', '3'),
    ('framing', '--framing', '{"genus": 1, "rot_a": [0, 1], "rot_b": [0]}'),
    ('framing', '--framing', '{"genus": 2, "rot_a": [0, 0], "rot_b": [0, 0]}', '--homology', '1'),
    ('mu', '--genus', '2', '--n', '1', '--letters', 'a1,a2'),
])
def test_bad_inputs_are_usage_errors(run, argv):
    code, captured = run(*argv)
    assert code == 2
    assert 'Error' in captured.err


def test_internal_value_error_exits_with_one(run, monkeypatch):
    def broken(series, n_max):
        raise ValueError("solver failure")

    monkeypatch.setattr('main.mobius_invert', broken)
    code, captured = run('mobius', '--series', '[1, -2]', '--n', '3')
    assert code == 1
    assert 'solver failure' in captured.err
