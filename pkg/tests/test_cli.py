import json

import pytest

import catalog as catalog_package
from catalog import CatalogEntry, CatalogManager
from catalog.lattices import torus_3_2
from cli import run
from i18n import set_language


@pytest.fixture(autouse=True)
def english():
    yield
    set_language('en')


def run_json(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, (json.loads(captured.out) if captured.out else None), captured.err


def write(tmp_path, name, data) -> str:
    path = tmp_path / name
    path.write_text(data if isinstance(data, str) else json.dumps(data), encoding='utf-8')
    return str(path)


# Verbs

def test_check_reports_the_ecs_jump_witness(capsys):
    code, document, _ = run_json(capsys, 'check', '--relation', 'jump', '--catalog', 'ecs-s16')
    assert code == 0
    assert document['report'] == 'check'
    assert document['verdict']['holds'] is False
    assert document['verdict']['witness']['S'] == ['2^8']


def test_check_all_runs_the_audit(capsys):
    code, document, _ = run_json(capsys, 'check', '--catalog', 'a4')
    assert code == 0
    assert document['verdicts']['jump']['holds'] is True
    assert document['verdicts']['gassmann']['holds'] is False
    assert document['violations'] == []


def test_torus_spectrum_output_is_byte_stable(capsys):
    argv = ['covspec-torus', '--catalog', 'conway-sloane-row1-H']
    assert run(argv) == 0
    first = capsys.readouterr().out
    assert run(argv) == 0
    assert capsys.readouterr().out == first
    assert [e['q'] for e in json.loads(first)['entries']] == ['12', '20', '24', '28']


def test_catalog_get_output_is_accepted_as_input(capsys, tmp_path):
    assert run(['catalog', 'get', 'conway-sloane-row3-H']) == 0
    path = write(tmp_path, 'entry.json', capsys.readouterr().out)
    _, from_file, _ = run_json(capsys, 'covspec-torus', '--lattice', path)
    _, from_catalog, _ = run_json(capsys, 'covspec-torus', '--catalog', 'conway-sloane-row3-H')
    assert from_file == from_catalog


def test_length_map_entry_round_trips_through_jumpset(capsys, tmp_path):
    assert run(['catalog', 'get', 'restriction-s3']) == 0
    path = write(tmp_path, 'map.json', capsys.readouterr().out)
    code, document, _ = run_json(capsys, 'jumpset', '--lengthmap', path, '--bruteforce')
    assert code == 0
    assert document['method'] == 'bruteforce'


def test_heisenberg_comparison(capsys):
    code, document, _ = run_json(capsys, 'covspec-heisenberg', '--catalog', 'heisenberg-conway-sloane-row1-H',
                                 '--compare-catalog', 'heisenberg-conway-sloane-row1-Hprime')
    assert code == 0
    assert document['covspec']['symbolic']['tag'] == 'deltaZ'
    assert document['comparison']['equal'] is False


def test_known_central_length_override(capsys):
    code, document, _ = run_json(capsys, 'covspec-heisenberg', '--catalog', 'heisenberg-conway-sloane-row3-H',
                                 '--delta-z', '1')
    assert code == 0
    assert document['covspec']['entries'] == ['1', '16', '32', '40']
    assert document['covspec']['symbolic'] is None


def test_theta_comparison(capsys):
    code, document, _ = run_json(capsys, 'theta', '--catalog', 'conway-sloane-row2-H',
                                 '--compare-catalog', 'conway-sloane-row2-Hprime', '--bound', '60')
    assert code == 0
    assert document['compare']['first_difference'] is None
    assert document['theta']['counts']['0'] == 1


def test_table_output_in_turkish(capsys):
    assert run(['covspec-torus', '--catalog', 'torus-3-2', '--format', 'table', '--lang', 'tr']) == 0
    out = capsys.readouterr().out
    assert 'Değer' in out
    assert '3/2' in out


def test_catalog_list_by_kind(capsys):
    code, document, _ = run_json(capsys, 'catalog', 'list', '--kind', 'heisenberg')
    assert code == 0
    assert len(document['entries']) == 6
    assert all(e['kind'] == 'heisenberg' for e in document['entries'])


# Validation

def test_validate_reports_length_map_violations(capsys, tmp_path):
    data = {'name': 'uneven', 'group': {'name': 'C3', 'degree': 3, 'generators': [[1, 2, 0]]},
            'values': {'0': 0, '1': 1, '2': 2}}
    code, document, _ = run_json(capsys, 'validate', '--lengthmap', write(tmp_path, 'map.json', data))
    assert code == 0
    assert document['kind'] == 'length-map'
    assert document['violations']


def test_jumpset_refuses_invalid_maps(capsys, tmp_path):
    data = {'group': {'degree': 3, 'generators': [[1, 2, 0]]}, 'values': {'0': 0, '1': 1, '2': 2}}
    code, _, err = run_json(capsys, 'jumpset', '--lengthmap', write(tmp_path, 'map.json', data))
    assert code == 2
    assert 'Precondition violated' in err


def test_validate_clean_lattice(capsys, tmp_path):
    path = write(tmp_path, 'lattice.json', {'name': 'L', 'gram': [[2, 1], [1, '3/2']]})
    code, document, _ = run_json(capsys, 'validate', '--lattice', path)
    assert code == 0
    assert document['violations'] == []


# Exit codes

def test_malformed_json_names_the_file(capsys, tmp_path):
    path = write(tmp_path, 'broken.json', '{"gram": [[1, 0], ')
    code, document, err = run_json(capsys, 'covspec-torus', '--lattice', path)
    assert code == 2
    assert document is None
    assert path in err


def test_schema_error_names_the_key(capsys, tmp_path):
    path = write(tmp_path, 'lattice.json', {'name': 'L', 'gram': 'identity'})
    code, _, err = run_json(capsys, 'covspec-torus', '--lattice', path)
    assert code == 2
    assert path in err
    assert 'gram' in err


def test_indefinite_gram_exits_invalid(capsys, tmp_path):
    path = write(tmp_path, 'lattice.json', {'gram': [[1, 2], [2, 1]]})
    code, _, err = run_json(capsys, 'covspec-torus', '--lattice', path)
    assert code == 2
    assert 'positive definite' in err


def test_catalog_kind_mismatch_exits_invalid(capsys):
    code, _, _ = run_json(capsys, 'check', '--catalog', 'torus-3-2')
    assert code == 2


def test_capacity_exit_code(capsys):
    code, document, err = run_json(capsys, 'theta', '--catalog', 'torus-3-2', '--bound', '10000',
                                   '--vector-cap', '5')
    assert code == 3
    assert document is None
    assert 'vector_cap' in err


def test_usage_error_exit_code(capsys):
    assert run(['check']) == 2
    capsys.readouterr()


def test_catalog_mismatch_exit_code(capsys, monkeypatch):
    manager = CatalogManager()
    manager.register(CatalogEntry('torus', 'lattice', torus_3_2, expected={'covspec_q': ['4', '10']}))
    monkeypatch.setattr(catalog_package, '_catalog', manager)
    code, document, _ = run_json(capsys, 'catalog', 'check', 'torus')
    assert code == 1
    assert document['passed'] is False


def test_catalog_check_without_ids_is_invalid(capsys):
    code, _, _ = run_json(capsys, 'catalog', 'check')
    assert code == 2
