import pytest

from catalog import KINDS, CatalogEntry, CatalogManager, available_checks, get_catalog, run_check
from catalog.lattices import torus_3_2
from utils.errors import DomainError, InputValidationError

CATALOG = get_catalog()
FAST_IDS = [e.id for e in CATALOG.entries() if not e.slow]
SLOW_IDS = [e.id for e in CATALOG.entries() if e.slow]


@pytest.mark.parametrize("entry_id", FAST_IDS)
def test_entry_reproduces_its_expected_values(entry_id):
    report = CATALOG.run_checks(entry_id)
    assert report.results
    assert report.passed, [r.to_dict() for r in report.failures]


@pytest.mark.slow
@pytest.mark.parametrize("entry_id", SLOW_IDS)
def test_slow_entry_reproduces_its_expected_values(entry_id):
    assert CATALOG.run_checks(entry_id).passed


def test_catalog_covers_every_kind():
    assert {e.kind for e in CATALOG.entries()} == set(KINDS)
    assert 'ecs-s16' in CATALOG
    assert get_catalog() is CATALOG


def test_partners_exist_and_point_back():
    for entry in CATALOG.entries():
        if entry.partner is None:
            continue
        partner = CATALOG.get(entry.partner)
        assert partner.kind == entry.kind
        if entry.kind != 'lattice' or not entry.id.startswith('flat-torus-5d'):
            assert partner.partner == entry.id


def test_listing_does_not_build_objects():
    manager = CatalogManager()
    manager.register(CatalogEntry('torus', 'lattice', torus_3_2))
    assert manager.entries('lattice')[0].summary()['id'] == 'torus'
    assert not manager.get('torus').is_built
    manager.build('torus')
    assert manager.get('torus').is_built


def test_manager_rejects_bad_registrations():
    manager = CatalogManager()
    manager.register(CatalogEntry('torus', 'lattice', torus_3_2))
    with pytest.raises(InputValidationError):
        manager.register(CatalogEntry('torus', 'lattice', torus_3_2))
    with pytest.raises(InputValidationError):
        manager.register(CatalogEntry('other', 'manifold', torus_3_2))
    with pytest.raises(InputValidationError):
        manager.get('missing')


def test_mismatch_is_reported_not_raised():
    manager = CatalogManager()
    manager.register(CatalogEntry('torus', 'lattice', torus_3_2, expected={'covspec_q': ['4', '10']}))
    report = manager.run_checks('torus')
    assert not report.passed
    assert report.failures[0].actual == ['4', '9']
    assert report.to_dict()['results'][0]['passed'] is False


def test_unknown_check_and_missing_partner():
    assert 'covspec_q' in available_checks('lattice')
    with pytest.raises(InputValidationError):
        run_check('no-such-check', torus_3_2())
    with pytest.raises(DomainError):
        run_check('theta_matches_partner', torus_3_2())


def test_entry_document_carries_the_object():
    document = CATALOG.get('torus-3-2').to_dict()
    assert document['object']['gram'] == [['9', '0'], ['0', '4']]
    assert document['expected']['covspec_q'] == ['4', '9']
