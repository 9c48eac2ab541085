"""Tests for the basis cache and its manifest."""

import json
import os

from src.algebra.alphabet import Alphabet
from src.derivations import DerivationKind, theta_der_basis
from src.storage import BasisCacheStore, CacheManifestStore, StorageOrchestrator
from src.utils import merge_defaults


def test_save_and_load_round_trip(config, cache_dir, g1):
    store = BasisCacheStore(config, cache_dir)
    basis = theta_der_basis(1, 0).basis
    path = store.save(g1, 0, DerivationKind.LIE, basis)

    assert os.path.exists(path)
    assert store.exists(g1, 0, DerivationKind.LIE)
    assert store.load(g1, 0, DerivationKind.LIE) == basis


def test_missing_entry_is_a_miss(config, cache_dir, g2):
    store = BasisCacheStore(config, cache_dir)
    assert store.load(g2, 3, DerivationKind.TENSOR) is None
    assert not store.exists(g2, 3, DerivationKind.TENSOR)


def test_filenames_distinguish_kind_and_degree(config, cache_dir, g1):
    store = BasisCacheStore(config, cache_dir)
    names = {store.filename(g1, m, kind) for m in (0, 1) for kind in DerivationKind}
    assert len(names) == 4
    boundary = Alphabet.boundary(4)
    assert store.filename(g1, 0, DerivationKind.LIE) != store.filename(boundary, 0, DerivationKind.LIE)


def test_stale_format_version_is_ignored(config, cache_dir, g1):
    BasisCacheStore(config, cache_dir).save(g1, 0, DerivationKind.LIE, theta_der_basis(1, 0).basis)
    newer = merge_defaults({'cache': {'format_version': 2}})
    assert BasisCacheStore(newer, cache_dir).load(g1, 0, DerivationKind.LIE) is None


def test_unreadable_entry_is_ignored(config, cache_dir, g1):
    store = BasisCacheStore(config, cache_dir)
    with open(store.path(g1, 0, DerivationKind.LIE), 'w', encoding='utf-8') as f:
        f.write('{"format_version": 1, "basis": [')
    assert store.load(g1, 0, DerivationKind.LIE) is None


def test_malformed_basis_is_ignored(config, cache_dir, g1):
    store = BasisCacheStore(config, cache_dir)
    with open(store.path(g1, 0, DerivationKind.LIE), 'w', encoding='utf-8') as f:
        json.dump({'format_version': 1, 'basis': [{'values': 'nonsense'}]}, f)
    assert store.load(g1, 0, DerivationKind.LIE) is None


def test_orchestrator_caches_basis_solves(config, cache_dir):
    storage = StorageOrchestrator(config, cache_dir)
    first = theta_der_basis(2, 1, DerivationKind.LIE, cache=storage)
    second = theta_der_basis(2, 1, DerivationKind.LIE, cache=storage)

    assert second.dim == first.dim == 4
    assert second.basis == first.basis
    filename = storage.basis_store.filename(Alphabet.symplectic(2), 1, DerivationKind.LIE)
    assert storage.entries() == [filename]


def test_manifest_records_each_file_once(config, cache_dir):
    manifest = CacheManifestStore(config, cache_dir)
    assert manifest.record('b.json') == 1
    assert manifest.record('a.json') == 2
    assert manifest.record('b.json') == 2
    assert manifest.load()['entries'] == ['a.json', 'b.json']


def test_no_temporary_files_are_left(config, cache_dir, g1):
    BasisCacheStore(config, cache_dir).save(g1, 0, DerivationKind.LIE, theta_der_basis(1, 0).basis)
    assert not [name for name in os.listdir(cache_dir) if name.startswith('.tmp_')]
