"""
Johnson Lab - Storage Module
Persistent cache of theta-derivation bases, one JSON file per
(model, genus, degree, kind), plus a manifest of the cached entries.
"""

import json
import logging
import os
import tempfile
from datetime import datetime
from typing import Any, Dict, List, Optional

from src.algebra.alphabet import Alphabet
from src.derivations.derivation import DerivationKind, ThetaDerivation
from src.utils import resolve_cache_dir
from src.utils.errors import JohnsonLabError

FORMAT_VERSION = 1


def _atomic_write_json(filepath: str, data: Any) -> None:
    """Write JSON through a temporary file in the same directory and rename it."""
    directory = os.path.dirname(filepath) or '.'
    os.makedirs(directory, exist_ok=True)
    fd, tmp_path = tempfile.mkstemp(prefix='.tmp_', suffix='.json', dir=directory)
    try:
        with os.fdopen(fd, 'w', encoding='utf-8') as f:
            json.dump(data, f, indent=2, ensure_ascii=False)
        os.replace(tmp_path, filepath)
    except BaseException:
        if os.path.exists(tmp_path):
            os.remove(tmp_path)
        raise


class BasisCacheStore:
    """
    Stores computed bases of Der^theta_m.
    """

    def __init__(self, config: Dict, cache_dir: Optional[str] = None):
        """
        Initialize basis cache store.

        Args:
            config: Application configuration dictionary
            cache_dir: Cache directory (flag or environment already resolved)
        """
        self.config = config
        self.logger = logging.getLogger('johnsonlab.storage.cache')
        self.storage_path = cache_dir or resolve_cache_dir(config)
        self.format_version = config.get('cache', {}).get('format_version', FORMAT_VERSION)

    def filename(self, alphabet: Alphabet, m: int, kind: DerivationKind) -> str:
        size = alphabet.genus if alphabet.is_symplectic else alphabet.punctures
        return f"basis_{alphabet.model.value}_g{size}_m{m}_{kind.value}.json"

    def path(self, alphabet: Alphabet, m: int, kind: DerivationKind) -> str:
        return os.path.join(self.storage_path, self.filename(alphabet, m, kind))

    def load(self, alphabet: Alphabet, m: int, kind: DerivationKind) -> Optional[List[ThetaDerivation]]:
        """
        Load a cached basis.

        Returns:
            List of derivations, or None on a miss (absent, stale or unreadable entry)
        """
        filepath = self.path(alphabet, m, kind)
        if not os.path.exists(filepath):
            self.logger.debug(f"Cache miss: {filepath}")
            return None

        try:
            with open(filepath, 'r', encoding='utf-8') as f:
                entry = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            self.logger.warning(f"Ignoring unreadable cache entry {filepath}: {e}")
            return None

        if entry.get('format_version') != self.format_version:
            self.logger.info(f"Ignoring cache entry {filepath} with format version "
                             f"{entry.get('format_version')} (expected {self.format_version})")
            return None

        try:
            basis = [ThetaDerivation.from_dict(item, f"$.basis[{i}]", alphabet)
                     for i, item in enumerate(entry.get('basis', []))]
        except JohnsonLabError as e:
            self.logger.warning(f"Ignoring malformed cache entry {filepath}: {e}")
            return None

        self.logger.info(f"Cache hit: {len(basis)} basis vectors from {filepath}")
        return basis

    def save(self, alphabet: Alphabet, m: int, kind: DerivationKind,
             basis: List[ThetaDerivation]) -> str:
        """
        Save a basis to disk.

        Returns:
            Path to saved file
        """
        filepath = self.path(alphabet, m, kind)
        entry = {
            'format_version': self.format_version,
            'created': datetime.now().isoformat(),
            'alphabet': alphabet.to_dict(),
            'degree': m,
            'kind': kind.value,
            'basis': [d.to_dict(with_alphabet=False) for d in basis],
        }
        _atomic_write_json(filepath, entry)
        self.logger.info(f"Saved {len(basis)} basis vectors to {filepath}")
        return filepath

    def exists(self, alphabet: Alphabet, m: int, kind: DerivationKind) -> bool:
        return os.path.exists(self.path(alphabet, m, kind))


class CacheManifestStore:
    """
    Keeps manifest.json: format version, creation time and cached files.
    """

    def __init__(self, config: Dict, cache_dir: Optional[str] = None):
        self.config = config
        self.logger = logging.getLogger('johnsonlab.storage.manifest')
        self.filepath = os.path.join(cache_dir or resolve_cache_dir(config), 'manifest.json')
        self.format_version = config.get('cache', {}).get('format_version', FORMAT_VERSION)

    def load(self) -> Dict:
        """
        Load the manifest, starting a fresh one if it is absent or stale.

        Returns:
            Manifest dictionary
        """
        if not os.path.exists(self.filepath):
            return self._initialize_manifest()

        try:
            with open(self.filepath, 'r', encoding='utf-8') as f:
                manifest = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            self.logger.warning(f"Rebuilding unreadable manifest {self.filepath}: {e}")
            return self._initialize_manifest()

        if manifest.get('format_version') != self.format_version:
            return self._initialize_manifest()
        return manifest

    def save(self, manifest: Dict) -> None:
        _atomic_write_json(self.filepath, manifest)

    def _initialize_manifest(self) -> Dict:
        return {
            'format_version': self.format_version,
            'created': datetime.now().isoformat(),
            'entries': [],
        }

    def record(self, filename: str) -> int:
        """
        Add a cache file to the manifest.

        Returns:
            Number of entries in the manifest
        """
        manifest = self.load()
        if filename not in manifest['entries']:
            manifest['entries'].append(filename)
            manifest['entries'].sort()
        manifest['updated'] = datetime.now().isoformat()
        self.save(manifest)
        return len(manifest['entries'])


class StorageOrchestrator:
    """
    Orchestrates the basis cache and its manifest.

    Instances can be passed as ``cache`` to ``theta_der_basis``.
    """

    def __init__(self, config: Dict, cache_dir: Optional[str] = None):
        """
        Initialize storage orchestrator.

        Args:
            config: Application configuration dictionary
            cache_dir: Cache directory (defaults to the configured one)
        """
        self.config = config
        self.logger = logging.getLogger('johnsonlab.storage')
        self.basis_store = BasisCacheStore(config, cache_dir)
        self.manifest_store = CacheManifestStore(config, cache_dir)

    def load(self, alphabet: Alphabet, m: int, kind: DerivationKind) -> Optional[List[ThetaDerivation]]:
        return self.basis_store.load(alphabet, m, kind)

    def save(self, alphabet: Alphabet, m: int, kind: DerivationKind,
             basis: List[ThetaDerivation]) -> str:
        filepath = self.basis_store.save(alphabet, m, kind, basis)
        count = self.manifest_store.record(os.path.basename(filepath))
        self.logger.debug(f"Manifest now lists {count} entries")
        return filepath

    def entries(self) -> List[str]:
        return list(self.manifest_store.load()['entries'])


__all__ = [
    'FORMAT_VERSION',
    'BasisCacheStore',
    'CacheManifestStore',
    'StorageOrchestrator',
]
