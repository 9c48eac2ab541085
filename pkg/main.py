"""
Johnson Lab - Main Application
Exact computations in the Goldman-Turaev Lie bialgebra, theta-derivations
and graded Johnson images, from the command line.
"""

import sys
import argparse
import logging
import os
from contextlib import contextmanager
from typing import Any, Callable, Dict, Iterator, List, Optional

from src.utils import (
    DEFAULT_CONFIG,
    build_run_config,
    ensure_directories,
    load_config,
    merge_defaults,
    setup_logging,
)
from src.utils.errors import ConfigurationError, JohnsonLabError, ParseError
from src.algebra.alphabet import Alphabet
from src.algebra.poly import CyclicPoly, TensorPoly, cyclic_project
from src.algebra.serialization import loads_json, parse_compact_word, poly_from_dict
from src.goldman_turaev import goldman_bracket, kappa_inverse, kk_action, turaev_cobracket
from src.derivations import (
    DerivationKind,
    ThetaDerivation,
    epsilon,
    epsilon_solution_dimension,
    es_trace,
    invariant_line_dimension,
    johnson_image,
    mu_odd,
    mu_squared,
    pollack_check,
    theta_der_basis,
)
from src.genus0 import (
    RotationData,
    SpecialDer0,
    appendix_a_check,
    divergence,
    edge_map,
    ejk_generator,
    relations_check,
)
from src.repring import (
    GradedSeries,
    OPERATIONS,
    apply_operation,
    char_of_subspace,
    decompose,
    irr_character,
    mobius_invert,
)
from src.framings import FramingData, classify_orbit, quadratic_form
from src.storage import StorageOrchestrator
from src.reporting import ReportOrchestrator

DEFAULT_CONFIG_PATH = 'config.yaml'


def _read_text(value: str) -> str:
    """Inline text, or the contents of a file given as @path."""
    if value.startswith('@'):
        path = value[1:]
        try:
            with open(path, 'r', encoding='utf-8') as f:
                return f.read()
        except OSError as e:
            raise ConfigurationError(f"Cannot read input file {path}: {e}") from e
    return value


def _json_or_none(text: str) -> Any:
    stripped = text.strip()
    if stripped.startswith('{') or stripped.startswith('['):
        return loads_json(stripped)
    return None


@contextmanager
def _input_errors(flag: str) -> Iterator[None]:
    """Report a ValueError raised while building an input as a ParseError at ``flag``."""
    try:
        yield
    except ValueError as e:
        raise ParseError(str(e), flag) from e


def _bounded_int(minimum: int) -> Callable[[str], int]:
    """argparse type for integers >= minimum."""
    def parse(text: str) -> int:
        try:
            value = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"invalid integer {text!r}")
        if value < minimum:
            raise argparse.ArgumentTypeError(f"must be >= {minimum}, got {value}")
        return value
    return parse


class JohnsonLab:
    """
    Main application class for Johnson Lab.
    """

    def __init__(self, args: argparse.Namespace, config_path: Optional[str] = None):
        """
        Initialize the application.

        Args:
            args: Parsed command-line arguments
            config_path: Path to configuration file (config.yaml if present)
        """
        # Load configuration
        if config_path is None:
            self.config = (load_config(DEFAULT_CONFIG_PATH) if os.path.exists(DEFAULT_CONFIG_PATH)
                           else merge_defaults(DEFAULT_CONFIG))
        else:
            try:
                self.config = load_config(config_path)
            except FileNotFoundError as e:
                raise ConfigurationError(str(e)) from e

        # Setup logging
        self.logger = setup_logging(self.config)
        self.run = build_run_config(self.config, args)
        self.logger.info(f"Johnson Lab - {args.command} ({self.run.model}, jobs={self.run.jobs})")

        # Ensure directories exist
        ensure_directories(self.config, self.run.cache_dir)

        self.args = args
        self.storage = StorageOrchestrator(self.config, self.run.cache_dir) if self.run.cache_dir else None
        self.reporter = ReportOrchestrator(self.config)

    # ------------------------------------------------------------------
    # Inputs

    def _alphabet(self) -> Alphabet:
        if self.run.model == 'boundary':
            return Alphabet.boundary(self.run.punctures)
        if not self.run.genus:
            raise ConfigurationError(f"{self.args.command} needs --genus or --punctures")
        return Alphabet.symplectic(self.run.genus)

    def _genus(self) -> int:
        if self.run.model != 'symplectic' or not self.run.genus:
            raise ConfigurationError(f"{self.args.command} needs --genus")
        return self.run.genus

    def _require(self, name: str) -> Any:
        value = getattr(self.args, name, None)
        if value is None:
            raise ConfigurationError(f"{self.args.command} needs --{name.replace('_', '-')}")
        return value

    def _cyclic(self, name: str) -> CyclicPoly:
        """A cyclic input: JSON polynomial, or compact words joined by commas."""
        alphabet = self._alphabet()
        text = _read_text(self._require(name))
        data = _json_or_none(text)
        if data is not None:
            poly = poly_from_dict(data, f"--{name}", alphabet)
        else:
            poly = TensorPoly.zero(alphabet)
            for word in text.split(','):
                poly = poly + parse_compact_word(alphabet, word)
        if isinstance(poly, TensorPoly):
            poly = cyclic_project(poly)
        if not isinstance(poly, CyclicPoly):
            raise ParseError(f"expected a cyclic polynomial, got type {poly.kind!r}", f"--{name}")
        return poly

    def _tensor(self, name: str) -> TensorPoly:
        alphabet = self._alphabet()
        text = _read_text(self._require(name))
        data = _json_or_none(text)
        if data is None:
            poly = TensorPoly.zero(alphabet)
            for word in text.split(','):
                poly = poly + parse_compact_word(alphabet, word)
            return poly
        poly = poly_from_dict(data, f"--{name}", alphabet)
        if not isinstance(poly, TensorPoly):
            raise ParseError(f"expected a tensor polynomial, got type {poly.kind!r}", f"--{name}")
        return poly

    def _json_input(self, name: str) -> Any:
        data = loads_json(_read_text(self._require(name)))
        return data

    def _special_derivation(self) -> SpecialDer0:
        ejk = getattr(self.args, 'ejk', None)
        if ejk:
            parts = ejk.split(',')
            if len(parts) != 2:
                raise ConfigurationError("--ejk takes two puncture labels such as 1,2")
            alphabet = self._alphabet()
            return ejk_generator(alphabet, parts[0].strip(), parts[1].strip())
        data = self._json_input('derivation')
        with _input_errors('--derivation'):
            return SpecialDer0.from_dict(data, '--derivation')

    def _mu_letters(self, n: int) -> List[str]:
        letters = [x.strip() for x in self._require('letters').split(',')]
        if len(letters) != 2 * n + 1:
            raise ConfigurationError(f"--letters needs {2 * n + 1} letters for n = {n}, got {len(letters)}")
        return letters

    def _cache(self):
        return self.storage

    # ------------------------------------------------------------------
    # Goldman-Turaev

    def bracket(self) -> Dict:
        x, y = self._cyclic('x'), self._cyclic('y')
        return {'title': 'Goldman Bracket', 'fields': {'bracket': goldman_bracket(x, y)}}

    def cobracket(self) -> Dict:
        x = self._cyclic('x')
        return {'title': 'Turaev Cobracket', 'fields': {'cobracket': turaev_cobracket(x)}}

    def kk_apply(self) -> Dict:
        x, w = self._cyclic('x'), self._tensor('word')
        return {'title': 'Kawazumi-Kuno Action', 'fields': {'value': kk_action(x, w)}}

    # ------------------------------------------------------------------
    # Derivations

    def derbasis(self) -> Dict:
        genus = self._genus()
        m = self.run.weight_bound
        kind = DerivationKind(self.args.kind)
        space = theta_der_basis(genus, m, kind, jobs=self.run.jobs, cache=self._cache())
        fields: Dict[str, Any] = {'genus': genus, 'degree': m, 'kind': kind.value, 'dimension': space.dim}
        if kind is DerivationKind.LIE:
            fields['decomposition'] = decompose(char_of_subspace(space))
        if self.args.show_basis:
            fields['basis'] = space.basis
        return {'title': 'Theta-Derivation Basis', 'fields': fields}

    def johnson_image(self) -> Dict:
        genus = self._genus()
        m = self.run.weight_bound
        space = johnson_image(genus, m, self.run.jobs)
        fields = {
            'genus': genus,
            'degree': m,
            'dimension': space.dim,
            'decomposition': decompose(char_of_subspace(space)),
        }
        title = 'Graded Johnson Image' if genus >= 3 else 'Degree-1-Generated Subalgebra'
        return {'title': title, 'fields': fields}

    def pollack(self) -> Dict:
        result = pollack_check(int(self.args.which))
        fields = {'relation': result.describe(), 'residual': result.residual}
        if result.holds:
            fields['residual'] = 'residual = 0'
        return {'title': 'Pollack Relation', 'holds': result.holds, 'fields': fields}

    def epsilon(self) -> Dict:
        n = int(self._require('n'))
        fields = {
            'n': n,
            'solution_dimension': epsilon_solution_dimension(n),
            'epsilon': epsilon(n),
        }
        return {'title': 'Genus-1 Epsilon Derivation', 'fields': fields}

    def mu(self) -> Dict:
        genus = self._genus()
        n = int(self._require('n'))
        letters = self._mu_letters(n)
        derivation = mu_odd(genus, n, letters)
        fields = {'genus': genus, 'n': n, 'letters': letters, 'mu': derivation}
        return {'title': 'Odd Symmetric Power Derivation', 'fields': fields}

    def mu2(self) -> Dict:
        genus = self._genus()
        n = int(self._require('n'))
        fields = {
            'genus': genus,
            'n': n,
            'invariant_line_dimension': invariant_line_dimension(genus, n),
            'mu_squared': mu_squared(genus, n),
        }
        return {'title': 'Invariant Square of Mu', 'fields': fields}

    def es_trace(self) -> Dict:
        if getattr(self.args, 'letters', None):
            n = int(self._require('n'))
            derivation = mu_odd(self._genus(), n, self._mu_letters(n))
        else:
            data = self._json_input('derivation')
            with _input_errors('--derivation'):
                derivation = ThetaDerivation.from_dict(data, '--derivation', self._alphabet())
        return {'title': 'Trace', 'fields': {'trace': es_trace(derivation)}}

    def explore_mu2(self) -> Dict:
        genus = self._genus()
        n = int(self._require('n'))
        preimage = kappa_inverse(mu_squared(genus, n))
        fields = {'genus': genus, 'n': n, 'preimage_terms': len(preimage),
                  'cobracket': turaev_cobracket(preimage)}
        return {'title': 'Cobracket of Mu Squared', 'fields': fields}

    # ------------------------------------------------------------------
    # Genus 0

    def div0(self) -> Dict:
        derivation = self._special_derivation()
        fields = {'derivation': derivation, 'divergence': divergence(derivation)}
        return {'title': 'Genus-0 Divergence', 'fields': fields}

    def edge(self) -> Dict:
        derivation = self._special_derivation()
        rotations = RotationData.from_dict(self._json_input('rotations'), derivation.alphabet,
                                           '--rotations')
        fields = {'derivation': derivation, 'edge': edge_map(derivation, rotations)}
        return {'title': 'Genus-0 Edge Map', 'fields': fields}

    def appendix_a(self) -> Dict:
        m = int(self._require('m'))
        result = appendix_a_check(m)
        fields = {
            'm': m,
            'divergence_mod_depth_2': result.lhs,
            'power_sum_mod_depth_2': result.rhs,
            'residual': result.residual,
            'binomial_expansion': 'ok' if result.binomial_ok else 'mismatch',
        }
        return {'title': 'Polylogarithm Divergence Identity', 'holds': result.holds, 'fields': fields}

    def relations0(self) -> Dict:
        n = int(self._require('n'))
        report = relations_check(n)
        fields = {'punctures': report.punctures, 'checked': report.checked,
                  'failures': [f"{name} = {value}" for name, value in report.failures]}
        return {'title': 'Pure Braid Relations', 'holds': report.holds, 'fields': fields}

    # ------------------------------------------------------------------
    # Representations and framings

    def repring_decompose(self) -> Dict:
        genus = self._genus()
        text = self._require('partition')
        with _input_errors('--partition'):
            partition = [int(p) for p in text.split(',') if p.strip()]
            character = irr_character(partition, genus)
        op = self.args.op
        if op:
            character = apply_operation(character, op, int(self._require('k')))
        decomposition = decompose(character)
        fields = {'genus': genus, 'partition': partition, 'operation': op or 'none',
                  'dimension': character.dimension, 'decomposition': decomposition}
        return {'title': 'Sp Representation Decomposition', 'fields': fields}

    def mobius(self) -> Dict:
        genus = self.run.genus or None
        series = GradedSeries.from_list(self._json_input('series'), genus, '--series')
        n_max = int(self._require('n'))
        h = mobius_invert(series, n_max)
        fields = {'n': n_max, 'graded_pieces': h.to_list(), 'dimensions': h.dimensions()}
        return {'title': 'Moebius Inversion', 'fields': fields}

    def framing(self) -> Dict:
        data = self._json_input('framing')
        with _input_errors('--framing'):
            framing = FramingData.from_dict(data, '--framing')
        descriptor = classify_orbit(framing)
        fields: Dict[str, Any] = {
            'genus': framing.genus,
            'arf': descriptor.arf,
            'orbit': descriptor.describe(),
        }
        if getattr(self.args, 'homology', None):
            with _input_errors('--homology'):
                homology = [int(x) for x in self.args.homology.split(',')]
            if len(homology) != 2 * framing.genus:
                raise ParseError(f"expected {2 * framing.genus} coordinates, got {len(homology)}", '--homology')
            fields['quadratic_form'] = quadratic_form(framing, homology)
        return {'title': 'Framing Classification', 'holds': descriptor.parity_consistent,
                'fields': fields}

    # ------------------------------------------------------------------

    def execute(self) -> int:
        """
        Run the selected command and print its report.

        Returns:
            Exit code: 0 on success, 1 when an identity check fails
        """
        handler: Callable[[], Dict] = getattr(self, COMMANDS[self.args.command])
        result = handler()
        result['command'] = self.args.command
        print(self.reporter.render(result, self.run.output_format))
        if result.get('holds') is False:
            self.logger.warning(f"{self.args.command}: check failed")
            return 1
        return 0


COMMANDS = {
    'bracket': 'bracket',
    'cobracket': 'cobracket',
    'kk-apply': 'kk_apply',
    'derbasis': 'derbasis',
    'johnson-image': 'johnson_image',
    'pollack': 'pollack',
    'epsilon': 'epsilon',
    'mu': 'mu',
    'mu2': 'mu2',
    'es-trace': 'es_trace',
    'div0': 'div0',
    'edge': 'edge',
    'appendix-a': 'appendix_a',
    'relations0': 'relations0',
    'repring-decompose': 'repring_decompose',
    'mobius': 'mobius',
    'framing': 'framing',
    'explore-mu2': 'explore_mu2',
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--config', help='Configuration file (default: config.yaml if present)')
    model = common.add_mutually_exclusive_group()
    model.add_argument('--genus', type=int, help='Genus of the symplectic model')
    model.add_argument('--punctures', type=int, help='Number of punctures of the boundary model')
    common.add_argument('--weight', type=int, help='Degree / weight bound')
    common.add_argument('--format', choices=['json', 'table'], help='Output format')
    common.add_argument('--jobs', type=int, help='Worker threads for basis solves')
    common.add_argument('--cache-dir', help='Basis cache directory')
    common.add_argument('--seed', type=int, help='Seed for random sampling')

    parser = argparse.ArgumentParser(
        description='Johnson Lab - Goldman-Turaev bialgebra and Johnson image computations',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  python main.py pollack --which 1
  python main.py derbasis --genus 2 --weight 1 --kind lie
  python main.py appendix-a --m 2
  python main.py bracket --genus 1 --x a1.b1 --y a1
        """
    )
    subparsers = parser.add_subparsers(dest='command', help='Command to execute')

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        return subparsers.add_parser(name, parents=[common], help=help_text)

    p = add('bracket', 'Goldman bracket of two cyclic words')
    p.add_argument('--x', help='Cyclic polynomial (JSON, @file or a1.b1,a2 words)')
    p.add_argument('--y', help='Cyclic polynomial')

    p = add('cobracket', 'Turaev cobracket of a cyclic word')
    p.add_argument('--x', help='Cyclic polynomial')

    p = add('kk-apply', 'Kawazumi-Kuno action of a cyclic word on a word')
    p.add_argument('--x', help='Cyclic polynomial')
    p.add_argument('--word', help='Tensor polynomial')

    p = add('derbasis', 'Basis of theta-derivations of one degree')
    p.add_argument('--kind', choices=['lie', 'tensor'], default='lie')
    p.add_argument('--show-basis', action='store_true', help='Print the basis vectors')

    add('johnson-image', 'Degree-1-generated subalgebra (the Johnson image for genus >= 3)')

    p = add('pollack', 'Check a quadratic relation among genus-1 epsilons')
    p.add_argument('--which', type=int, choices=[1, 2], default=1)

    p = add('epsilon', 'Genus-1 epsilon derivation')
    p.add_argument('--n', type=_bounded_int(0), help='Index n of epsilon_{2n}')

    p = add('mu', 'Derivation of an odd symmetric power monomial')
    p.add_argument('--n', type=_bounded_int(1))
    p.add_argument('--letters', help='Comma separated letters, e.g. a1,a1,a1')

    p = add('mu2', 'Invariant square of the mu derivations')
    p.add_argument('--n', type=_bounded_int(1))

    p = add('es-trace', 'Trace of a derivation')
    p.add_argument('--derivation', help='Derivation JSON or @file')
    p.add_argument('--n', type=_bounded_int(1))
    p.add_argument('--letters', help='Use mu_odd of these letters instead')

    for name, help_text in (('div0', 'Divergence of a genus-0 special derivation'),
                            ('edge', 'Edge map of a genus-0 special derivation')):
        p = add(name, help_text)
        p.add_argument('--derivation', help='Special derivation JSON or @file')
        p.add_argument('--ejk', help='Use the generator e_{j,k}, e.g. 1,2')
        if name == 'edge':
            p.add_argument('--rotations', help='Rotation numbers as JSON, e.g. {"e1": 1}')

    p = add('appendix-a', 'Divergence identity of the depth-one polylog derivation')
    p.add_argument('--m', type=_bounded_int(1), default=1)

    p = add('relations0', 'Check the genus-0 pure braid relations')
    p.add_argument('--n', type=_bounded_int(2), default=3)

    p = add('repring-decompose', 'Decompose an operation applied to an irreducible')
    p.add_argument('--partition', help='Highest weight, e.g. 1 or 2,1')
    p.add_argument('--op', choices=list(OPERATIONS))
    p.add_argument('--k', type=_bounded_int(0))

    p = add('mobius', 'Moebius inversion of an Euler characteristic series')
    p.add_argument('--series', help='JSON list of degree-0.. entries')
    p.add_argument('--n', type=_bounded_int(1))

    p = add('framing', 'Arf invariant and orbit of a framing')
    p.add_argument('--framing', help='Framing JSON or @file')
    p.add_argument('--homology', help='Evaluate the quadratic form on x1,y1,...')

    p = add('explore-mu2', 'Cobracket of the cyclic preimage of mu squared')
    p.add_argument('--n', type=_bounded_int(1))

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    Main entry point for CLI.

    Returns:
        Process exit code
    """
    parser = build_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        return 2

    try:
        app = JohnsonLab(args, args.config)
        return app.execute()

    except KeyboardInterrupt:
        print("\n\nOperation cancelled by user", file=sys.stderr)
        return 130

    except (ConfigurationError, ParseError) as e:
        logging.getLogger('johnsonlab').error(f"Usage error: {e}")
        print(f"Error: {e}", file=sys.stderr)
        return 2

    except JohnsonLabError as e:
        logging.getLogger('johnsonlab').error(f"{type(e).__name__}: {e}", exc_info=True)
        print(f"Error: {e}", file=sys.stderr)
        return 1

    except Exception as e:
        logging.getLogger('johnsonlab').error(f"Application error: {e}", exc_info=True)
        print(f"\nError: {e}", file=sys.stderr)
        return 1


if __name__ == '__main__':
    sys.exit(main())
