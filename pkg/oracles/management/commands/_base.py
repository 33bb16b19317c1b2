import logging
from pathlib import Path

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from rest_framework.renderers import JSONRenderer

from oracles import boolfn
from oracles.exceptions import OracleError, PromiseViolation
from oracles.serializers import CommandOptionsSerializer, TruthTableInputSerializer

EXIT_INPUT_ERROR = 2
EXIT_PROMISE_VIOLATION = 3
EXIT_VERIFICATION_FAILED = 4


def _first_error(errors):
    for messages in errors.values():
        return str(messages[0])
    return 'invalid input'


def as_command_error(exc):
    if isinstance(exc, CommandError):
        return exc
    if isinstance(exc, PromiseViolation):
        return CommandError(f'promise violated: {exc}', returncode=EXIT_PROMISE_VIOLATION)
    return CommandError(str(exc), returncode=EXIT_INPUT_ERROR)


class OracleCommand(BaseCommand):
    """Shared flags and output handling for the oracle commands."""

    formats = ('table', 'json')

    def add_arguments(self, parser):
        defaults = settings.REFINED_DJ
        parser.add_argument('--format', choices=self.formats, default='table')
        parser.add_argument('--out', type=Path, help='Write the output to this file instead of stdout.')
        parser.add_argument('--tol', type=float, default=defaults['TOLERANCE'],
                            help='Tolerance for verdicts and equivalence checks.')
        parser.add_argument('--seed', type=int, default=defaults['SEED'], help='Seed for sampling.')

    def execute(self, *args, **options):
        if options.get('verbosity', 1) >= 3:
            logging.getLogger('oracles').setLevel(logging.DEBUG)
        self.validate_options(CommandOptionsSerializer, tol=options.get('tol'), seed=options.get('seed'))
        try:
            return super().execute(*args, **options)
        except OracleError as exc:
            raise as_command_error(exc)

    def validate_options(self, serializer_class, **data):
        serializer = serializer_class(data=data)
        if not serializer.is_valid():
            field, messages = next(iter(serializer.errors.items()))
            prefix = '' if field == 'non_field_errors' else f'--{field}: '
            raise CommandError(f'{prefix}{messages[0]}', returncode=EXIT_INPUT_ERROR)
        return serializer.validated_data

    def add_truth_arguments(self, parser):
        source = parser.add_mutually_exclusive_group(required=True)
        source.add_argument('--truth', help='Truth table as a bit string, index 0 leftmost.')
        source.add_argument('--truth-file', type=Path, help='File with one truth table per line.')

    def read_truth_texts(self, options):
        if options.get('truth') is not None:
            return [options['truth']]
        path = options['truth_file']
        try:
            lines = path.read_text(encoding='utf-8').splitlines()
        except OSError as exc:
            raise CommandError(f'cannot read {path}: {exc}', returncode=EXIT_INPUT_ERROR)
        texts = [line.split('#', 1)[0].strip() for line in lines]
        texts = [text for text in texts if text]
        if not texts:
            raise CommandError(f'{path} contains no truth tables', returncode=EXIT_INPUT_ERROR)
        return texts

    def parse_truth(self, text):
        serializer = TruthTableInputSerializer(data={'truth': text})
        if not serializer.is_valid():
            raise CommandError(f'{text!r}: {_first_error(serializer.errors)}', returncode=EXIT_INPUT_ERROR)
        return serializer.validated_data['truth']

    def process_truth_tables(self, options, process):
        """
        Apply ``process`` to every truth table and collect ``(data, text)`` pairs.

        A single ``--truth`` fails the command directly. Lines of a
        ``--truth-file`` fail one by one: each failure becomes an error record
        and the command exits afterwards with the highest failure code.
        """
        results = []
        failures = []
        for text in self.read_truth_texts(options):
            try:
                results.append(process(self.parse_truth(text)))
            except (CommandError, OracleError) as exc:
                error = as_command_error(exc)
                if options.get('truth') is not None:
                    raise error
                failures.append(error)
                results.append(({'truth': text, 'error': str(error)}, f'{text}  error: {error}\n'))
        return results, failures

    def raise_for_failures(self, failures, total):
        if failures:
            raise CommandError(
                f'{len(failures)} of {total} truth tables failed',
                returncode=max(error.returncode for error in failures),
            )

    def render_json(self, data):
        indent = settings.REFINED_DJ['JSON_INDENT'] or None
        return JSONRenderer().render(data, renderer_context={'indent': indent}).decode('utf-8') + '\n'

    def emit(self, text, options):
        out = options.get('out')
        if out is None:
            self.stdout.write(text, ending='')
            return
        try:
            out.write_text(text, encoding='utf-8')
        except OSError as exc:
            raise CommandError(f'cannot write {out}: {exc}', returncode=EXIT_INPUT_ERROR)
        self.stderr.write(f'wrote {out}')

    def check_enumeration_size(self, n):
        ceiling = min(settings.REFINED_DJ['ENUMERATION_MAX_QUBITS'], boolfn.ENUMERATION_MAX_QUBITS)
        if not boolfn.ENUMERATION_MIN_QUBITS <= n <= ceiling:
            raise CommandError(
                f'--n must be between {boolfn.ENUMERATION_MIN_QUBITS} and {ceiling}, got {n}',
                returncode=EXIT_INPUT_ERROR,
            )
