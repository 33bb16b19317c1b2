from django.core.management.base import CommandError

from oracles import reports
from oracles.management.commands._base import EXIT_VERIFICATION_FAILED, OracleCommand
from oracles.serializers import VerificationSerializer


class Command(OracleCommand):
    help = 'Run the acceptance suites: oracle equivalence, census, refined/original and formula agreement.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--n', type=int, choices=[3], default=3)
        parser.add_argument('--json', action='store_true', help='Same as --format json.')

    def handle(self, *args, **options):
        verification = reports.run_verification(options['n'], options['tol'])

        if options['json'] or options['format'] == 'json':
            self.emit(self.render_json(VerificationSerializer(verification).data), options)
        else:
            lines = []
            for check in verification.checks:
                status = 'ok  ' if check.passed else 'FAIL'
                detail = f'  {check.detail}' if check.detail else ''
                lines.append(f'{status}  {check.name} ({check.checked} checked){detail}')
            passed = sum(1 for check in verification.checks if check.passed)
            lines.append(f'{passed} suites passed' if verification.passed
                         else f'{passed} of {len(verification.checks)} suites passed')
            self.emit('\n'.join(lines) + '\n', options)

        failure = verification.first_failure
        if failure is not None:
            raise CommandError(f'verification failed: {failure.name}', returncode=EXIT_VERIFICATION_FAILED)
