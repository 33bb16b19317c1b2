from oracles import reports
from oracles.management.commands._base import OracleCommand
from oracles.serializers import EntanglementSurveySerializer


class Command(OracleCommand):
    help = 'Survey single-qubit purities of the phase-kicked state for every balanced class.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--n', type=int, default=3, help='Number of query qubits (2 to 4).')

    def handle(self, *args, **options):
        self.check_enumeration_size(options['n'])
        survey = reports.survey_entanglement(options['n'], options['tol'])

        if options['format'] == 'json':
            self.emit(self.render_json(EntanglementSurveySerializer(survey).data), options)
            return

        lines = []
        for row in survey.rows:
            purities = ' '.join(f'{p:.3f}' for p in row.profile.purities)
            state = 'product' if row.profile.fully_product else 'entangled'
            kind = f'  {row.construction_type.label}' if row.construction_type else ''
            lines.append(f'{row.truth}  {purities}  {state}{kind}')
        lines.append(f'{survey.product_count} product, {survey.entangled_count} entangled')
        self.emit('\n'.join(lines) + '\n', options)
