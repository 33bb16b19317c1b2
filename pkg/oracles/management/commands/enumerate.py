from oracles import oracle_compiler, reports
from oracles.management.commands._base import OracleCommand
from oracles.serializers import EnumerationReportSerializer


class Command(OracleCommand):
    help = 'Enumerate the balanced functions, their complement classes and oracle constructions.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--n', type=int, default=3, help='Number of query qubits (2 to 4).')

    def handle(self, *args, **options):
        self.check_enumeration_size(options['n'])
        report = reports.build_enumeration_report(options['n'], options['tol'])

        if options['format'] == 'json':
            self.emit(self.render_json(EnumerationReportSerializer(report).data), options)
            return
        self.emit(self.format_table(report), options)

    def format_table(self, report):
        lines = [f'n={report.n}: {report.total_balanced} balanced functions, {report.classes} classes']
        if report.type_counts:
            counts = ', '.join(f'Type{kind}={count}' for kind, count in report.type_counts.items())
            lines.append(f'construction types: {counts}')
            for kind, tally in report.phase_flip_distribution.items():
                spread = ', '.join(f'{flips} z -> {count}' for flips, count in tally.items())
                lines.append(f'  Type{kind} z-gate counts: {spread}')
        lines.append('')
        lines.append(f'{"truth":<{1 << report.n}}  {"type":<5}  {"a0":>6}  {"product":<7}  anf / gates')
        for row in report.rows:
            kind = row.synthesis.construction_type
            gates = '; '.join(oracle_compiler.emit_text(row.synthesis.circuit).splitlines()[1:]) or '(identity)'
            lines.append(
                f'{row.truth}  {kind.label if kind else "-":<5}  {row.zero_amplitude:>6.3f}  '
                f'{"yes" if row.fully_product else "no":<7}  {row.synthesis.anf.format()}  [{gates}]'
            )
        return '\n'.join(lines) + '\n'
