from django.core.management.base import CommandError

from oracles import oracle_compiler
from oracles.management.commands._base import EXIT_INPUT_ERROR, OracleCommand
from oracles.serializers import SynthesisReportSerializer


class Command(OracleCommand):
    help = 'Compile truth tables into phase-oracle circuits (z / cz / ccz gates).'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_truth_arguments(parser)

    def handle(self, *args, **options):
        out = options.pop('out', None)
        compiled = []

        def compile_one(t):
            report = oracle_compiler.compile_truth_table(t)
            compiled.append(report)
            return SynthesisReportSerializer(report).data, self.format_report(report)

        results, failures = self.process_truth_tables(options, compile_one)

        if out is not None:
            if len(results) != 1 or failures:
                raise CommandError('--out writes a single circuit; pass one truth table', returncode=EXIT_INPUT_ERROR)
            self.emit(oracle_compiler.emit_text(compiled[0].circuit), {'out': out})

        if options['format'] == 'json':
            data = [item for item, _ in results]
            self.emit(self.render_json(data if options.get('truth_file') else data[0]), options)
        else:
            self.emit('\n'.join(text for _, text in results), options)
        self.raise_for_failures(failures, len(results))

    def format_report(self, report):
        counts = report.gate_counts
        lines = [
            f'truth    {report.truth_table.bits}',
            f'anf      {report.anf.format()}',
        ]
        if report.truth_table.n == oracle_compiler.CONSTRUCTION_QUBITS:
            kind = report.construction_type
            lines.append(f'type     {kind.label if kind else "-"}')
        lines += [
            f'gates    z={counts.phase_flip} cz={counts.controlled_phase} '
            f'ccz={counts.multi_controlled_z} h={counts.hadamard}',
            f'note     global sign {report.global_sign:+d}',
            'circuit',
        ]
        lines += ['  ' + line for line in oracle_compiler.emit_text(report.circuit).splitlines()]
        return '\n'.join(lines) + '\n'
