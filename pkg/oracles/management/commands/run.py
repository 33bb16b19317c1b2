from django.conf import settings

from oracles import dj_runner, simulator
from oracles.dj_runner import Mode
from oracles.management.commands._base import OracleCommand
from oracles.serializers import ClassicalDecisionSerializer, DjOutcomeSerializer, RunOptionsSerializer


class Command(OracleCommand):
    help = 'Decide constant vs balanced with the refined, original or classical Deutsch-Jozsa procedure.'

    def add_arguments(self, parser):
        super().add_arguments(parser)
        self.add_truth_arguments(parser)
        parser.add_argument('--mode', choices=[mode.value for mode in Mode], default=Mode.REFINED.value)
        parser.add_argument('--shots', type=int,
                            help='Sample this many measurements of the final query register '
                                 '(refined and original modes only).')

    def handle(self, *args, **options):
        run_options = self.validate_options(RunOptionsSerializer, mode=options['mode'], shots=options['shots'])
        mode = Mode(run_options['mode'])
        shots = run_options.get('shots')
        if shots is None and mode is not Mode.CLASSICAL:
            shots = settings.REFINED_DJ['SHOTS']

        results, failures = self.process_truth_tables(options, lambda t: self.run_one(t, mode, shots, options))

        if options['format'] == 'json':
            data = [item for item, _ in results]
            self.emit(self.render_json(data if options.get('truth_file') else data[0]), options)
        else:
            self.emit(''.join(text for _, text in results), options)
        self.raise_for_failures(failures, len(results))

    def run_one(self, t, mode, shots, options):
        context = {'truth': t.bits}
        if mode is Mode.CLASSICAL:
            decision = dj_runner.classical_decide(t)
            text = f'{t.bits}  classical  {decision.verdict.value}  queries={decision.queries_used}\n'
            return ClassicalDecisionSerializer(decision, context=context).data, text

        runner = dj_runner.run_refined if mode is Mode.REFINED else dj_runner.run_original
        outcome = runner(t, options['tol'])
        text = (
            f'{t.bits}  {mode.value}  {outcome.verdict.value}  '
            f'a0={outcome.zero_amplitude:+.6f}  queries={outcome.queries_used}'
        )
        if outcome.working_qubit_purity is not None:
            text += f'  working-qubit-purity={outcome.working_qubit_purity:.6f}'
        text += '\n'
        if shots:
            histogram = simulator.sample_probabilities(outcome.final_probabilities, shots, options['seed'])
            context['histogram'] = histogram
            text += ''.join(f'  |{index:0{t.n}b}>  {count}\n' for index, count in histogram.items())
        return DjOutcomeSerializer(outcome, context=context).data, text
