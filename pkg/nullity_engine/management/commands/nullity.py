"""
Batch experiments of the nullity engine.

    python manage.py nullity zoo --out zoo.csv
    python manage.py nullity capacity --config capacity.json --format json
    python manage.py nullity spectrum --config spectrum.json --out spectrum.csv

Exit codes: 0 all checks passed, 2 verdict mismatch, 3 numerical
non-convergence, 4 configuration error.
"""

import json
import logging
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from api.serializers import CONFIG_SERIALIZERS
from nullity_engine.exceptions import ConvergenceError, NullityEngineError
from nullity_engine.fractal_sets import level_set
from nullity_engine.services import (
    ExperimentService,
    ExportFormat,
    ZooService,
    interval_rows,
    render_document,
    render_rows,
    write_text,
)

logger = logging.getLogger(__name__)

EXIT_MISMATCH = 2
EXIT_NON_CONVERGENCE = 3
EXIT_CONFIG = 4

# Experiments whose natural output is one JSON document rather than a table
DOCUMENT_EXPERIMENTS = ('capacity', 'cheese', 'appendix-b', 'cap-comparison', 'classify', 'level-set')

# The cap < Cap comparison, under its primary name and its alias
COMPARISON_EXPERIMENTS = ('appendix-b', 'cap-comparison')


def _flatten(document, prefix=''):
    if hasattr(document, 'to_dict'):
        document = document.to_dict()
    row = {}
    for key, value in document.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict) or hasattr(value, 'to_dict'):
            row.update(_flatten(value, f"{name}_"))
        else:
            row[name] = value
    return row


class Command(BaseCommand):
    help = 'Run a nullity experiment and write its table or report'

    def add_arguments(self, parser):
        parser.add_argument('experiment', choices=sorted(CONFIG_SERIALIZERS))
        parser.add_argument('--config', help='JSON experiment config')
        parser.add_argument('--out', help='Output file (default: stdout)')
        parser.add_argument('--format', choices=[fmt.value for fmt in ExportFormat],
                            help='Output format (default: csv for tables, json for reports)')
        parser.add_argument('--threads', type=int, help='Worker threads for the zoo table')
        parser.add_argument('--seed', type=int, help='Seed for randomized checks')

    def handle(self, *args, **options):
        experiment = options['experiment']
        config = self.load_config(experiment, options.get('config'))
        fmt = options.get('format') or (
            'json' if experiment in DOCUMENT_EXPERIMENTS else 'csv'
        )
        handler = getattr(self, f"run_{experiment.replace('-', '_')}")
        try:
            handler(config, ExportFormat(fmt), options)
        except ConvergenceError as e:
            raise CommandError(str(e), returncode=EXIT_NON_CONVERGENCE)
        except NullityEngineError as e:
            raise CommandError(str(e), returncode=EXIT_CONFIG)

    def load_config(self, experiment, path):
        """
        Read and validate the JSON config of ``experiment``.

        Returns:
            dict: Validated data
        """
        payload = {}
        if path:
            try:
                payload = json.loads(Path(path).read_text(encoding='utf-8'))
            except (OSError, ValueError) as e:
                raise CommandError(f"cannot read config {path}: {e}", returncode=EXIT_CONFIG)
            if not isinstance(payload, dict):
                raise CommandError(f"config {path} is not a JSON object", returncode=EXIT_CONFIG)
        if experiment in COMPARISON_EXPERIMENTS:
            payload = {'include_grid': True, **payload}
        serializer = CONFIG_SERIALIZERS[experiment](data=payload)
        if not serializer.is_valid():
            logger.warning(f"rejected {experiment} config: {serializer.errors}")
            raise CommandError(
                f"invalid {experiment} config: {json.dumps(serializer.errors, sort_keys=True)}",
                returncode=EXIT_CONFIG,
            )
        return serializer.validated_data

    def emit(self, result, fmt, options):
        if fmt is ExportFormat.JSON:
            text = render_document(result)
        else:
            rows = result if isinstance(result, list) else [result]
            text = render_rows([_flatten(row) for row in rows], fmt)
        write_text(text, options.get('out'), self.stdout)

    def run_zoo(self, config, fmt, options):
        service = ZooService(config.get('table'), options.get('threads'))
        report = service.run(service.load_cases(config.get('filters')))
        self.emit(report.rows(), fmt, options)
        if not report.passed:
            first = report.mismatches[0].to_row()
            self.stderr.write(render_rows([first], ExportFormat.CSV))
            raise CommandError(
                f"{len(report.mismatches)} zoo verdicts differ from the golden table",
                returncode=EXIT_MISMATCH,
            )

    def run_classify(self, config, fmt, options):
        self.emit(ExperimentService.classify(config['kind'], config), fmt, options)

    def run_norm_sweep(self, config, fmt, options):
        self.emit(ExperimentService.norm_sweep(config), fmt, options)

    def run_capacity(self, config, fmt, options):
        document = ExperimentService.capacity(config)
        self.emit(document, fmt, options)
        if not document['converged']:
            raise CommandError(
                f"{document['variant']} solve did not converge (residual {document['residual']})",
                returncode=EXIT_NON_CONVERGENCE,
            )

    def run_scaling(self, config, fmt, options):
        self.emit(ExperimentService.scaling(config), fmt, options)

    def run_cheese(self, config, fmt, options):
        seed = options.get('seed')
        if seed is None:
            seed = config.get('seed')
        self.emit(ExperimentService.cheese(config, seed=seed), fmt, options)

    def run_appendix_b(self, config, fmt, options):
        grid_config = {key: config[key] for key in ('L', 'N') if key in config}
        documents = ExperimentService.cap_comparison(
            config.get('epsilons'), config['include_grid'], grid_config
        )
        self.emit(documents, fmt, options)
        if config['include_grid'] and not all(doc['grid_converged'] for doc in documents):
            raise CommandError('grid capacity solves did not converge',
                               returncode=EXIT_NON_CONVERGENCE)

    run_cap_comparison = run_appendix_b

    def run_level_set(self, config, fmt, options):
        if fmt is ExportFormat.JSON:
            self.emit(ExperimentService.level_set(config), fmt, options)
        else:
            self.emit(interval_rows(level_set(config['cantor'], config['depth'])), fmt, options)

    def run_spectrum(self, config, fmt, options):
        self.emit(ExperimentService.spectrum(config), fmt, options)

    def run_threshold_curve(self, config, fmt, options):
        self.emit(ExperimentService.threshold_curve(config), fmt, options)
