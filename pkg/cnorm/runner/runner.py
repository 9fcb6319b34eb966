import json
import logging
import sys
from argparse import Namespace

import pandas as pd
import xlsxwriter

from cnorm import settings
from cnorm.constants import claims, families
from cnorm.constants import series as kinds
from cnorm.errors import GroupInputError, IOFailure
from cnorm.runner import scan
from cnorm.runner.filehandler import FileHandler
from cnorm.structures.families import FamilySpec, corpus_specs, dihedral_degree, family_members
from cnorm.structures.groups import conjugacy_classes, element_order_census
from cnorm.structures.groups.finite_group import check_order
from cnorm.structures.series import GroupAnalysis, to_df
from cnorm.structures.subgroups import distinct_centralizer_count
from cnorm.verifier import run_all

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CLAIM_FAILED = 1
EXIT_INPUT_ERROR = 2


class Runner:
    """
    The command runner for cnorm.

    Each subcommand is a cmd_* method returning the process exit status. Input
    errors are caught in run and become exit status 2.

    Attributes:
        args: The parsed command line.
        json: Whether to print JSON instead of tables.
        max_order: The order cap for every group built or loaded.
        jobs: The number of worker processes for scans.
        exhaustive: Whether verify enumerates every subgroup of small groups.
        filehandler: Loads and saves group files.

    Methods:
        run: Dispatch to the chosen subcommand.
    """

    def __init__(self, args: Namespace):
        self.args = args
        self.json = getattr(args, "json", False)
        self.max_order = getattr(args, "max_order", None) or settings.order_cap
        self.jobs = getattr(args, "jobs", None) or settings.default_jobs
        self.exhaustive = getattr(args, "exhaustive_subgroups", False)
        self.filehandler = FileHandler(self)

    def run(self) -> int:
        try:
            return getattr(self, f"cmd_{self.args.command}")()
        except (GroupInputError, IOFailure) as error:
            logger.debug("Input error.", exc_info=True)
            print(f"{settings.name}: {type(error).__name__}: {error}", file=sys.stderr)
            return EXIT_INPUT_ERROR

    def emit(self, data: dict) -> None:
        print(json.dumps(data, indent=2))

    def cmd_gen(self) -> int:
        spec = FamilySpec.from_cli(self.args.family, self.args.params)
        group = spec.build(self.max_order)
        path = self.filehandler.write(self.args.out or f"{spec.name}.cay", group)
        if self.json:
            self.emit({"group": {"name": spec.name, "order": group.order}, "path": str(path)})
        else:
            print(f"Wrote {spec.name} (order {group.order}) to {path}")
        return EXIT_OK

    def cmd_series(self) -> int:
        name, group = self.filehandler.read(self.args.file)
        analysis = GroupAnalysis(group, name)
        reports = [analysis.series(kind) for kind in kinds.ALL]
        group_profile = analysis.profile

        if self.json:
            self.emit(
                {
                    "group": {"name": name, "order": group.order},
                    "series": {kinds.JSON_KEYS[r.kind]: r.orders() for r in reports},
                    "stabilized_at": {
                        kinds.JSON_KEYS[r.kind]: r.stabilized_at for r in reports
                    },
                    "profile": group_profile.to_json(),
                }
            )
            return EXIT_OK

        print(f"{name} (order {group.order})")
        print(to_df(reports).to_string(index=False))
        print()
        print(pd.Series(group_profile.to_json()).to_string())
        return EXIT_OK

    def cmd_verify(self) -> int:
        name, group = self.filehandler.read(self.args.file)
        if self.exhaustive and group.order > settings.exhaustive_subgroup_limit:
            logger.warning(
                "Order %s is above %s; subgroup claims stay sampled.",
                group.order,
                settings.exhaustive_subgroup_limit,
            )
        report = run_all(group, name, self.exhaustive)
        status = EXIT_OK if report.all_hold else EXIT_CLAIM_FAILED

        if self.json:
            self.emit(report.to_json())
            return status

        table = pd.DataFrame(
            {
                "claim": [r.claim_id for r in report.results],
                "status": [r.status for r in report.results],
                "scope": [r.scope for r in report.results],
                "seconds": [round(r.elapsed, 3) for r in report.results],
            }
        )
        print(f"{name} (order {group.order})")
        print(table.to_string(index=False))
        vacuous = sum(r.status == claims.HOLDS_VACUOUSLY for r in report.results)
        holding = sum(r.holds for r in report.results)
        print(f"\n{holding}/{len(report.results)} claims hold ({vacuous} vacuously).")
        for failure in report.failures():
            print(f"FAILS {failure.claim_id}: {json.dumps(failure.witness)}")
        return status

    def cmd_scan(self) -> int:
        family, limit = self.args.family, self.args.limit
        check_order(limit, self.max_order)
        if family == families.CORPUS:
            specs = corpus_specs(limit)
        else:
            specs = family_members(family, limit)
        rows = scan.scan(specs, self.jobs, self.max_order)
        findings = [row.group_name for row in rows if row.highlighted]

        if self.args.xlsx:
            with xlsxwriter.Workbook(self.args.xlsx) as workbook:
                scan.write_worksheet(workbook, rows, name=f"{family} {limit}")
            logger.info("Wrote the scan table to %s.", self.args.xlsx)

        if self.json:
            self.emit({"rows": [row.to_json() for row in rows], "findings": findings})
            return EXIT_OK

        # na_rep does not apply to pd.NA in nullable integer columns.
        df = scan.to_df(rows).astype("string").fillna("-")
        df.insert(0, "", ["*" if row.highlighted else "" for row in rows])
        print(df.to_string(index=False))
        if findings:
            print(f"\nClass exceeds c_length in: {', '.join(findings)}")
        return EXIT_OK

    def cmd_info(self) -> int:
        name, group = self.filehandler.read(self.args.file)
        analysis = GroupAnalysis(group, name)
        info = {
            "group": {"name": name, "order": group.order},
            "identity": group.labels[group.identity],
            "element_orders": element_order_census(group),
            "class_sizes": [len(members) for members in conjugacy_classes(group)],
            "center": analysis.center.size,
            "centralizers": distinct_centralizer_count(group),
            "centralizer_norm": analysis.centralizer_norm.size,
            "baer_norm": analysis.baer_norm.size,
            "dihedral_degree": dihedral_degree(group),
            "is_abelian": group.is_abelian,
            "profile": analysis.profile.to_json(),
        }
        if self.json:
            self.emit(info)
            return EXIT_OK

        for key, value in info.items():
            if isinstance(value, dict):
                value = ", ".join(f"{k}: {v}" for k, v in value.items())
            elif isinstance(value, list):
                value = ", ".join(map(str, value))
            print(f"{key}: {value}")
        return EXIT_OK
