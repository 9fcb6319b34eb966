"""
Scans of group families comparing nilpotency class with C-length.

A row whose class exceeds its c_length has a positive margin. Such rows are
findings to report, never failures.
"""

import logging
from dataclasses import asdict, dataclass
from multiprocessing import Pool
from typing import Iterable, List

import pandas as pd

from cnorm.structures.families import FamilySpec
from cnorm.structures.series import GroupProfile, profile
from cnorm.utils import Timer

logger = logging.getLogger(__name__)

COLUMNS = (
    "group_name",
    "order",
    "nilpotency_class",
    "c_length",
    "derived_length",
    "question_margin",
)


@dataclass(frozen=True)
class ScanRow:
    """
    One group's line in a scan.

    Attributes:
        group_name: The family name, such as "D_8".
        order: The group order.
        nilpotency_class: None when the group is not nilpotent.
        c_length: None when the C-series stalls below the group.
        derived_length: None when the group is not soluble.
    """

    group_name: str
    order: int
    nilpotency_class: int | None
    c_length: int | None
    derived_length: int | None

    @classmethod
    def from_profile(cls, name: str, order: int, group_profile: GroupProfile) -> "ScanRow":
        return cls(
            name,
            order,
            group_profile.nilpotency_class,
            group_profile.c_length,
            group_profile.derived_length,
        )

    @property
    def question_margin(self) -> int | None:
        """nilpotency_class - c_length, when both exist."""
        if self.nilpotency_class is None or self.c_length is None:
            return None
        return self.nilpotency_class - self.c_length

    @property
    def highlighted(self) -> bool:
        return (self.question_margin or 0) > 0

    def to_json(self) -> dict:
        return {**asdict(self), "question_margin": self.question_margin}


def scan_group(spec: FamilySpec, cap: int | None = None) -> ScanRow:
    """Build and profile one group; run in worker processes."""
    group = spec.build(cap)
    return ScanRow.from_profile(spec.name, group.order, profile(group))


def scan(specs: Iterable[FamilySpec], jobs: int = 1, cap: int | None = None) -> List[ScanRow]:
    """
    Profile every group, sorted by order, then name.

    Args:
        specs: The groups to scan.
        jobs: The number of worker processes; 1 scans in this process.
        cap: The order cap passed to each build.
    """
    work = [(spec, cap) for spec in specs]
    with Timer(f"Scanning {len(work)} groups", logger=logger):
        if jobs > 1 and len(work) > 1:
            with Pool(processes=jobs) as pool:
                rows = pool.starmap(scan_group, work)
        else:
            rows = [scan_group(*item) for item in work]
    return sorted(rows, key=lambda row: (row.order, row.group_name))


def to_df(rows: Iterable[ScanRow]) -> pd.DataFrame:
    """
    Export scan rows to a dataframe.

    Absent values are kept as pandas' nullable integer NA.
    """
    rows = list(rows)
    data = {
        "group_name": [row.group_name for row in rows],
        "order": [row.order for row in rows],
        "nilpotency_class": [row.nilpotency_class for row in rows],
        "c_length": [row.c_length for row in rows],
        "derived_length": [row.derived_length for row in rows],
        "question_margin": [row.question_margin for row in rows],
    }
    df = pd.DataFrame(data, columns=COLUMNS)
    for column in COLUMNS[1:]:
        df[column] = df[column].astype("Int64")
    return df


def write_worksheet(
    workbook, rows: Iterable[ScanRow], name="Scan", color="#FF6699"
) -> None:
    """
    Write scan rows to a tab in an Excel document.

    Args:
        workbook (xlsxwriter.Workbook): The Excel document to write to.
        rows: The scan rows.
        name: The name of the tab.
        color: The color of the tab.
    """
    sheet = workbook.add_worksheet(name)
    sheet.set_tab_color(color)

    bold = workbook.add_format({"bold": True})
    finding = workbook.add_format({"bg_color": "#FFEB9C"})
    comment_scale = {"x_scale": 1.5, "y_scale": 1.5}

    for column, title in enumerate(COLUMNS):
        sheet.write(0, column, title, bold)
    sheet.write_comment(
        0, COLUMNS.index("question_margin"), "nilpotency class minus c_length", comment_scale
    )

    for r, row in enumerate(rows, start=1):
        values = row.to_json()
        style = finding if row.highlighted else None
        for column, key in enumerate(COLUMNS):
            value = values[key]
            if value is None:
                sheet.write_blank(r, column, None, style)
            else:
                sheet.write(r, column, value, style)
