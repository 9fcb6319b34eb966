"""
Reading and writing group files.

A ".cay" file holds `cayley <order>`, then order rows of order 0-based
indices, then optional `label <index> <string>` lines. A ".perm" file holds
`perm <degree>`, then one generator per line in disjoint-cycle notation, such
as `(0 1 2)(3 4)`. Blank lines and lines starting with `#` are skipped in both.
"""

import logging
import re
from pathlib import Path
from typing import Iterator, List, Tuple

from cnorm import settings
from cnorm.errors import IOFailure, NotAPermutation, ParseError
from cnorm.structures.groups import FiniteGroup, from_cayley_table, from_permutation_generators
from cnorm.structures.groups.finite_group import check_order

logger = logging.getLogger(__name__)

saves_path = Path(__file__).resolve().parents[1] / "saves"

TOKEN = re.compile(r"\S+")
CYCLE = re.compile(r"\(([^()]*)\)")


def _lines(text: str) -> Iterator[Tuple[int, str]]:
    """Numbered lines with blanks and comments dropped."""
    for number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if stripped and not stripped.startswith("#"):
            yield number, line


def _integer(match: re.Match, number: int) -> int:
    try:
        return int(match.group())
    except ValueError:
        raise ParseError(
            f"expected an integer, got {match.group()!r}", number, match.start() + 1
        ) from None


def _header(lines: List[Tuple[int, str]], keyword: str) -> int:
    if not lines:
        raise ParseError(f"missing `{keyword} <n>` header", 1)
    number, line = lines[0]
    tokens = list(TOKEN.finditer(line))
    if tokens[0].group() != keyword:
        raise ParseError(
            f"expected `{keyword}`, got {tokens[0].group()!r}", number, tokens[0].start() + 1
        )
    if len(tokens) != 2:
        raise ParseError(f"expected `{keyword} <n>`", number, tokens[0].start() + 1)
    size = _integer(tokens[1], number)
    if size < 1:
        raise ParseError(f"{keyword} size must be positive", number, tokens[1].start() + 1)
    return size


def parse_cayley(text: str, cap: int | None = None) -> FiniteGroup:
    """
    Parse ".cay" text and validate the table.

    Raises:
        ParseError: The text is malformed; line and column are reported.
        OrderCapExceeded: The declared order is above the cap.
        GroupValidationError: The table is not a group.
    """
    lines = list(_lines(text))
    order = _header(lines, "cayley")
    check_order(order, cap)
    if len(lines) < order + 1:
        raise ParseError(
            f"expected {order} table rows, found {len(lines) - 1}",
            lines[-1][0] + 1,
        )

    rows = []
    for number, line in lines[1 : order + 1]:
        tokens = list(TOKEN.finditer(line))
        if len(tokens) != order:
            column = tokens[min(order, len(tokens) - 1)].start() + 1
            raise ParseError(f"expected {order} entries, found {len(tokens)}", number, column)
        rows.append([_integer(token, number) for token in tokens])

    labels = [str(i) for i in range(order)]
    for number, line in lines[order + 1 :]:
        parts = line.split(maxsplit=2)
        if parts[0] != "label" or len(parts) != 3:
            raise ParseError("expected `label <index> <string>`", number, line.index(parts[0]) + 1)
        index_match = list(TOKEN.finditer(line))[1]
        index = _integer(index_match, number)
        if not 0 <= index < order:
            raise ParseError(f"label index {index} out of range", number, index_match.start() + 1)
        labels[index] = parts[2].strip()

    return from_cayley_table(order, rows, labels)


def parse_cycles(line: str, degree: int, number: int) -> List[int]:
    """Images of one generator written in disjoint-cycle notation."""
    leftover = CYCLE.sub("", line)
    if leftover.strip():
        column = len(line) - len(line.lstrip()) + 1
        stray = re.search(r"\S", leftover)
        if stray is not None:
            column = line.find(stray.group()) + 1
        raise ParseError("expected cycles like `(0 1 2)(3 4)`", number, column)

    images = list(range(degree))
    seen = set()
    for cycle in CYCLE.finditer(line):
        points = [
            _integer(token, number)
            for token in TOKEN.finditer(line, cycle.start(1), cycle.end(1))
        ]
        for point in points:
            if not 0 <= point < degree or point in seen:
                raise NotAPermutation(line.strip(), degree)
            seen.add(point)
        for point, image in zip(points, points[1:] + points[:1]):
            images[point] = image
    return images


def parse_permutations(text: str, cap: int | None = None) -> FiniteGroup:
    """
    Parse ".perm" text and close the generators.

    Raises:
        ParseError: The text is malformed.
        NotAPermutation: A cycle repeats or leaves the points [0, degree).
        OrderCapExceeded: The generated group is larger than the cap.
    """
    lines = list(_lines(text))
    degree = _header(lines, "perm")
    generators = [parse_cycles(line, degree, number) for number, line in lines[1:]]
    return from_permutation_generators(degree, generators, cap)


def format_cayley(g: FiniteGroup) -> str:
    """The ".cay" text of a group; labels are written unless they are the indices."""
    lines = [f"cayley {g.order}"]
    lines += [" ".join(str(int(x)) for x in row) for row in g.table]
    if g.labels != tuple(str(i) for i in range(g.order)):
        lines += [f"label {i} {label}" for i, label in enumerate(g.labels)]
    return "\n".join(lines) + "\n"


class FileHandler:
    """
    Load and save groups for the command runner.

    Attributes:
        runner: The runner whose order cap applies to loaded groups.

    Methods:
        resolve: Find a group file, falling back to the shipped presets.
        read: Load a group from a ".cay" or ".perm" file.
        write: Save a group as a ".cay" file.
    """

    def __init__(self, runner: "Runner"):
        self.runner = runner

    @staticmethod
    def presets() -> List[str]:
        """The names of the shipped preset groups."""
        return sorted(path.stem for path in saves_path.glob("*.perm"))

    def resolve(self, filename: str) -> Path:
        """The file itself when it exists, else the shipped preset of that name."""
        path = Path(filename)
        if not path.exists():
            for extension in settings.extensions:
                preset = saves_path / f"{path.stem}.{extension}"
                if preset.exists():
                    logger.debug("Using the shipped preset %s.", preset)
                    return preset
        return path

    def read(self, filename: str) -> Tuple[str, FiniteGroup]:
        """
        Load a group, detecting the format from the header keyword, then the
        extension.

        Returns:
            The file's stem as the group name, and the group.
        """
        path = self.resolve(filename)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as error:
            raise IOFailure(f"cannot read {path}: {error}") from error

        first = next(_lines(text), (1, ""))[1].split()
        keyword = first[0] if first else ""
        if keyword == "perm" or (keyword != "cayley" and path.suffix == ".perm"):
            group = parse_permutations(text, self.runner.max_order)
        else:
            group = parse_cayley(text, self.runner.max_order)
        logger.info("Loaded %s of order %s.", path, group.order)
        return path.stem, group

    def write(self, filename: str, g: FiniteGroup) -> Path:
        path = Path(filename)
        try:
            path.write_text(format_cayley(g), encoding="utf-8")
        except OSError as error:
            raise IOFailure(f"cannot write {path}: {error}") from error
        logger.info("Saved group of order %s to %s.", g.order, path)
        return path
