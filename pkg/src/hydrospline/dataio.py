"""CSV ingestion and serialization for station monitoring tables.

The format is one header row (date column first, then parameter codes)
followed by one row per sampling date.  Cells holding "*" or "-" mean the
measurement is absent; serialization re-emits absent cells as "*".
"""

import csv
import io
import re
from dataclasses import dataclass
from datetime import date
from pathlib import Path

from .errors import (
    DuplicateTimestamp,
    HeaderMismatch,
    MalformedNumber,
    MalformedRow,
    UnknownParameter,
)
from .series import Sample, TimeSeries, build_series, format_date, parse_date

#: Dunare-Gropeni station table, 9/11/2003 .. 7/15/2004, bundled both as this
#: string and as data/gropeni.csv inside the package.
GROPENI_CSV = """\
Data,temp,pH,OD,CBO5,CCO-Mn,CCO-Cr
9/11/2003,21,7.5,8.1,4.8,6.4,20
10/14/2003,14,7.5,7.5,6.8,16.8,-
11/11/2003,11,7.2,7.9,4.7,8.8,20
12/5/2003,7,7.5,7.3,5.9,9.6,20
1/30/2004,3,7.2,8.3,14,24,45
2/5/2004,3,6.8,8.5,7.7,13.6,30
3/25/2004,9,7.6,9.2,7,12.8,20
4/30/2004,*,7.1,9.8,5.8,8,30
5/31/2004,20,8,8,4.9,6.4,14.4
6/28/2004,26,7.9,9,5.5,8,19.2
7/15/2004,*,7.9,7.6,7.9,15.2,33.6
"""

GROPENI_STATION = "Dunare-Gropeni"

_MISSING_MARKERS = {"*", "-"}

_NUMBER_RE = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?$")


@dataclass(frozen=True)
class DatasetRow:
    """One sampling date; values align with the dataset's parameter order."""

    date: date
    values: tuple[float | None, ...]


@dataclass(frozen=True)
class Dataset:
    """A parsed monitoring table: rows sorted by date, no duplicate dates."""

    station: str
    parameters: tuple[str, ...]
    rows: tuple[DatasetRow, ...]
    source: str

    def column(self, parameter: str) -> list[float | None]:
        i = self._parameter_index(parameter)
        return [row.values[i] for row in self.rows]

    def samples(self, parameter: str) -> list[Sample]:
        i = self._parameter_index(parameter)
        return [
            Sample(station=self.station, date=row.date, parameter=parameter, value=row.values[i])
            for row in self.rows
        ]

    def _parameter_index(self, parameter: str) -> int:
        try:
            return self.parameters.index(parameter)
        except ValueError:
            raise UnknownParameter(
                f"unknown parameter {parameter!r}; file has {', '.join(self.parameters)}"
            ) from None


def _parse_cell(cell: str, row_number: int, code: str) -> float | None:
    cell = cell.strip()
    if cell in _MISSING_MARKERS:
        return None
    if not _NUMBER_RE.match(cell):
        raise MalformedNumber(f"row {row_number}, column {code}: not a number: {cell!r}")
    return float(cell)


def parse_csv(text: str, station: str = "unknown", source: str = "<memory>") -> Dataset:
    """Parse a monitoring table from CSV text.

    The first header cell must be "Data" or "Date"; the rest name the
    parameter columns.  Rows are sorted by date on the way in and two rows
    on the same date are rejected.
    """
    reader = csv.reader(io.StringIO(text))
    records = [row for row in reader if row]
    if not records:
        raise HeaderMismatch("file has no header row")
    header = [cell.strip() for cell in records[0]]
    if header[0] not in ("Data", "Date"):
        raise HeaderMismatch(f"first header cell must be Data or Date, got {header[0]!r}")
    parameters = tuple(header[1:])
    if len(set(parameters)) != len(parameters):
        raise HeaderMismatch("duplicate parameter codes in header")
    rows = []
    for number, record in enumerate(records[1:], start=2):
        cells = [cell.strip() for cell in record]
        if len(cells) != len(header):
            raise MalformedRow(
                f"row {number}: expected {len(header)} cells, got {len(cells)}"
            )
        when = parse_date(cells[0])
        values = tuple(
            _parse_cell(cell, number, code) for cell, code in zip(cells[1:], parameters)
        )
        rows.append(DatasetRow(date=when, values=values))
    rows.sort(key=lambda row: row.date)
    for a, b in zip(rows, rows[1:]):
        if a.date == b.date:
            raise DuplicateTimestamp(f"two rows on {format_date(a.date)}")
    return Dataset(station=station, parameters=parameters, rows=tuple(rows), source=source)


def _format_value(value: float | None) -> str:
    if value is None:
        return "*"
    return repr(value)


def serialize_csv(dataset: Dataset) -> str:
    """Render a dataset back to CSV; parsing the result reproduces it."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["Data", *dataset.parameters])
    for row in dataset.rows:
        writer.writerow([format_date(row.date), *map(_format_value, row.values)])
    return out.getvalue()


def load_csv(path: str | Path, station: str | None = None) -> Dataset:
    """Read a dataset from a file; the station defaults to the file stem."""
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    return parse_csv(text, station=station or path.stem, source=str(path))


def gropeni_dataset() -> Dataset:
    """The bundled Dunare-Gropeni table (11 rows, 6 parameters)."""
    return parse_csv(GROPENI_CSV, station=GROPENI_STATION, source="fixture:gropeni")


def dataset_series(dataset: Dataset, parameter: str) -> TimeSeries:
    """Build the day-count series for one parameter of a dataset."""
    return build_series(dataset.samples(parameter), dataset.station, parameter)
