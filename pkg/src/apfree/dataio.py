"""Reading and writing the package's on-disk formats.

Three formats, all plain UTF-8 text with LF line endings:

  * b-file: one "n value" pair per line, single space, n strictly
    ascending, '#' comment lines allowed. This is the OEIS b-file
    convention, and the persistent count cache deliberately uses the
    same grammar so caches and published data files interchange.
  * provenance sidecar: "<cache>.provenance", lines "n tag".
  * figure data: lines "n root", where root is theta(n)^(1/n) rounded
    to a fixed number of decimal places, loadable by any two-column
    space-separated plot reader.

No network access anywhere; external sequence data is always a local
file supplied by the caller.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, NamedTuple, Optional, TextIO, Union

from .errors import ConflictError, ParseError, ValueUnavailable
from .growth import global_theta_bounds
from .roots import ROUND_NEAREST, decimal_nth_root
from .table import PROVENANCE_INGESTED, PROVENANCES, ThetaTable

Source = Union[str, Path, TextIO, Iterable[str]]

FIGURE_DIGITS_DEFAULT = 6


class BFileEntry(NamedTuple):
    n: int
    value: int


def _iter_lines(source: Source) -> Iterator[str]:
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="utf-8") as fh:
            yield from fh
    else:
        yield from source


def parse_bfile(source: Source) -> list[BFileEntry]:
    """Parse b-file text into entries, enforcing the grammar.

    Raises ParseError with a line number for malformed lines, wrong token
    counts, non-integers, negative values, or non-ascending n (which also
    catches duplicates).
    """
    entries: list[BFileEntry] = []
    last_n = None
    for lineno, raw in enumerate(_iter_lines(source), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise ParseError(f"expected two tokens, got {len(tokens)}: {line!r}",
                             line=lineno)
        try:
            n, value = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(f"non-integer token in {line!r}", line=lineno) from None
        if n < 0:
            raise ParseError(f"negative index n={n}", line=lineno)
        if value < 0:
            raise ParseError(f"negative value for n={n}", line=lineno)
        if last_n is not None and n <= last_n:
            raise ParseError(f"index n={n} not strictly ascending after {last_n}",
                             line=lineno)
        last_n = n
        entries.append(BFileEntry(n, value))
    return entries


@dataclass(frozen=True)
class IngestResult:
    """What an ingestion did: entries accepted into the table (added) or
    already present with the same value (matched), and entries outside
    the table's domain (n = 0), which are skipped."""

    added: tuple[BFileEntry, ...]
    matched: tuple[BFileEntry, ...]
    skipped: tuple[BFileEntry, ...]

    @property
    def accepted(self) -> tuple[BFileEntry, ...]:
        return tuple(sorted(self.added + self.matched))


def ingest_bfile(source: Source, tbl: ThetaTable) -> IngestResult:
    """Merge a b-file into the table with provenance "ingested".

    Validation happens before anything is committed, so a failing file
    leaves the table untouched: every value must satisfy the universal
    bounds for its n (a cheap guard against transposed digits), and any
    entry whose n is already present must match the existing value
    exactly. Published data files start at n = 0; that entry is outside
    the table's domain and is skipped, not an error.
    """
    entries = parse_bfile(source)
    staged, matched, skipped = [], [], []
    for e in entries:
        if e.n == 0:
            skipped.append(e)
            continue
        lo, hi = global_theta_bounds(e.n)
        if not lo <= e.value <= hi:
            raise ConflictError(
                f"n={e.n}: value {e.value} violates the universal bounds "
                f"[{lo}, {hi}]; refusing to ingest corrupted data"
            )
        existing = tbl.get(e.n)
        if existing is None:
            staged.append(e)
        elif existing == e.value:
            matched.append(e)
        else:
            raise ConflictError(
                f"n={e.n}: file value {e.value} disagrees with existing "
                f"{existing} ({tbl.provenance(e.n)})"
            )
    for e in staged:
        tbl.insert(e.n, e.value, PROVENANCE_INGESTED)
    return IngestResult(tuple(staged), tuple(matched), tuple(skipped))


def provenance_path(cache_path: Union[str, Path]) -> Path:
    return Path(f"{cache_path}.provenance")


def save_table(tbl: ThetaTable, path: Union[str, Path]) -> None:
    """Write the table as a b-file plus a provenance sidecar."""
    items = tbl.items_sorted()
    path = Path(path)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for n, entry in items:
            fh.write(f"{n} {entry.value}\n")
    with open(provenance_path(path), "w", encoding="utf-8", newline="\n") as fh:
        for n, entry in items:
            fh.write(f"{n} {entry.provenance}\n")


def _read_provenances(path: Path) -> dict[int, str]:
    tags: dict[int, str] = {}
    for lineno, raw in enumerate(_iter_lines(path), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2 or tokens[1] not in PROVENANCES:
            raise ParseError(f"bad provenance line {line!r}", line=lineno)
        tags[int(tokens[0])] = tokens[1]
    return tags


def load_table(path: Union[str, Path], tbl: Optional[ThetaTable] = None) -> ThetaTable:
    """Load a cache file into a table (a fresh builtin table by default).

    Entries get their sidecar provenance when the sidecar exists, and
    "ingested" otherwise. Values conflicting with entries already in the
    table raise ConflictError.
    """
    if tbl is None:
        tbl = ThetaTable(cache_path=path)
    entries = parse_bfile(path)
    sidecar = provenance_path(path)
    tags = _read_provenances(sidecar) if sidecar.exists() else {}
    for e in entries:
        if e.n == 0:
            continue
        tbl.insert(e.n, e.value, tags.get(e.n, PROVENANCE_INGESTED))
    return tbl


def emit_figure_data(tbl: ThetaTable, n_max: int, sink: Union[str, Path, TextIO],
                     digits: int = FIGURE_DIGITS_DEFAULT) -> None:
    """Write "n theta(n)^(1/n)" lines for n = 1..n_max, ascending.

    Roots are rounded to nearest at `digits` decimal places via exact
    integer arithmetic. Raises ValueUnavailable naming the first missing
    n; nothing is written in that case.
    """
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    rows = []
    for n in range(1, n_max + 1):
        value = tbl.get(n)
        if value is None:
            raise ValueUnavailable(f"no count for n={n}; figure needs all of 1..{n_max}")
        rows.append(f"{n} {decimal_nth_root(value, n, digits, ROUND_NEAREST).text}\n")
    if isinstance(sink, (str, Path)):
        with open(sink, "w", encoding="utf-8", newline="\n") as fh:
            fh.writelines(rows)
    else:
        sink.writelines(rows)
