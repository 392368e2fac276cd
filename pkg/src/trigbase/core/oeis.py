"""OEIS b-file client with an offline-first cache.

A sequence is looked up in the fixtures bundled with the package, then
in the local cache directory, and only then over HTTP. Generated
sequences are registered with the OEIS index their first term sits at.
"""

import logging
import os
import re
import tempfile
import urllib.error
import urllib.request
from dataclasses import dataclass
from enum import Enum
from importlib import resources
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

from .combinatorics import a014963, a053139, catalan, pyramidal
from .errors import Mismatch, NetworkError, NotAvailableOffline, ParseError
from .fourier import super_catalan
from .report import CheckReport

logger = logging.getLogger(__name__)

_ID_PATTERN = re.compile(r"^A(\d{6})$")


class FixtureSource(Enum):
    BUNDLED = "bundled"
    CACHED = "cached"
    NETWORK = "network"


@dataclass(frozen=True)
class SequenceFixture:
    """Terms a(offset), a(offset+1), ... of one OEIS entry."""

    oeis_id: str
    offset: int
    terms: Tuple[int, ...]
    source: FixtureSource

    def __post_init__(self):
        if not self.terms:
            raise ValueError(f"{self.oeis_id}: no terms")

    def term(self, index: int) -> int:
        return self.terms[index - self.offset]

    def head(self, count: int) -> "SequenceFixture":
        return SequenceFixture(self.oeis_id, self.offset, self.terms[:count], self.source)


def parse_oeis_id(oeis_id: str) -> int:
    """'A000108' -> 108.

    Raises:
        ValueError: if the id is not an A-number with six digits
    """
    match = _ID_PATTERN.match(oeis_id.strip().upper())
    if not match:
        raise ValueError(f"not an OEIS A-number: {oeis_id!r}")
    return int(match.group(1))


def bfile_name(number: int) -> str:
    return f"b{number:06d}.txt"


def bundled_ids() -> List[str]:
    """A-numbers of the b-files shipped in trigbase.data.oeis, sorted."""
    names = (entry.name for entry in resources.files("trigbase.data.oeis").iterdir())
    return sorted(f"A{name[1:7]}" for name in names if re.fullmatch(r"b\d{6}\.txt", name))


def parse_bfile(text: str, source: str = "<b-file>") -> Tuple[int, List[int]]:
    """Parse 'n a(n)' lines into (first index, terms).

    Blank lines and lines starting with '#' are skipped. Indices must be
    consecutive.

    Raises:
        ParseError: on a malformed line or an index gap
    """
    offset: Optional[int] = None
    terms: List[int] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(line_no, raw, source)
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(line_no, raw, source) from None
        if offset is None:
            offset = index
        elif index != offset + len(terms):
            raise ParseError(line_no, raw, source)
        terms.append(value)
    if offset is None:
        raise ParseError(0, "", source)
    return offset, terms


def format_bfile(offset: int, terms: List[int]) -> str:
    return "".join(f"{offset + k} {value}\n" for k, value in enumerate(terms))


class OeisClient:
    """Resolves sequences from bundled fixtures, the cache and the network."""

    def __init__(self, cache_dir: Optional[Path] = None, offline: bool = True,
                 base_url: str = "https://oeis.org", timeout: float = 10):
        self.cache_dir = Path(cache_dir).expanduser() if cache_dir is not None else None
        self.offline = offline
        self.base_url = base_url.rstrip("/")
        self.timeout = timeout

    @classmethod
    def from_settings(cls, settings) -> "OeisClient":
        return cls(settings.oeis.cache_dir, settings.oeis.offline,
                   settings.oeis.base_url, settings.oeis.timeout)

    def fetch(self, oeis_id: str, max_terms: Optional[int] = None,
              offline: Optional[bool] = None) -> SequenceFixture:
        """Return the sequence, truncated to max_terms if given.

        Raises:
            ValueError: if the id is malformed
            NotAvailableOffline: if offline and neither bundled nor cached
            NetworkError: if the HTTP request fails
            ParseError: if a b-file is malformed
        """
        number = parse_oeis_id(oeis_id)
        oeis_id = f"A{number:06d}"
        offline = self.offline if offline is None else offline

        fixture = self._load_bundled(oeis_id, number) or self._load_cached(oeis_id, number)
        if fixture is None:
            if offline:
                raise NotAvailableOffline(f"{oeis_id} is neither bundled nor cached")
            fixture = self._download(oeis_id, number)
        logger.debug(f"{oeis_id}: {len(fixture.terms)} terms from {fixture.source.value}")
        return fixture.head(max_terms) if max_terms is not None else fixture

    def _load_bundled(self, oeis_id: str, number: int) -> Optional[SequenceFixture]:
        entry = resources.files("trigbase.data.oeis").joinpath(bfile_name(number))
        if not entry.is_file():
            return None
        offset, terms = parse_bfile(entry.read_text(), f"bundled {bfile_name(number)}")
        return SequenceFixture(oeis_id, offset, tuple(terms), FixtureSource.BUNDLED)

    def _load_cached(self, oeis_id: str, number: int) -> Optional[SequenceFixture]:
        if self.cache_dir is None:
            return None
        path = self.cache_dir / bfile_name(number)
        if not path.is_file():
            return None
        offset, terms = parse_bfile(path.read_text(), str(path))
        return SequenceFixture(oeis_id, offset, tuple(terms), FixtureSource.CACHED)

    def _download(self, oeis_id: str, number: int) -> SequenceFixture:
        url = f"{self.base_url}/{oeis_id}/{bfile_name(number)}"
        logger.info(f"Fetching {url}")
        try:
            with urllib.request.urlopen(url, timeout=self.timeout) as response:
                text = response.read().decode("utf-8")
        except (urllib.error.URLError, OSError) as e:
            raise NetworkError(f"fetching {url} failed: {e}") from e
        offset, terms = parse_bfile(text, url)
        self._store(number, offset, terms)
        return SequenceFixture(oeis_id, offset, tuple(terms), FixtureSource.NETWORK)

    def _store(self, number: int, offset: int, terms: List[int]) -> None:
        """Write to a temporary file in cache_dir, then rename it into place."""
        if self.cache_dir is None:
            return
        try:
            self.cache_dir.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.cache_dir, prefix=".b", suffix=".tmp")
            with os.fdopen(fd, "w") as f:
                f.write(format_bfile(offset, terms))
            os.replace(tmp, self.cache_dir / bfile_name(number))
        except OSError as e:
            logger.warning(f"Could not cache b-file for A{number:06d}: {e}")


def fetch_sequence(oeis_id: str, max_terms: Optional[int] = None, offline: bool = True,
                   cache_dir: Optional[Path] = None) -> SequenceFixture:
    """Module-level shortcut for OeisClient(cache_dir, offline).fetch()."""
    return OeisClient(cache_dir, offline).fetch(oeis_id, max_terms)


# Registered generators

@dataclass(frozen=True)
class SequenceGenerator:
    """Internal sequence aligned to an OEIS entry.

    ``term(n)`` is a(n) in OEIS indexing for n >= start.
    """

    oeis_id: str
    description: str
    start: int
    term: Callable[[int], int]


def _triangle_position(n: int) -> Tuple[int, int]:
    row = 0
    while (row + 1) * (row + 2) // 2 <= n:
        row += 1
    return row, n - row * (row + 1) // 2


def _super_catalan_by_rows(n: int) -> int:
    row, col = _triangle_position(n)
    return super_catalan(row, col)


GENERATORS: Dict[str, SequenceGenerator] = {
    g.oeis_id: g
    for g in (
        SequenceGenerator("A005408", "pyramidal row i=1 (odd numbers)", 0, lambda n: pyramidal(1, n)),
        SequenceGenerator("A000290", "pyramidal row i=2 (squares)", 1, lambda n: pyramidal(2, n - 1)),
        SequenceGenerator("A000330", "pyramidal row i=3", 1, lambda n: pyramidal(3, n - 1)),
        SequenceGenerator("A002415", "pyramidal row i=4", 2, lambda n: pyramidal(4, n - 2)),
        SequenceGenerator("A005585", "pyramidal row i=5", 1, lambda n: pyramidal(5, n - 1)),
        SequenceGenerator("A014963", "constant terms of the zpread factors", 1, a014963),
        SequenceGenerator("A053139", "totient(n) - moebius(n)", 1, a053139),
        SequenceGenerator("A182411", "super Catalan matrix, lower triangle by rows", 0, _super_catalan_by_rows),
        SequenceGenerator("A000108", "Catalan numbers", 0, catalan),
    )
}


def generator_for(oeis_id: str) -> SequenceGenerator:
    oeis_id = f"A{parse_oeis_id(oeis_id):06d}"
    try:
        return GENERATORS[oeis_id]
    except KeyError:
        raise KeyError(f"no generator registered for {oeis_id}") from None


def crosscheck(fixture: SequenceFixture, generator: SequenceGenerator, count: int) -> CheckReport:
    """Compare the first ``count`` aligned terms.

    Alignment starts at the later of the fixture offset and the generator
    start.

    Raises:
        Mismatch: at the first OEIS index where the terms disagree
        ValueError: if the fixture has fewer than ``count`` aligned terms
    """
    first = max(fixture.offset, generator.start)
    available = fixture.offset + len(fixture.terms) - first
    if count > available:
        raise ValueError(f"{fixture.oeis_id}: only {available} aligned terms, {count} requested")
    report = CheckReport(f"crosscheck {fixture.oeis_id}", anchor=generator.description)
    for n in range(first, first + count):
        expected, got = fixture.term(n), generator.term(n)
        if not report.expect_equal(f"a({n})", expected, got):
            raise Mismatch(n, expected, got)
    return report


def crosscheck_id(oeis_id: str, count: int, client: Optional[OeisClient] = None) -> CheckReport:
    """Fetch and crosscheck a registered sequence."""
    client = client or OeisClient()
    generator = generator_for(oeis_id)
    fixture = client.fetch(generator.oeis_id)
    return crosscheck(fixture, generator, count)
