"""Local integer-sequence listings and alignment against engine values.

File format (one directive per line, ``#`` comments)::

    name A001108          # identifier
    target A              # sequence id
    index 2m-1            # optional; engine index as a function of m
    divide 1              # optional; engine value divided by this
    from 1                # first m the listing is aligned to
    align 1               # listing[k] compares with view(k - align + from)
    oeis no               # optional; marks a listing that is not an OEIS entry
    values 0 1 8 49 ...

Leading listing entries with ``k < align`` sit before the engine's domain;
they are recorded as skipped, never as passes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from importlib import resources

from .errors import DomainError, FixtureParseError
from .report import IdentityReport, merge
from .sequences import DOMAIN_START, SeqId, exact_div, seq_value

_INDEX = re.compile(r"^(\d*)m([+-]\d+)?$")


@dataclass(frozen=True)
class View:
    """m -> seq(step * m + offset) / divisor."""

    sid: SeqId
    step: int = 1
    offset: int = 0
    divisor: int = 1

    def index(self, m: int) -> int:
        return self.step * m + self.offset

    def value(self, m: int) -> int:
        return exact_div(seq_value(self.sid, self.index(m)), self.divisor)

    def describe(self) -> str:
        idx = "m" if (self.step, self.offset) == (1, 0) else f"{self.step}m{self.offset:+d}"
        tail = f"/{self.divisor}" if self.divisor != 1 else ""
        return f"{self.sid.value}[{idx}]{tail}"


@dataclass(frozen=True)
class SequenceFixture:
    name: str
    alignment: int
    values: tuple[int, ...]
    target: View | None = None
    start: int | None = None
    oeis: bool = True

    def __post_init__(self) -> None:
        if not self.values:
            raise ValueError(f"fixture {self.name}: values must be nonempty")


def parse_fixture(text: str) -> SequenceFixture:
    fields: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key not in ("name", "align", "values", "target", "index", "divide", "from", "oeis"):
            raise FixtureParseError(lineno, f"unknown directive {key!r}")
        if key in fields:
            raise FixtureParseError(lineno, f"{key} given twice")
        if not rest:
            raise FixtureParseError(lineno, f"{key} needs an argument")
        fields[key] = rest
        fields[f"_{key}_line"] = str(lineno)

    def line_of(key: str) -> int:
        return int(fields.get(f"_{key}_line", 0))

    for key in ("name", "align", "values"):
        if key not in fields:
            raise FixtureParseError(0, f"missing {key}")
    try:
        values = tuple(int(v) for v in fields["values"].split())
    except ValueError as exc:
        raise FixtureParseError(line_of("values"), f"bad integer: {exc}") from None
    try:
        align = int(fields["align"])
    except ValueError:
        raise FixtureParseError(line_of("align"), "align must be an integer") from None

    target = None
    if "target" in fields:
        try:
            sid = SeqId(fields["target"])
        except ValueError:
            raise FixtureParseError(line_of("target"), f"unknown sequence {fields['target']!r}") from None
        step, offset = 1, 0
        if "index" in fields:
            m = _INDEX.match(fields["index"].replace(" ", ""))
            if not m:
                raise FixtureParseError(line_of("index"), "index must look like '2m-1'")
            step = int(m.group(1) or 1)
            if step < 1:
                raise FixtureParseError(line_of("index"), "index step must be positive")
            offset = int(m.group(2) or 0)
        divisor = int(fields.get("divide", "1"))
        target = View(sid, step, offset, divisor)
    start = int(fields["from"]) if "from" in fields else None
    oeis = fields.get("oeis", "yes") != "no"
    return SequenceFixture(fields["name"], align, values, target, start, oeis)


def serialize_fixture(fx: SequenceFixture) -> str:
    lines = [f"name {fx.name}"]
    if fx.target is not None:
        lines.append(f"target {fx.target.sid.value}")
        if (fx.target.step, fx.target.offset) != (1, 0):
            lines.append(f"index {fx.target.step}m{fx.target.offset:+d}")
        if fx.target.divisor != 1:
            lines.append(f"divide {fx.target.divisor}")
    if fx.start is not None:
        lines.append(f"from {fx.start}")
    lines.append(f"align {fx.alignment}")
    if not fx.oeis:
        lines.append("oeis no")
    lines.append("values " + " ".join(str(v) for v in fx.values))
    return "\n".join(lines) + "\n"


def _as_view(view: View | SeqId | str | None, fx: SequenceFixture) -> View:
    if view is None:
        if fx.target is None:
            raise ValueError(f"fixture {fx.name} has no target; pass a sequence id")
        return fx.target
    if isinstance(view, View):
        return view
    return View(SeqId(view))


def _first_m(view: View) -> int:
    m = 0
    while view.index(m) < DOMAIN_START[view.sid]:
        m += 1
    return m


def fixture_check(fx: SequenceFixture, view: View | SeqId | str | None = None,
                  start: int | None = None) -> IdentityReport:
    """Compare every aligned listing entry with the engine."""
    v = _as_view(view, fx)
    m0 = start if start is not None else (fx.start if fx.start is not None and view is None else _first_m(v))
    if v.index(m0) < DOMAIN_START[v.sid]:
        raise DomainError(f"fixture {fx.name}: index {v.index(m0)} outside the domain of {v.sid.value}")
    report = IdentityReport(f"fixture {fx.name}", m0, m0 + len(fx.values) - 1 - fx.alignment)
    for k, listed in enumerate(fx.values):
        m = k - fx.alignment + m0
        if k < fx.alignment:
            report.skipped.append(f"{fx.name}[{k}]={listed} precedes the domain of {v.describe()}")
            continue
        try:
            engine = v.value(m)
        except ArithmeticError:
            engine = None
        report.add(f"{fx.name}[{k}] = {v.describe()} at m={m}", m, listed, engine)
    return report


def shipped_fixtures() -> list[SequenceFixture]:
    """All listings bundled with the package, sorted by name."""
    root = resources.files("tristrip") / "data" / "fixtures"
    out = [parse_fixture(p.read_text(encoding="utf-8")) for p in root.iterdir() if p.name.endswith(".seq")]
    out.sort(key=lambda f: f.name)
    return out


def check_shipped() -> IdentityReport:
    reports = [fixture_check(fx) for fx in shipped_fixtures()]
    return merge("fixtures", reports)
