"""Line-oriented input documents for germs, umbrella projections and motions.

The grammar is spelled out in docs/input-format.md.  A document is a list
of ``key: value`` lines plus ``term`` lines; ``#`` starts a comment.

    mode: germ
    order: 4
    term 1 1 1 1        # component, i, j, coefficient of u^i v^j
    term 2 2 0 1/2

Numbers are integers or ``p/q`` rationals.  A decimal anywhere marks the
whole document as floating, and floating documents only ever reach the
floating pipeline.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from sharksfin.applications import MotionSpec, UmbrellaForm, motion_trajectory_jet, whitney_direct_jet
from sharksfin.jets import FLOAT, Jet2, JetError, MapJet2

__all__ = [
    "DocumentError",
    "InputDocument",
    "MODES",
    "parse_document",
    "read_document",
    "format_number",
]

MODES = ("germ", "umbrella", "motion")
UMBRELLA_KEYS = ("c3", "d20", "d11", "d02", "d30", "d21", "d12", "d03")
MOTION_KEYS = ("a1", "a2", "p", "b1", "b2", "q", "omega")
DEFAULT_ORDER = 4
MAX_ORDER = 12

_RATIONAL = re.compile(r"[+-]?\d+(/\d+)?\Z")


class DocumentError(ValueError):
    """Malformed input document."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def parse_number(text: str, line: int | None = None):
    """Fraction for integer or p/q tokens, float for decimals."""
    if _RATIONAL.match(text):
        try:
            return Fraction(text)
        except ZeroDivisionError:
            raise DocumentError(f"zero denominator in {text!r}", line) from None
    try:
        x = float(text)
    except ValueError:
        raise DocumentError(f"not a number: {text!r}", line) from None
    if not math.isfinite(x):
        raise DocumentError(f"non-finite number {text!r}", line)
    return x


def format_number(x) -> str:
    if isinstance(x, float):
        return repr(x)
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class InputDocument:
    """Parsed document; ``terms`` holds (component, i, j, value), sorted."""

    mode: str
    order: int | None = None
    terms: tuple = ()
    params: tuple = ()  # (key, value) for umbrella, (key, tuple of values) for motion

    @property
    def floating(self) -> bool:
        vals = [t[3] for t in self.terms]
        for _, v in self.params:
            vals.extend(v if isinstance(v, tuple) else (v,))
        return any(isinstance(v, float) for v in vals)

    def param(self, key: str, default=None):
        return dict(self.params).get(key, default)

    def to_text(self) -> str:
        lines = [f"mode: {self.mode}"]
        if self.order is not None:
            lines.append(f"order: {self.order}")
        for c, i, j, v in self.terms:
            lines.append(f"term {c} {i} {j} {format_number(v)}")
        for key, v in self.params:
            if isinstance(v, tuple):
                lines.append(f"{key}: " + ", ".join(format_number(x) for x in v))
            else:
                lines.append(f"{key}: {format_number(v)}")
        return "\n".join(lines) + "\n"

    # -- builders -------------------------------------------------------------

    def umbrella(self, floating: bool = False) -> UmbrellaForm:
        self._expect("umbrella")
        vals = {k: v for k, v in self.params}
        if floating:
            vals = {k: float(v) for k, v in vals.items()}
        try:
            return UmbrellaForm(**vals)
        except (TypeError, ValueError) as exc:
            raise DocumentError(str(exc)) from None

    def motion(self, floating: bool = False) -> MotionSpec:
        self._expect("motion")
        vals = {k: v for k, v in self.params}
        if floating:
            vals = {k: tuple(float(x) for x in v) for k, v in vals.items()}
        try:
            return MotionSpec(**vals)
        except (TypeError, ValueError) as exc:
            raise DocumentError(str(exc)) from None

    def germ(self, order: int | None = None, floating: bool = False) -> MapJet2:
        """The map jet described by the document, in any of the three modes."""
        n = order or self.order or DEFAULT_ORDER
        if self.mode == "umbrella":
            f = whitney_direct_jet(self.umbrella(floating), n)
        elif self.mode == "motion":
            f = motion_trajectory_jet(self.motion(floating), n)
        else:
            own = self.order or n
            comps = [{}, {}]
            for c, i, j, v in self.terms:
                comps[c - 1][(i, j)] = float(v) if floating else v
            kind = FLOAT if floating or self.floating else None
            try:
                f = MapJet2(Jet2(own, comps[0], kind=kind), Jet2(own, comps[1], kind=kind))
            except JetError as exc:
                raise DocumentError(str(exc)) from None
            if n < own:
                f = f.truncate(n)
            elif n > own:
                f = f.pad(n)
        return f.to_float() if floating else f

    def _expect(self, mode: str) -> None:
        if self.mode != mode:
            raise DocumentError(f"document mode is {self.mode!r}, not {mode!r}")


def _strip(raw: str) -> str:
    return raw.split("#", 1)[0].strip()


def parse_document(text: str) -> InputDocument:
    mode = None
    order = None
    terms: dict = {}
    params: dict = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = _strip(raw)
        if not line:
            continue
        if line.startswith("term") and (len(line) == 4 or line[4].isspace()):
            parts = line.split()
            if len(parts) != 5:
                raise DocumentError("term needs: term <component> <i> <j> <coefficient>", lineno)
            try:
                c, i, j = int(parts[1]), int(parts[2]), int(parts[3])
            except ValueError:
                raise DocumentError("component and exponents must be integers", lineno) from None
            if c not in (1, 2):
                raise DocumentError(f"component must be 1 or 2, got {c}", lineno)
            if i < 0 or j < 0:
                raise DocumentError("exponents must be nonnegative", lineno)
            if (c, i, j) in terms:
                raise DocumentError(f"duplicate term {c} {i} {j}", lineno)
            terms[(c, i, j)] = (parse_number(parts[4], lineno), lineno)
            continue
        key, sep, value = line.partition(":")
        key, value = key.strip(), value.strip()
        if not sep or not key:
            raise DocumentError(f"cannot parse {raw.strip()!r}", lineno)
        if key == "mode":
            if mode is not None:
                raise DocumentError("mode given twice", lineno)
            if value not in MODES:
                raise DocumentError(f"unknown mode {value!r}", lineno)
            mode = value
        elif key == "order":
            if order is not None:
                raise DocumentError("order given twice", lineno)
            try:
                order = int(value)
            except ValueError:
                raise DocumentError(f"order must be an integer, got {value!r}", lineno) from None
            if not 1 <= order <= MAX_ORDER:
                raise DocumentError(f"order must be between 1 and {MAX_ORDER}", lineno)
        else:
            if key in params:
                raise DocumentError(f"{key} given twice", lineno)
            tokens = [t for t in re.split(r"[,\s]+", value) if t]
            if not tokens:
                raise DocumentError(f"{key} has no value", lineno)
            params[key] = ([parse_number(t, lineno) for t in tokens], lineno)
    if mode is None:
        raise DocumentError("missing 'mode:' line")
    if mode == "germ":
        return _finish_germ(order, terms, params)
    if terms:
        line = min(ln for _, ln in terms.values())
        raise DocumentError("term lines are only allowed in germ documents", line)
    if mode == "umbrella":
        return _finish_umbrella(order, params)
    return _finish_motion(order, params)


def _finish_germ(order, terms, params) -> InputDocument:
    if params:
        key, (_, line) = next(iter(params.items()))
        raise DocumentError(f"unexpected key {key!r} in a germ document", line)
    if order is None:
        raise DocumentError("germ documents need an 'order:' line")
    for (c, i, j), (_, line) in terms.items():
        if i + j > order:
            raise DocumentError(f"term of degree {i + j} exceeds order {order}", line)
        if i + j == 0:
            raise DocumentError("germs must vanish at the origin (no constant terms)", line)
    out = tuple(sorted((c, i, j, v) for (c, i, j), (v, _) in terms.items()))
    return InputDocument("germ", order, out)


def _finish_umbrella(order, params) -> InputDocument:
    out = []
    for key, (vals, line) in params.items():
        if key not in UMBRELLA_KEYS:
            raise DocumentError(f"unexpected key {key!r} in an umbrella document", line)
        if len(vals) != 1:
            raise DocumentError(f"{key} takes a single number", line)
    for key in ("c3", "d20", "d02"):
        if key not in params:
            raise DocumentError(f"umbrella documents need {key}")
    for key in UMBRELLA_KEYS:
        if key in params:
            out.append((key, params[key][0][0]))
    return InputDocument("umbrella", order, (), tuple(out))


def _finish_motion(order, params) -> InputDocument:
    out = []
    for key, (vals, line) in params.items():
        if key not in MOTION_KEYS:
            raise DocumentError(f"unexpected key {key!r} in a motion document", line)
        if key == "omega" and len(vals) != 2:
            raise DocumentError("omega takes two coordinates", line)
    if "omega" not in params:
        raise DocumentError("motion documents need omega")
    for key in MOTION_KEYS:
        if key in params:
            out.append((key, tuple(params[key][0])))
    return InputDocument("motion", order, (), tuple(out))


def read_document(path) -> InputDocument:
    with open(path, encoding="utf-8") as fh:
        return parse_document(fh.read())
