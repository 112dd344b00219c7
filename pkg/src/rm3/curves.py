"""Plane curve models and the shipped fixture files.

Fixtures live in the package ``data`` directory; the ``RM3_FIXTURES``
environment variable points at an alternative directory with the same
file names.
"""

from __future__ import annotations

import csv
import os
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .errors import InputError
from .exact import MultiPoly, parse_poly

QUARTIC_FILE = "quartic.txt"
TABLE_FILE = "table1.tsv"


def fixture_path(name):
    """Path of a fixture file, honouring RM3_FIXTURES."""
    override = os.environ.get("RM3_FIXTURES")
    if override:
        return Path(override) / name
    return Path(str(resources.files("rm3") / "data" / name))


@dataclass(frozen=True)
class PlaneCurve:
    """Homogeneous ternary form with integer coefficients, F(x, y, z) = 0.

    ``source`` is the form as read (rational coefficients allowed); ``form``
    is the primitive integer multiple used for reduction mod p.
    """

    form: MultiPoly
    source: MultiPoly
    name: str = ""

    @classmethod
    def from_poly(cls, F, name=""):
        if not isinstance(F, MultiPoly):
            raise InputError("curve must be a polynomial")
        F = F.embed(("x", "y", "z")) if set(F.used_variables()) <= {"x", "y", "z"} else None
        if F is None:
            raise InputError("plane curve must be a form in x, y, z")
        if not F:
            raise InputError("zero polynomial is not a curve")
        degrees = {sum(e) for e in F.terms}
        if len(degrees) != 1:
            raise InputError("plane curve polynomial is not homogeneous")
        return cls(form=F.primitive(), source=F, name=name)

    @property
    def degree(self):
        return self.form.degree()

    @property
    def scale(self):
        """Rational c with form = c * source."""
        e, c = self.form.leading_term()
        return Fraction(c) / self.source.terms[e]

    def coefficients(self):
        """``{(i, j, l): int}`` for x^i y^j z^l."""
        return dict(self.form.terms)

    def reduce(self, p):
        """Coefficients mod p; raises InputError when the form vanishes mod p."""
        red = {e: c % p for e, c in self.form.terms.items() if c % p}
        if not red:
            raise InputError(f"curve reduces to zero mod {p}")
        return red

    def dehomogenize(self):
        """Affine model F(x, y, 1) as a polynomial in (x, y)."""
        return MultiPoly(("x", "y"), {(i, j): c for (i, j, _), c in self.form.terms.items()})


def load_curve(path=None):
    """Read a plane curve from the text format; default is the shipped quartic."""
    path = Path(path) if path is not None else fixture_path(QUARTIC_FILE)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"cannot read curve file {path}: {exc}") from None
    return PlaneCurve.from_poly(parse_poly(text, ("x", "y", "z")), name=path.name)


def default_quartic():
    return load_curve()


@dataclass(frozen=True)
class TableRow:
    p: int
    u: int
    v: int
    w: int
    trace: int

    @property
    def alpha(self):
        return (self.u, self.v, self.w)


def load_table(path=None):
    """Rows of the shipped factorization table, keyed by prime."""
    path = Path(path) if path is not None else fixture_path(TABLE_FILE)
    try:
        with open(path, newline="") as fh:
            reader = csv.DictReader(fh, delimiter="\t")
            rows = {}
            for rec in reader:
                row = TableRow(*(int(rec[k]) for k in ("p", "u", "v", "w", "trace")))
                rows[row.p] = row
    except (OSError, KeyError, ValueError, TypeError) as exc:
        raise InputError(f"malformed table file {path}: {exc}") from None
    return rows
