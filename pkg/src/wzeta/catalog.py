"""Named, ready-to-use series and pairs.

The definitions live as expression text in data/catalog.txt and are
parsed at load time; hand-built equivalents below guard against parser
regressions (the bundled load silently falls back to them, a user-supplied
file never does). Series metadata — start index, sign pattern, limit
multiple and the measured digits-per-term rate — is code, not data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .algebra import LinearForm, Polynomial
from .errors import CatalogError, ParseError, StructureError
from .series import ALTERNATING, POSITIVE, SeriesSpec
from .terms import Domain, HyperTerm
from .wz import WZPair
from . import dsl

_N = LinearForm(1, 0, 0)
_K = LinearForm(0, 1, 0)

_PAIR_NAMES = ("s1", "s2")
_SERIES_NAMES = ("s1", "s2", "s3", "lhs_s1", "lhs_s2")
_REQUIRED = ("f_s1", "g_s1", "f_s2", "g_s2") + _SERIES_NAMES

# name -> (start index, sign pattern, limit multiple, digits/term or None)
_SERIES_META = {
    "s1": (1, ALTERNATING, Fraction(1), 0.602),
    "s2": (1, ALTERNATING, Fraction(1), 1.431),
    "s3": (0, ALTERNATING, Fraction(1), 1.806),
    "lhs_s1": (0, POSITIVE, Fraction(2), None),
    "lhs_s2": (0, POSITIVE, Fraction(2), None),
}
_PAIR_S = {"s1": 1, "s2": 2}


def pair_domain(s: int) -> Domain:
    """Verification region for a family-s pair: n ≥ 1, 0 ≤ k ≤ s·n − 1."""
    return Domain(n_min=1, constraints=(LinearForm(0, 1, 0), LinearForm(s, -1, -1)))


def _forms_product(*factors: tuple[LinearForm, int]) -> Polynomial:
    result = Polynomial.const(1)
    for form, power in factors:
        result = result * form.to_polynomial() ** power
    return result


def handbuilt_terms() -> dict[str, HyperTerm]:
    """The catalog entries built directly from the term model (no parser)."""
    k_plus_1 = LinearForm(0, 1, 1).to_polynomial()
    return {
        "f_s1": HyperTerm(
            _K,
            ((_K, 2), (LinearForm(1, -1, -1), 1), (LinearForm(1, 1, 1), -1)),
            poly_den=k_plus_1,
        ),
        "g_s1": HyperTerm(
            _K,
            ((_K, 2), (LinearForm(1, -1, 0), 1), (LinearForm(1, 1, 1), -1)),
            poly_den=_forms_product((LinearForm(1, 0, 1), 2)),
            constant=Fraction(2),
        ),
        "f_s2": HyperTerm(
            _K,
            ((_K, 2), (LinearForm(2, -1, -1), 1), (LinearForm(2, 1, 1), -1)),
            poly_den=k_plus_1,
        ),
        "g_s2": HyperTerm(
            _K,
            ((_K, 2), (LinearForm(2, -1, 0), 1), (LinearForm(2, 1, 2), -1)),
            poly_num=_forms_product((LinearForm(4, 0, 3), 1))
            * Polynomial({(2, 0): 4, (1, 0): 6, (0, 1): 1, (0, 0): 3}),
            poly_den=_forms_product((LinearForm(1, 0, 1), 2), (LinearForm(2, 0, 1), 2)),
            constant=Fraction(1, 2),
        ),
        "s1": HyperTerm(
            LinearForm(1, 0, 1),
            ((_N, 2), (LinearForm(2, 0, 0), -1)),
            poly_den=_forms_product((_N, 3)),
            constant=Fraction(5, 2),
        ),
        "s2": HyperTerm(
            LinearForm(1, 0, 1),
            ((_N, 3), (LinearForm(3, 0, 0), -1)),
            poly_num=Polynomial({(2, 0): 56, (1, 0): -32, (0, 0): 5}),
            poly_den=_forms_product((LinearForm(2, 0, -1), 2), (_N, 3)),
            constant=Fraction(1, 4),
        ),
        "s3": HyperTerm(
            _N,
            ((_N, 2), (LinearForm(2, 0, 0), 1), (LinearForm(4, 0, 0), -1)),
            poly_num=Polynomial(
                {(4, 0): 5265, (3, 0): 13878, (2, 0): 13761, (1, 0): 6120, (0, 0): 1040}
            ),
            poly_den=_forms_product(
                (LinearForm(4, 0, 1), 1),
                (LinearForm(4, 0, 3), 1),
                (LinearForm(1, 0, 1), 1),
                (LinearForm(3, 0, 1), 2),
                (LinearForm(3, 0, 2), 2),
            ),
            constant=Fraction(1, 72),
        ),
        "lhs_s1": HyperTerm(
            poly_den=_forms_product((LinearForm(1, 0, 1), 3)),
            constant=Fraction(2),
        ),
        "lhs_s2": HyperTerm(
            poly_num=_forms_product((LinearForm(4, 0, 3), 1))
            * Polynomial({(2, 0): 4, (1, 0): 6, (0, 0): 3}),
            poly_den=_forms_product((LinearForm(1, 0, 1), 3), (LinearForm(2, 0, 1), 3)),
            constant=Fraction(1, 4),
        ),
    }


@dataclass(frozen=True)
class Catalog:
    series: dict[str, SeriesSpec]
    pairs: dict[str, WZPair]

    def series_by_name(self, name: str) -> SeriesSpec:
        key = name.strip().lower()
        if key not in self.series:
            raise CatalogError(
                f"unknown series {name!r} (available: {', '.join(self.series)})"
            )
        return self.series[key]

    def pair_by_name(self, name: str) -> WZPair:
        key = name.strip().lower()
        if key not in self.pairs:
            raise CatalogError(
                f"unknown pair {name!r} (available: {', '.join(self.pairs)})"
            )
        return self.pairs[key]

    def listing(self) -> list[tuple[str, str, int, float | None]]:
        """(name, kind, start index, rate estimate) per entry, series first."""
        rows = [
            (spec.name, "series", spec.start_index, spec.rate_estimate)
            for spec in self.series.values()
        ]
        rows += [
            (pair.name, "pair", pair.check_domain.n_min, None)
            for pair in self.pairs.values()
        ]
        return rows


def parse_entries(text: str) -> dict[str, str]:
    """Split catalog text into a name -> expression-text mapping."""
    entries: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        name, sep, expr = line.partition("=")
        name = name.strip().lower()
        expr = expr.strip()
        if not sep or not name or not expr:
            raise CatalogError(f"line {lineno}: expected 'name = expression'")
        if not name.replace("_", "").isalnum():
            raise CatalogError(f"line {lineno}: bad entry name {name!r}")
        if name in entries:
            raise CatalogError(f"line {lineno}: duplicate entry {name!r}")
        entries[name] = expr
    return entries


def bundled_text() -> str:
    return resources.files("wzeta").joinpath("data/catalog.txt").read_text()


def load_catalog(path: str | None = None) -> Catalog:
    """Build the catalog from the bundled data file or a replacement.

    A replacement file must define exactly the bundled entry names (the
    metadata attached to each name is fixed). Parse failures in a user
    file are raised; in the bundled file they fall back to the hand-built
    terms so a parser bug cannot take the catalog down.
    """
    lenient = path is None
    text = bundled_text() if path is None else Path(path).read_text()
    entries = parse_entries(text)

    missing = [name for name in _REQUIRED if name not in entries]
    if missing:
        raise CatalogError(f"catalog is missing entries: {', '.join(missing)}")
    unknown = [name for name in entries if name not in _REQUIRED]
    if unknown:
        raise CatalogError(f"catalog has unknown entries: {', '.join(unknown)}")

    fallback = handbuilt_terms() if lenient else {}
    terms: dict[str, HyperTerm] = {}
    for name, expr in entries.items():
        try:
            terms[name] = dsl.parse_term(expr)
        except (ParseError, StructureError):
            if not lenient:
                raise
            terms[name] = fallback[name]

    series = {}
    for name in _SERIES_NAMES:
        start, pattern, multiple, rate = _SERIES_META[name]
        series[name] = SeriesSpec(
            name=name,
            components=(terms[name],),
            start_index=start,
            sign_pattern=pattern,
            zeta3_multiple=multiple,
            rate_estimate=rate,
        )
    pairs = {
        name: WZPair(
            name=name,
            f=terms[f"f_{name}"],
            g=terms[f"g_{name}"],
            s=_PAIR_S[name],
            check_domain=pair_domain(_PAIR_S[name]),
        )
        for name in _PAIR_NAMES
    }
    return Catalog(series=series, pairs=pairs)
