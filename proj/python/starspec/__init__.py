"""Forward and inverse spectral problems for star graphs of Stieltjes strings.

Numbers go in as ``Fraction``, ``int`` or strings such as ``"3/2"`` and come
back as ``Fraction``. Graphs, spectra and plans use the same JSON documents as
the command line tool, passed as dicts or JSON text.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Iterable, Mapping

from . import _core
from ._core import StarspecError

__all__ = [
    "StarspecError",
    "ValidationFailed",
    "forward",
    "inverse_center",
    "inverse_pendant",
    "validate",
    "verify_roundtrip",
    "matrix",
    "cf_expand",
    "cf_to_ratfun",
]


class ValidationFailed(ValueError):
    """The spectral data violate a solvability condition; ``report`` holds the details."""

    def __init__(self, report: dict):
        super().__init__("; ".join(v["message"] for v in report.get("violations", [])) or "invalid input")
        self.report = report


def _text(doc: Any) -> str:
    if doc is None:
        return ""
    if isinstance(doc, str):
        return doc
    return json.dumps(doc, default=str)


def _strs(values: Iterable[Any] | None) -> list[str]:
    return [str(Fraction(v)) if not isinstance(v, str) else v for v in (values or [])]


def _run(command: str, *, graph=None, spectra=None, plan=None, main_length=None, lengths=None,
         raise_invalid=True, **options) -> dict:
    status, output, error = _core.run_job(
        command,
        graph=_text(graph),
        spectra=_text(spectra),
        plan=_text(plan),
        main_length=None if main_length is None else str(main_length),
        lengths=_strs(lengths),
        **options,
    )
    if status == 1:
        err = json.loads(error)["error"]
        exc = StarspecError(err["message"])
        exc.code = err["code"]
        raise exc
    result = json.loads(output)
    if status == 2 and raise_invalid:
        raise ValidationFailed(result)
    return result


def forward(graph: Mapping | str, *, emit_polys: bool = False, digits: int = 0) -> dict:
    return _run("forward", graph=graph, emit_polys=emit_polys, digits=digits)


def inverse_center(spectra: Mapping | str, lengths=None, plan=None, *, enumerate: bool = False) -> dict:
    return _run("inverse-center", spectra=spectra, lengths=lengths, plan=plan, enumerate=enumerate)


def inverse_pendant(spectra: Mapping | str, main_length=None, lengths=None, plan=None) -> dict:
    return _run("inverse-pendant", spectra=spectra, main_length=main_length, lengths=lengths, plan=plan)


def validate(spectra: Mapping | str, main_length=None, lengths=None) -> dict:
    """Returns the report; ``report["valid"]`` is False instead of raising."""
    return _run("validate", spectra=spectra, main_length=main_length, lengths=lengths, raise_invalid=False)


def verify_roundtrip(graph=None, spectra=None, plan=None, main_length=None, lengths=None) -> dict:
    return _run("verify-roundtrip", graph=graph, spectra=spectra, plan=plan, main_length=main_length,
                lengths=lengths, raise_invalid=False)


def matrix(graph: Mapping | str) -> dict:
    return _run("matrix", graph=graph, raise_invalid=False)


def cf_expand(num: Iterable[Any], den: Iterable[Any]) -> tuple[list[Fraction], list[Fraction]]:
    """Coefficients (a_0..a_p, b_1..b_p) of num/den; polynomials lowest degree first."""
    a, b = _core.cf_expand(_strs(num), _strs(den))
    return [Fraction(x) for x in a], [Fraction(x) for x in b]


def cf_to_ratfun(a: Iterable[Any], b: Iterable[Any]) -> tuple[list[Fraction], list[Fraction]]:
    num, den = _core.cf_to_ratfun(_strs(a), _strs(b))
    return [Fraction(x) for x in num], [Fraction(x) for x in den]
