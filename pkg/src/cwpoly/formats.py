"""Reading and writing ideals, multicomplexes and orders (JSON and plain text)."""
from __future__ import annotations

import json
from typing import Sequence

from . import monomial as mono
from .ideal import MonomialIdeal
from .monomial import ExponentVector
from .multicomplex import Multicomplex, from_facet_candidates


class FormatError(ValueError):
    pass


def ideal_to_json(I: MonomialIdeal) -> dict:
    return {"n": I.n, "generators": [list(g) for g in I.gens]}


def ideal_from_json(obj: dict) -> MonomialIdeal:
    try:
        n = int(obj["n"])
        rows = obj["generators"]
    except (KeyError, TypeError, ValueError) as exc:
        raise FormatError(f"not an ideal object: {exc}") from None
    try:
        return MonomialIdeal.from_vectors(n, rows)
    except (TypeError, ValueError) as exc:
        raise FormatError(str(exc)) from None


def multicomplex_to_json(M: Multicomplex) -> dict:
    return {"n": M.n, "facets": [list(f) for f in M.facets]}


def multicomplex_from_json(obj: dict) -> Multicomplex:
    try:
        return from_facet_candidates(int(obj["n"]), obj["facets"])
    except (KeyError, TypeError) as exc:
        raise FormatError(f"not a multicomplex object: {exc}") from None


def ideal_to_text(I: MonomialIdeal) -> str:
    return "".join(mono.format_monomial(g) + "\n" for g in I.gens)


def _text_lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]


def ideal_from_text(text: str, n: int | None = None) -> MonomialIdeal:
    lines = _text_lines(text)
    if not lines:
        raise FormatError("no monomials in input")
    if n is None:
        n = max(max(mono.max_index(ln) for ln in lines), 1)
    try:
        return MonomialIdeal.from_vectors(n, (mono.parse_monomial(ln, n) for ln in lines))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def parse_ideal(text: str, n: int | None = None) -> MonomialIdeal:
    """Ideal JSON, multicomplex JSON (read as its facet ideal) or monomial lines."""
    s = text.strip()
    if not s:
        raise FormatError("empty input")
    if s[0] in "{[":
        try:
            obj = json.loads(s)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc}") from None
        if isinstance(obj, dict) and "facets" in obj:
            try:
                return MonomialIdeal.from_vectors(int(obj["n"]), obj["facets"])
            except (KeyError, TypeError, ValueError) as exc:
                raise FormatError(str(exc)) from None
        if not isinstance(obj, dict):
            raise FormatError("expected a JSON object with 'n' and 'generators'")
        return ideal_from_json(obj)
    return ideal_from_text(s, n)


def parse_multicomplex(text: str) -> Multicomplex:
    """Multicomplex JSON, or anything :func:`parse_ideal` accepts (taken as facets)."""
    s = text.strip()
    if s.startswith("{"):
        try:
            obj = json.loads(s)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc}") from None
        if isinstance(obj, dict) and "facets" in obj:
            return multicomplex_from_json(obj)
    I = parse_ideal(s)
    return from_facet_candidates(I.n, I.gens)


def parse_order(text: str, n: int) -> list[ExponentVector]:
    """An order as order JSON, a JSON list of rows, or one monomial per line."""
    s = text.strip()
    if not s:
        raise FormatError("empty order")
    if s[0] in "{[":
        try:
            obj = json.loads(s)
        except json.JSONDecodeError as exc:
            raise FormatError(f"invalid JSON: {exc}") from None
        rows = obj.get("order") if isinstance(obj, dict) else obj
        if not isinstance(rows, list):
            raise FormatError("order JSON needs an 'order' list")
        try:
            out = [mono.vector(r) for r in rows]
        except (TypeError, ValueError) as exc:
            raise FormatError(str(exc)) from None
        if any(len(r) != n for r in out):
            raise FormatError(f"order rows must have length {n}")
        return out
    try:
        return [mono.parse_monomial(ln, n) for ln in _text_lines(s)]
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=False, separators=(", ", ": "))


def order_to_text(order: Sequence[Sequence[int]]) -> str:
    return "".join(mono.format_monomial(u) + "\n" for u in order)
