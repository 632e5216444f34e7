"""The index catalog: descriptor algebra, name registry, and evaluation.

A catalog index is addressed by five coordinates:

  source       which functional supplies endpoint values (7 choices)
  variant      per-edge kernel over endpoint values a, b:
                 1: a^2 + b^2 + a*b
                 2: a^2 + b^2 - a*b
                 3: a - b + a*b with a the larger endpoint value (= |a-b| + a*b)
                 4: |a-b| * a*b
  transform    identity, hyper (square), inverse (reciprocal), general (power a)
  aggregation  sum or product over edges
  form         scalar value, or polynomial with one x^kernel term per edge

giving 7 * 4 * 4 * 2 * 2 = 448 registry names such as RL1, HBRL2, MIRRL1,
RLKV3exp.  Orientation of variant 3 is canonical larger-endpoint-first so the
index is well defined on undirected edges.  Fourteen standalone indices
(degree exponentials, closeness and maximum-deviation families, Heronian)
live beside the catalog under their own names.

Evaluation is pure: exact rationals throughout, with floats only where the
mathematics leaves the rationals (non-integer general powers, square roots
with non-square radicands).
"""

from __future__ import annotations

import difflib
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import InverseUndefined, UnknownIndexName, UnsupportedEvaluation
from .exact import ExpPoly, Rat, general_pow, sqrt_sum
from .functionals import closeness, cl_degrees, edge_endpoint_values
from .graph import Graph

SOURCES = ("plain", "banhatti", "revan", "domination", "temperature", "kv", "nbd")
TRANSFORMS = ("identity", "hyper", "inverse", "general")
AGGREGATIONS = ("sum", "product")
FORMS = ("value", "exponential")

_SOURCE_STEM = {
    "plain": "RL",
    "banhatti": "BRL",
    "revan": "RRL",
    "domination": "DRL",
    "temperature": "TRL",
    "kv": "RLKV",
    "nbd": "NRL",
}
_STEM_SOURCE = {stem: src for src, stem in _SOURCE_STEM.items()}
_TRANSFORM_PREFIX = {"identity": "", "hyper": "H", "inverse": "I", "general": "G"}
_PREFIX_TRANSFORM = {prefix: t for t, prefix in _TRANSFORM_PREFIX.items()}


@dataclass(frozen=True)
class Descriptor:
    """Coordinates of one catalog index."""

    source: str
    variant: int
    transform: str
    aggregation: str
    form: str

    def __post_init__(self):
        if self.source not in SOURCES:
            raise ValueError(f"bad source {self.source!r}")
        if self.variant not in (1, 2, 3, 4):
            raise ValueError(f"bad variant {self.variant!r}")
        if self.transform not in TRANSFORMS:
            raise ValueError(f"bad transform {self.transform!r}")
        if self.aggregation not in AGGREGATIONS:
            raise ValueError(f"bad aggregation {self.aggregation!r}")
        if self.form not in FORMS:
            raise ValueError(f"bad form {self.form!r}")

    @property
    def name(self) -> str:
        return (
            ("M" if self.aggregation == "product" else "")
            + _TRANSFORM_PREFIX[self.transform]
            + _SOURCE_STEM[self.source]
            + str(self.variant)
            + ("exp" if self.form == "exponential" else "")
        )


SPECIAL_NAMES = (
    "RL5", "RL6", "RL7", "RL8", "RL9", "RL10", "RL11", "RL12",
    "RL13", "RL14", "RL15", "RL16", "RL17", "HeronianRL",
)

_SPECIAL_ALIASES = {
    "C1": "RL7",
    "C2": "RL8",
    "FC": "RL9",
    "CSO": "RL10",
    "CN": "RL11",
    "AC": "RL12",
    "FRL": "RL15",
    "SCL": "RL16",
    "NCL": "RL17",
    "HRL": "HeronianRL",
    "HERONIANRL": "HeronianRL",
    "HERONIAN": "HeronianRL",
}

_CATALOG_RE = re.compile(r"^(M?)(H|I|G)?(RLKV|BRL|RRL|DRL|TRL|NRL|RL)([1-4])(EXP)?$")
_PARAM_RE = re.compile(r"^(?P<base>[A-Z0-9]+?)\(A=(?P<a>-?\d+(?:/\d+)?)\)$")


def registry_names() -> list[str]:
    """All 448 catalog names in canonical order."""
    names = []
    for source in SOURCES:
        for variant in (1, 2, 3, 4):
            for transform in TRANSFORMS:
                for aggregation in AGGREGATIONS:
                    for form in FORMS:
                        names.append(Descriptor(source, variant, transform, aggregation, form).name)
    return names


def all_index_names() -> list[str]:
    return registry_names() + list(SPECIAL_NAMES)


def lookup(name: str) -> tuple[Union[Descriptor, str], Optional[Rat]]:
    """Resolve a registry name (case-insensitive, underscores ignored).

    Returns (Descriptor, a) for catalog entries, where ``a`` is the general
    power parameter if the name carried one (``GRL1(a=3)`` style), or
    (special_name, None) for the standalone indices.
    """
    cleaned = re.sub(r"[\s_]+", "", name).upper()
    a_param: Optional[Rat] = None
    with_param = _PARAM_RE.match(cleaned)
    if with_param:
        cleaned = with_param.group("base")
        num, _, den = with_param.group("a").partition("/")
        a_param = Fraction(int(num), int(den) if den else 1)

    for special in SPECIAL_NAMES:
        if cleaned == special.upper():
            return special, a_param
    if cleaned in _SPECIAL_ALIASES:
        return _SPECIAL_ALIASES[cleaned], a_param

    match = _CATALOG_RE.match(cleaned)
    if match:
        mult, prefix, stem, digit, exp = match.groups()
        return (
            Descriptor(
                source=_STEM_SOURCE[stem],
                variant=int(digit),
                transform=_PREFIX_TRANSFORM[prefix or ""],
                aggregation="product" if mult else "sum",
                form="exponential" if exp else "value",
            ),
            a_param,
        )

    candidates = [n.upper() for n in all_index_names()]
    close = difflib.get_close_matches(cleaned, candidates, n=1)
    raise UnknownIndexName(name, suggestion=close[0] if close else None)


def kernel(variant: int, a, b):
    """The per-edge binary form for one kernel variant."""
    if variant == 1:
        return a * a + b * b + a * b
    if variant == 2:
        return a * a + b * b - a * b
    if variant == 3:
        hi, lo = (a, b) if a >= b else (b, a)
        return hi - lo + hi * lo
    if variant == 4:
        return abs(a - b) * a * b
    raise ValueError(f"bad variant {variant!r}")


def _transformed_kernels(g: Graph, d: Descriptor, a_param: Optional[Rat]):
    if d.transform == "general":
        if a_param is None:
            raise UnsupportedEvaluation(
                f"{d.name} needs its power parameter, e.g. {d.name}(a=3)"
            )
        a_param = Fraction(a_param)
    out = []
    for u, v, val_u, val_v in edge_endpoint_values(g, d.source):
        k = kernel(d.variant, val_u, val_v)
        if d.transform == "identity":
            t = k
        elif d.transform == "hyper":
            t = k * k
        elif d.transform == "inverse":
            if k == 0:
                raise InverseUndefined((u, v))
            t = Fraction(1) / Fraction(k)
        else:
            if k == 0 and a_param < 0:
                raise InverseUndefined((u, v))
            t = general_pow(Fraction(k), a_param)
        out.append(t)
    return out


def evaluate_descriptor(g: Graph, d: Descriptor, a: Optional[Rat] = None):
    """Fold the transformed kernel over all edges of ``g``.

    Returns an exact Fraction (value form), an ExpPoly (exponential form),
    or a float when a non-integer general power forces one.
    """
    terms = _transformed_kernels(g, d, a)
    if d.form == "value":
        if d.aggregation == "sum":
            total = Fraction(0)
            for t in terms:
                total = total + t
            return total
        total = Fraction(1)
        for t in terms:
            total = total * t
        return total
    # Exponential form: exponents must stay rational.
    if any(isinstance(t, float) for t in terms):
        raise UnsupportedEvaluation(
            "exponential form needs rational exponents; "
            "non-integer general powers are value-form only"
        )
    if d.aggregation == "sum":
        return ExpPoly((t, 1) for t in terms)
    return ExpPoly.monomial(sum(terms, Fraction(0)), 1)


# --- standalone indices -------------------------------------------------------


def _special_rl5(g: Graph):
    # Orientation convention: smaller endpoint degree as base, larger as
    # exponent, so the undirected index is well defined.
    total = 0
    for u, v in g.edges:
        lo, hi = sorted((g.degrees[u], g.degrees[v]))
        total += lo**hi
    return Fraction(total)


def _special_rl6(g: Graph):
    total = 0
    for u, v in g.edges:
        du, dv = g.degrees[u], g.degrees[v]
        total += du**dv + dv**du
    return Fraction(total)


def _closeness_fold(g: Graph, per_edge):
    c = closeness(g)
    return sum((per_edge(c[u], c[v]) for u, v in g.edges), Fraction(0))


def _special_rl7(g: Graph):
    return _closeness_fold(g, lambda a, b: a + b)


def _special_rl8(g: Graph):
    return _closeness_fold(g, lambda a, b: a * b)


def _special_rl9(g: Graph):
    return _closeness_fold(g, lambda a, b: a * a + b * b)


def _special_rl10(g: Graph):
    c = closeness(g)
    return sqrt_sum(c[u] * c[u] + c[v] * c[v] for u, v in g.edges)


def _special_rl11(g: Graph):
    c = closeness(g)
    return sqrt_sum(c[u] + c[v] for u, v in g.edges)


def _special_rl12(g: Graph):
    return _closeness_fold(g, lambda a, b: abs(a - b))


def _cl_fold(g: Graph, per_edge):
    cl = cl_degrees(g)
    return Fraction(sum(per_edge(cl[u], cl[v]) for u, v in g.edges))


def _special_rl13(g: Graph):
    return _cl_fold(g, lambda a, b: a + b)


def _special_rl14(g: Graph):
    return _cl_fold(g, lambda a, b: a * b)


def _special_rl15(g: Graph):
    return _cl_fold(g, lambda a, b: a * a + b * b)


def _special_rl16(g: Graph):
    cl = cl_degrees(g)
    return sqrt_sum(Fraction(cl[u] * cl[u] + cl[v] * cl[v]) for u, v in g.edges)


def _special_rl17(g: Graph):
    cl = cl_degrees(g)
    return sqrt_sum(Fraction(cl[u] + cl[v]) for u, v in g.edges)


def _special_heronian(g: Graph):
    # Per-edge a + sqrt(ab) + b over plain degrees, as published (no 1/3).
    deg = g.degrees
    linear = Fraction(sum(deg[u] + deg[v] for u, v in g.edges))
    roots = sqrt_sum(Fraction(deg[u] * deg[v]) for u, v in g.edges)
    if isinstance(roots, float):
        return float(linear) + roots
    return linear + roots


_SPECIALS = {
    "RL5": _special_rl5,
    "RL6": _special_rl6,
    "RL7": _special_rl7,
    "RL8": _special_rl8,
    "RL9": _special_rl9,
    "RL10": _special_rl10,
    "RL11": _special_rl11,
    "RL12": _special_rl12,
    "RL13": _special_rl13,
    "RL14": _special_rl14,
    "RL15": _special_rl15,
    "RL16": _special_rl16,
    "RL17": _special_rl17,
    "HeronianRL": _special_heronian,
}

# Short basis note per standalone index, for the registry listing.
SPECIAL_BASIS = {
    "RL5": "degree power d_min^d_max",
    "RL6": "symmetric degree powers a^b + b^a",
    "RL7": "closeness sum",
    "RL8": "closeness product",
    "RL9": "closeness squares",
    "RL10": "sqrt of closeness squares",
    "RL11": "sqrt of closeness sum",
    "RL12": "closeness deviation",
    "RL13": "max-deviation degree sum",
    "RL14": "max-deviation degree product",
    "RL15": "max-deviation degree squares",
    "RL16": "sqrt of max-deviation squares",
    "RL17": "sqrt of max-deviation sum",
    "HeronianRL": "degrees a + sqrt(ab) + b",
}


def evaluate(g: Graph, index: Union[str, Descriptor], a: Optional[Rat] = None):
    """Evaluate any registered index (catalog or standalone) on ``g``.

    ``a`` supplies the general-transform power when the name itself does not
    carry one.  Pure function; safe to call concurrently on a shared graph.
    """
    if isinstance(index, Descriptor):
        return evaluate_descriptor(g, index, a)
    resolved, a_inline = lookup(index)
    if isinstance(resolved, Descriptor):
        return evaluate_descriptor(g, resolved, a_inline if a_inline is not None else a)
    return _SPECIALS[resolved](g)


def describe(name: str) -> tuple[str, str, str, str, str, str]:
    """(name, source, variant, transform, aggregation, form) row for listings."""
    resolved, _ = lookup(name)
    if isinstance(resolved, Descriptor):
        return (
            resolved.name,
            resolved.source,
            str(resolved.variant),
            resolved.transform,
            resolved.aggregation,
            resolved.form,
        )
    return (resolved, SPECIAL_BASIS[resolved], "-", "-", "sum", "value")
