"""Reading and writing .ideal files, weight vectors, and subset arguments.

File grammar::

    # comment
    vars: x1 x2 x3
    field: Q            # optional, Q or Fp:<p>
    x1*x3 - x2^2        # one generator per line

Errors carry the offending line number; non-homogeneous generators are
rejected at load time.
"""

from __future__ import annotations

from fractions import Fraction

from .fields import QQ, FieldError, field_from_name
from .groebner import Ideal
from .polynomials import ParseError, Ring, parse_polynomial


class IdealFileError(ValueError):
    pass


def parse_ideal_text(text, source="<string>"):
    lines = text.splitlines()
    names = None
    field = QQ
    gens = []
    gen_lines = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("vars:"):
            if names is not None:
                raise IdealFileError(f"{source}:{lineno}: duplicate vars line")
            names = tuple(line[5:].split())
            if not names:
                raise IdealFileError(f"{source}:{lineno}: empty vars line")
            continue
        if line.startswith("field:"):
            try:
                field = field_from_name(line[6:])
            except FieldError as exc:
                raise IdealFileError(f"{source}:{lineno}: {exc}") from exc
            continue
        if names is None:
            raise IdealFileError(f"{source}:{lineno}: generators before vars line")
        gens.append(line)
        gen_lines.append(lineno)
    if names is None:
        raise IdealFileError(f"{source}: missing vars line")
    ring = Ring(names, field)
    polys = []
    for line, lineno in zip(gens, gen_lines):
        try:
            p = parse_polynomial(line, ring)
        except ParseError as exc:
            raise IdealFileError(f"{source}:{lineno}: {exc}") from exc
        if not p.is_homogeneous():
            raise IdealFileError(
                f"{source}:{lineno}: non-homogeneous generator {line!r}")
        polys.append(p)
    return Ideal(ring, polys)


def load_ideal_file(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_ideal_text(fh.read(), source=str(path))


def ideal_to_text(ideal):
    lines = ["vars: " + " ".join(ideal.ring.names),
             "field: " + ideal.ring.field.name]
    lines.extend(str(g) for g in ideal.generators)
    return "\n".join(lines) + "\n"


def save_ideal_file(ideal, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(ideal_to_text(ideal))


def parse_weight(text, n):
    """Comma-separated rationals, e.g. ``1/2,0,3``."""
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != n:
        raise ValueError(f"expected {n} weight entries, got {len(parts)}")
    try:
        return tuple(Fraction(p) for p in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad weight vector {text!r}: {exc}") from exc


def parse_subset(text, n):
    """Comma-separated 1-based indices to a 0-based frozenset; '' is empty."""
    text = text.strip()
    if not text:
        return frozenset()
    out = set()
    for part in text.split(","):
        i = int(part)
        if not 1 <= i <= n:
            raise ValueError(f"index {i} outside 1..{n}")
        out.add(i - 1)
    return frozenset(out)


def gb_to_dict(gb):
    return {"ring": gb.ring.descriptor(),
            "order": gb.order.descriptor(),
            "basis": gb.strings()}
