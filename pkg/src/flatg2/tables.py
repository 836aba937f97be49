"""Bundled lattice-data tables: parsing, serialization, verification.

Two structured text files ship with the package:

* ``table1.txt`` -- 45 rows of commuting 5x5 integer generator pairs with
  their rotation-angle data and an exact conjugator over Q(sqrt 3) carrying
  a block rotation matrix onto the generators;
* ``table2.txt`` -- 30 rows of 6x6 integer matrices realizing the
  zero-sum rotation-angle triples, with their expected cyclic holonomy.

File format: ``key: value`` lines grouped into ``[row]`` blocks, matrices
as row-major bracketed lists, quadratic entries as ``p/q+r/s*sqrt(n)``,
angles as reduced rationals q (angle = 2*pi*q).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import List, Optional, Sequence, Tuple, Union

from .classify import AngleTriple, holonomy_group, parse_group_descriptor
from .intmat import (
    AngleSignature,
    ExactMatrix,
    IntMatrix,
    SingularP,
    koo_signature,
    matrix_order,
    abelianization,
    verify_conjugation,
)
from .scalars import QuadExt, parse_quadext, render_rational, render_scalar


class ParseError(ValueError):
    """Malformed table data file."""


# exact values of (cos 2*pi*q, sin 2*pi*q) over Q(sqrt 3)
_TRIG = {
    Fraction(0): (Fraction(1), Fraction(0)),
    Fraction(1, 2): (Fraction(-1), Fraction(0)),
    Fraction(1, 4): (Fraction(0), Fraction(1)),
    Fraction(3, 4): (Fraction(0), Fraction(-1)),
    Fraction(1, 3): (Fraction(-1, 2), QuadExt(0, Fraction(1, 2), 3)),
    Fraction(2, 3): (Fraction(-1, 2), QuadExt(0, Fraction(-1, 2), 3)),
    Fraction(1, 6): (Fraction(1, 2), QuadExt(0, Fraction(1, 2), 3)),
    Fraction(5, 6): (Fraction(1, 2), QuadExt(0, Fraction(-1, 2), 3)),
    Fraction(1, 12): (QuadExt(0, Fraction(1, 2), 3), Fraction(1, 2)),
    Fraction(5, 12): (QuadExt(0, Fraction(-1, 2), 3), Fraction(1, 2)),
    Fraction(7, 12): (QuadExt(0, Fraction(-1, 2), 3), Fraction(-1, 2)),
    Fraction(11, 12): (QuadExt(0, Fraction(1, 2), 3), Fraction(-1, 2)),
}


def exact_rotation(q: Fraction) -> ExactMatrix:
    """The 2x2 rotation by 2*pi*q, exactly, for q with denominator | 12."""
    q = Fraction(q) % 1
    if q not in _TRIG:
        raise ValueError(f"no exact Q(sqrt 3) value for angle 2*pi*{q}")
    cos, sin = _TRIG[q]
    return ExactMatrix([[cos, -sin], [sin, cos]])


def exp_block(angles: Sequence[Fraction]) -> ExactMatrix:
    """(1) + R(2 pi q1) + R(2 pi q2) + ... as an exact block matrix."""
    blocks = [ExactMatrix([[Fraction(1)]])]
    blocks.extend(exact_rotation(q) for q in angles)
    return ExactMatrix.block_diag(*blocks)


@dataclass
class TableRow:
    """One row of a bundled table."""

    table_id: int
    angles: Tuple[Fraction, ...]  # 4 values for table 1 ((a,b),(c,d)), 3 for table 2
    generators: List[IntMatrix]
    conjugator: Optional[ExactMatrix] = None
    direction: Optional[str] = None  # "P": P^-1 M P = A ; "Pinv": P M P^-1 = A
    expected_holonomy: Optional[str] = None

    def angle_pairs(self) -> Tuple[Tuple[Fraction, Fraction], Tuple[Fraction, Fraction]]:
        if self.table_id != 1:
            raise ValueError("angle pairs only for table 1 rows")
        return (self.angles[0], self.angles[1]), (self.angles[2], self.angles[3])

    def triple(self) -> AngleTriple:
        if self.table_id != 2:
            raise ValueError("angle triple only for table 2 rows")
        return AngleTriple.of(*self.angles)


# -- parsing ------------------------------------------------------------------------


def _parse_matrix_text(text: str):
    """Row-major bracketed matrix with rational / quadratic entries."""
    s = text.strip()
    if not (s.startswith("[[") and s.endswith("]]")):
        raise ParseError(f"malformed matrix {text!r}")
    rows = []
    body = s[1:-1]
    depth = 0
    start = None
    for i, ch in enumerate(body):
        if ch == "[":
            if depth == 0:
                start = i + 1
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth == 0:
                entries = [e for e in body[start:i].split(",") if e.strip()]
                rows.append([parse_quadext(e) for e in entries])
    if not rows or any(len(r) != len(rows[0]) for r in rows):
        raise ParseError(f"ragged matrix {text!r}")
    return rows


def _is_integral(rows) -> bool:
    return all(isinstance(v, Fraction) and v.denominator == 1 for r in rows for v in r)


def _parse_angles(text: str) -> Tuple[Fraction, ...]:
    cleaned = text.replace("(", " ").replace(")", " ").replace(",", " ")
    parts = [p for p in cleaned.split() if p]
    return tuple(Fraction(p) % 1 for p in parts)


def parse_table_text(text: str) -> List[TableRow]:
    table_id: Optional[int] = None
    rows: List[TableRow] = []
    current: Optional[dict] = None

    def flush():
        nonlocal current
        if current is None:
            return
        if "angles" not in current or not current.get("gens"):
            raise ParseError("row missing angles or generators")
        rows.append(
            TableRow(
                table_id=table_id,
                angles=current["angles"],
                generators=current["gens"],
                conjugator=current.get("conjugator"),
                direction=current.get("direction"),
                expected_holonomy=current.get("holonomy"),
            )
        )
        current = None

    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line == "[row]":
            flush()
            if table_id is None:
                raise ParseError("row before table id")
            current = {"gens": []}
            continue
        if ":" not in line:
            raise ParseError(f"malformed line {raw!r}")
        key, value = (p.strip() for p in line.split(":", 1))
        if key == "table":
            table_id = int(value)
            continue
        if current is None:
            raise ParseError(f"data line outside a row: {raw!r}")
        if key == "angles":
            current["angles"] = _parse_angles(value)
        elif key == "gen":
            rows_ = _parse_matrix_text(value)
            if not _is_integral(rows_):
                raise ParseError("generator must be an integer matrix")
            current["gens"].append(IntMatrix([[int(v) for v in r] for r in rows_]))
        elif key == "conjugator":
            current["conjugator"] = ExactMatrix(_parse_matrix_text(value))
        elif key == "direction":
            if value not in ("P", "Pinv", "none"):
                raise ParseError(f"bad direction {value!r}")
            current["direction"] = None if value == "none" else value
        elif key == "holonomy":
            current["holonomy"] = value
        else:
            raise ParseError(f"unknown key {key!r}")
    flush()
    if table_id is None:
        raise ParseError("missing table id")
    return rows


def _render_exact_matrix(m: ExactMatrix) -> str:
    return (
        "["
        + ",".join(
            "[" + ",".join(render_scalar(v) for v in row) + "]" for row in m.rows
        )
        + "]"
    )


def _render_int_matrix(m: IntMatrix) -> str:
    return "[" + ",".join("[" + ",".join(str(v) for v in row) + "]" for row in m.rows) + "]"


def serialize_rows(rows: Sequence[TableRow]) -> str:
    if not rows:
        raise ValueError("nothing to serialize")
    table_id = rows[0].table_id
    out = [f"table: {table_id}", ""]
    for row in rows:
        out.append("[row]")
        if table_id == 1:
            (a, b), (c, d) = row.angle_pairs()
            out.append(
                f"angles: ({render_rational(a)},{render_rational(b)}),({render_rational(c)},{render_rational(d)})"
            )
        else:
            out.append(
                "angles: (" + ",".join(render_rational(q) for q in row.angles) + ")"
            )
        if row.conjugator is not None:
            out.append(f"direction: {row.direction or 'none'}")
            out.append(f"conjugator: {_render_exact_matrix(row.conjugator)}")
        for g in row.generators:
            out.append(f"gen: {_render_int_matrix(g)}")
        if row.expected_holonomy is not None:
            out.append(f"holonomy: {row.expected_holonomy}")
        out.append("")
    return "\n".join(out)


def load_bundled(name: str) -> List[TableRow]:
    """Parse a bundled data file ("table1.txt" or "table2.txt")."""
    text = resources.files("flatg2.data").joinpath(name).read_text(encoding="utf-8")
    return parse_table_text(text)


# -- verification ----------------------------------------------------------------------


@dataclass
class RowStatus:
    index: int
    passed: bool
    checks: List[str] = field(default_factory=list)
    failures: List[str] = field(default_factory=list)


@dataclass
class VerificationReport:
    table_id: int
    rows: List[RowStatus]
    elapsed_seconds: float

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.rows)

    @property
    def counts(self) -> Tuple[int, int]:
        ok = sum(1 for r in self.rows if r.passed)
        return ok, len(self.rows) - ok

    def summary(self) -> str:
        ok, bad = self.counts
        return f"table {self.table_id}: {ok} passed, {bad} failed, {len(self.rows)} rows"


def _expected_signature(angles: Sequence[Fraction], fixed: int) -> AngleSignature:
    k1, k2 = fixed, 0
    rot = {}
    for q in angles:
        qq = Fraction(q) % 1
        f = min(qq, 1 - qq)
        if f == 0:
            k1 += 2
        elif f == Fraction(1, 2):
            k2 += 2
        else:
            rot[f] = rot.get(f, 0) + 1
    return AngleSignature(k1=k1, k2=k2, rotations=tuple(sorted(rot.items())))


def verify_table1_row(row: TableRow) -> RowStatus:
    status = RowStatus(index=0, passed=True)

    def check(name: str, ok: bool, detail: str = ""):
        if ok:
            status.checks.append(name)
        else:
            status.passed = False
            status.failures.append(name + (f": {detail}" if detail else ""))

    if len(row.generators) != 2:
        check("arity", False, f"expected 2 generators, got {len(row.generators)}")
        return status
    A, B = row.generators
    (qa, qb), (qc, qd) = row.angle_pairs()
    check("commute", A * B == B * A)
    check("det", A.det() == 1 and B.det() == 1, f"{A.det()},{B.det()}")
    oa, ob = matrix_order(A), matrix_order(B)
    check("finite-order", isinstance(oa, int) and isinstance(ob, int))
    if isinstance(oa, int) and isinstance(ob, int):
        try:
            check("signature-A", koo_signature(A) == _expected_signature((qa, qb), 1))
            check("signature-B", koo_signature(B) == _expected_signature((qc, qd), 1))
        except Exception as e:  # pragma: no cover - defensive
            check("signature", False, str(e))
    check("c-equals-minus-d", (qc + qd) % 1 == 0, f"{qc}+{qd}")
    try:
        rank, _ = abelianization([A, B])
        check("abelianization-rank-odd", rank % 2 == 1, f"rank={rank}")
    except Exception as e:
        check("abelianization", False, str(e))
    if row.conjugator is not None and row.direction is not None:
        try:
            Mx = exp_block((qa, qb))
            My = exp_block((qc, qd))
            P = row.conjugator
            if row.direction == "P":
                ok = verify_conjugation(P, Mx, A) and verify_conjugation(P, My, B)
            else:
                ok = (P * Mx == ExactMatrix.from_int(A) * P) and (
                    P * My == ExactMatrix.from_int(B) * P
                )
            check("conjugation", ok)
        except (SingularP, ValueError) as e:
            check("conjugation", False, str(e))
    else:
        # no exact conjugator given: invariants above are the fallback
        status.checks.append("conjugation-skipped")
    return status


def verify_table2_row(row: TableRow) -> RowStatus:
    status = RowStatus(index=0, passed=True)

    def check(name: str, ok: bool, detail: str = ""):
        if ok:
            status.checks.append(name)
        else:
            status.passed = False
            status.failures.append(name + (f": {detail}" if detail else ""))

    if len(row.generators) != 1:
        check("arity", False, f"expected 1 generator, got {len(row.generators)}")
        return status
    M = row.generators[0]
    check("det", M.det() == 1, str(M.det()))
    order = matrix_order(M)
    check("finite-order", isinstance(order, int))
    triple = row.triple()
    if isinstance(order, int):
        try:
            check("signature", koo_signature(M) == triple.signature())
        except Exception as e:
            check("signature", False, str(e))
    if row.expected_holonomy is not None:
        try:
            group = holonomy_group([M])
            expected = parse_group_descriptor(row.expected_holonomy)
            check(
                "holonomy",
                group.invariant_factors == expected,
                f"{group.invariant_factors} vs {expected}",
            )
        except Exception as e:
            check("holonomy", False, str(e))
    return status


def verify_rows(rows: Sequence[TableRow]) -> VerificationReport:
    start = time.perf_counter()
    statuses = []
    for i, row in enumerate(rows, 1):
        st = verify_table1_row(row) if row.table_id == 1 else verify_table2_row(row)
        st.index = i
        statuses.append(st)
    elapsed = time.perf_counter() - start
    return VerificationReport(table_id=rows[0].table_id if rows else 0, rows=statuses, elapsed_seconds=elapsed)
