"""Terminal and JSON rendering for the command line."""
import json
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence

from pydantic import BaseModel
from rich.console import Console
from rich.table import Table

from algebra.assoc import WitnessSearch
from algebra.exponents import monomial_str
from algebra.powers import AssProfile, IndexReport
from config import settings
from polyhedra.linsys import DeltaResult, IneqSystem, Theorem1Bound
from polyhedra.sigma import BoundReport, BoundValue
from utils.verification import VerifyReport


def console() -> Console:
    return Console(width=settings.console_width, markup=False, highlight=False)


def fraction_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}" if q.denominator != 1 else str(q.numerator)


def payload(value: Any) -> Any:
    """JSON-ready copy of value with every number as a decimal string."""
    if isinstance(value, BaseModel):
        return payload(value.model_dump())
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return fraction_str(value)
    if isinstance(value, dict):
        return {str(k): payload(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [payload(v) for v in value]
    return value


def print_json(data: Dict[str, Any]) -> None:
    print(json.dumps(payload(data), indent=2))


def support_str(M: Sequence[int], names: Sequence[str]) -> str:
    return "(" + ", ".join(names[i - 1] for i in M) + ")"


def render_ass(
    ideal: str,
    supports: Sequence[Sequence[int]],
    names: Sequence[str],
    n: int = 1,
    witnesses: Optional[List[WitnessSearch]] = None,
) -> None:
    out = console()
    title = f"Ass(R/I^{n})" if n != 1 else "Ass(R/I)"
    out.print(f"🔍 {title} for I = {ideal}")
    table = Table(show_header=True)
    table.add_column("prime", no_wrap=True)
    if witnesses is not None:
        table.add_column("witness", no_wrap=True)
    for i, M in enumerate(supports):
        row = [support_str(M, names)]
        if witnesses is not None:
            w = witnesses[i]
            row.append(
                f"X^a = {monomial_str(w.witness, names)}" if w.witness is not None
                else f"unknown: {w.status.value} after {w.candidates} candidates"
            )
        table.add_row(*row)
    out.print(table)


def render_sequence(profile: AssProfile, report: IndexReport, names: Sequence[str]) -> None:
    out = console()
    out.print(f"📈 Ass(R/I^n) for I = {profile.ideal.to_str(names)}, n = 1..{profile.n_max}")
    table = Table(show_header=True)
    table.add_column("n", justify="right")
    table.add_column("Ass(R/I^n)", no_wrap=True)
    for n, supports in enumerate(profile.sequence, start=1):
        table.add_row(str(n), ", ".join(support_str(M, names) for M in supports) or "-")
    out.print(table)

    for label, value, confirmed in (
        ("stab", report.stab, report.stab_confirmed),
        ("pers", report.pers, report.pers_confirmed),
        ("copers", report.copers, report.copers_confirmed),
    ):
        flag = "confirmed" if confirmed else f"unconfirmed (window {report.window})"
        out.print(f"{label} = {value}  [{flag}]")
    for entry in report.per_prime:
        out.print(f"  cpi{support_str(entry.support, names)} = {entry.cpi}")


def _bound_line(out: Console, value: BoundValue) -> None:
    out.print(f"{value.label}: squared = {value.squared}, ceil = {value.ceil}", soft_wrap=True)


def render_bounds(report: BoundReport) -> None:
    out = console()
    st = report.stats
    out.print(f"📐 r = {st.r}, s = {st.s}, d = {st.d}, d_red = {st.d_red}")
    out.print(f"raw (d,s,r) = {report.raw_params}")
    _bound_line(out, report.raw_sigma1)
    _bound_line(out, report.raw_sigma2)
    out.print(f"sigma1^2 / sigma2^2 = {fraction_str(report.raw_ratio_squared)}", soft_wrap=True)
    out.print(f"reduced (d_red, s, min(r,s)) = {report.reduced_params}")
    _bound_line(out, report.reduced_sigma1)
    _bound_line(out, report.reduced_sigma2)
    out.print(
        f"sigma1^2 / sigma2^2 = {fraction_str(report.reduced_ratio_squared)}", soft_wrap=True
    )
    for note in report.notes:
        out.print(f"ℹ️  {note}")


def render_system(sys: IneqSystem, dumped: str) -> None:
    out = console()
    label = sys.kind.value + (f" (N = {sys.sat_n})" if sys.sat_n else "")
    out.print(f"🧮 {label} system: m = {sys.m}, nu = {sys.nu}, k = {sys.k}, r = {sys.r}")
    out.print(dumped, end="", soft_wrap=True)


def render_verify(report: VerifyReport) -> None:
    out = console()
    out.print(f"🧪 verify {report.ideal} up to n = {report.n_max}")
    table = Table(show_header=True)
    table.add_column("check", no_wrap=True)
    table.add_column("cases", justify="right")
    table.add_column("result", no_wrap=True)
    for check in report.checks:
        if not check.ok:
            result = f"❌ {len(check.mismatches)}+ mismatches"
        elif check.unknown:
            result = f"⚠️  ok, {len(check.unknown)}+ unknown"
        else:
            result = "✅ ok"
        table.add_row(check.name, str(check.cases), result)
    out.print(table)
    for check in report.checks:
        for message in check.mismatches:
            out.print(f"❌ {check.name}: {message}", soft_wrap=True)
        for message in check.unknown:
            out.print(f"⚠️  {check.name}: unknown, {message}", soft_wrap=True)


def render_delta(delta: DeltaResult, hadamard: BoundValue, theorem: Theorem1Bound) -> None:
    out = console()
    status = "exact" if delta.complete else f"partial, cap exceeded (order {delta.order_reached})"
    out.print(f"Delta = {delta.value}  [{status}, {delta.minors} minors]", soft_wrap=True)
    if delta.note:
        out.print(f"ℹ️  {delta.note}")
    _bound_line(out, hadamard)
    out.print(f"Delta(nu+1) from {theorem.source}:")
    _bound_line(out, theorem.bound)
