from typing import Optional

import click

from ordspeed.enumeration import SpeedSequence
from ordspeed.exceptions import InputError
from ordspeed.filters import IntegerList, SpeedFile
from ordspeed.handlers.root import AppContext
from ordspeed.speeds import (classify_regime, empirical_growth,
                             growth_root, recurrence_terms)
from ordspeed.speeds.regime import MAX_FIB_ORDER, MAX_RATIO_DEGREE
from ordspeed.speeds.roots import TOLERANCE


@click.command("classify")
@click.option("--input", "seq", type=SpeedFile(), default=None)
@click.option("--values", type=IntegerList(), default=None)
@click.option("--max-k", type=click.IntRange(min=2), default=MAX_FIB_ORDER)
@click.option(
    "--max-degree", type=click.IntRange(min=0), default=MAX_RATIO_DEGREE,
)
@click.option("--growth", is_flag=True, help="Add root and ratio tails")
@click.pass_obj
def classify_cmd(
    app: AppContext, seq: Optional[SpeedSequence], values, max_k: int,
    max_degree: int, growth: bool,
) -> None:
    """Which speed regime a sequence looks like."""
    if (seq is None) == (values is None):
        raise InputError("give exactly one of --input and --values")
    if seq is None:
        seq = SpeedSequence.from_counts(list(values))
    result = classify_regime(seq, max_k=max_k, max_degree=max_degree)
    payload = result.dict()
    if growth:
        payload["growth"] = empirical_growth(seq).dict()
    app.echo_report(payload)


@click.command("growth-root")
@click.argument("coeffs", type=IntegerList())
@click.option("--tolerance", type=click.FloatRange(min=0, min_open=True),
              default=TOLERANCE)
@click.option(
    "--terms", type=click.IntRange(min=0), default=0,
    help="Also list T_0..T_n of the recurrence",
)
@click.pass_obj
def growth_root_cmd(
    app: AppContext, coeffs: tuple[int, ...], tolerance: float, terms: int,
) -> None:
    """Positive root of x^(k+1) = sum a(i) x^i for COEFFS a(0),..,a(k)."""
    payload = {
        "coeffs": list(coeffs),
        "root": growth_root(coeffs, tolerance),
        "tolerance": tolerance,
    }
    if terms:
        payload["terms"] = recurrence_terms(coeffs, terms)
    app.echo_report(payload)


def register_speed_handlers(cli: click.Group) -> None:
    cli.add_command(classify_cmd)
    cli.add_command(growth_root_cmd)
