from typing import Any, Optional

import click
from pydantic import ValidationError
from structlog import get_logger
from structlog.stdlib import BoundLogger

from ordspeed.config_reader import (Budget, Config, OutputFormat, Runtime,
                                    load_config)
from ordspeed.enumeration import EnumerationBudget
from ordspeed.exceptions import (ContractViolation, InputError,
                                 InternalContradiction)
from ordspeed.logging import logging_configure
from ordspeed.text_utils import formatting_report

EXIT_INTERNAL = 1
EXIT_INPUT = 2
EXIT_PARTIAL = 3

logger: BoundLogger = get_logger()


class AppContext:
    def __init__(self, config: Config, allow_partial: bool) -> None:
        self.config = config
        self.allow_partial = allow_partial

    @property
    def workers(self) -> int:
        return self.config.runtime.workers

    def budget(self) -> EnumerationBudget:
        return EnumerationBudget(
            max_nodes=self.config.budget.max_nodes,
            max_set_keys=self.config.budget.max_set_keys,
            exact_keys=self.config.budget.exact_keys,
        )

    def echo_report(
        self, payload: dict[str, Any],
        rows: Optional[list[dict[str, Any]]] = None,
    ) -> None:
        click.echo(formatting_report(
            payload, self.config.runtime.output_format, rows,
        ))

    def finish(self, exact: bool) -> None:
        """Exit 3 after a budget-truncated report unless allowed."""
        if exact or self.allow_partial:
            return
        click.echo(
            "error: result is partial (budget exhausted); "
            "pass --allow-partial to accept it",
            err=True,
        )
        click.get_current_context().exit(EXIT_PARTIAL)


def _one_line(error: Exception) -> str:
    return " ".join(str(error).split())


class ReportingGroup(click.Group):
    """Maps library errors onto exit codes with a one-line diagnostic."""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except (InputError, ContractViolation, ValidationError) as e:
            click.echo(f"error: {_one_line(e)}", err=True)
            ctx.exit(EXIT_INPUT)
        except OSError as e:
            click.echo(f"error: {_one_line(e)}", err=True)
            ctx.exit(EXIT_INPUT)
        except InternalContradiction as e:
            logger.exception("Internal contradiction", error=str(e))
            click.echo(f"internal error: {_one_line(e)}", err=True)
            ctx.exit(EXIT_INTERNAL)


@click.group(cls=ReportingGroup)
@click.option(
    "--format", "output_format",
    type=click.Choice([f.value for f in OutputFormat]),
    default=None,
    help="Report format (default: json, or ORDSPEED_FORMAT)",
)
@click.option(
    "--threads", type=click.IntRange(min=1), default=None,
    help="Worker processes for enumeration",
)
@click.option(
    "--max-nodes", type=click.IntRange(min=1), default=None,
    help="Search node budget (default: 10^8)",
)
@click.option(
    "--max-set-keys", type=click.IntRange(min=1), default=None,
    help="Dedup set budget (default: 10^7)",
)
@click.option(
    "--exact-keys", is_flag=True,
    help="Dedup on whole canonical keys instead of 128-bit digests",
)
@click.option(
    "--allow-partial", is_flag=True,
    help="Exit 0 even when a budget truncated the result",
)
@click.option(
    "--log-level", default=None,
    type=click.Choice(
        ["DEBUG", "INFO", "WARNING", "ERROR"], case_sensitive=False,
    ),
    help="Log level for standard error",
)
@click.pass_context
def cli(
    ctx: click.Context,
    output_format: Optional[str],
    threads: Optional[int],
    max_nodes: Optional[int],
    max_set_keys: Optional[int],
    exact_keys: bool,
    allow_partial: bool,
    log_level: Optional[str],
) -> None:
    """Ordered graph structure and hereditary property speeds."""
    try:
        config = load_config()
    except ValidationError as e:
        click.echo(f"error: bad environment: {_one_line(e)}", err=True)
        ctx.exit(EXIT_INPUT)

    # flags override the environment
    config = Config(
        budget=Budget(
            max_nodes=max_nodes or config.budget.max_nodes,
            max_set_keys=max_set_keys or config.budget.max_set_keys,
            exact_keys=exact_keys or config.budget.exact_keys,
        ),
        runtime=Runtime(
            workers=threads or config.runtime.workers,
            output_format=output_format or config.runtime.output_format,
            log_level=(log_level or config.runtime.log_level).upper(),
        ),
        limits=config.limits,
    )
    logging_configure(config.runtime.log_level)
    logger.debug("Configuration loaded", config=config.dict())
    ctx.obj = AppContext(config, allow_partial)
