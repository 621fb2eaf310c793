import click

from ordspeed.handlers import (cli, register_enumeration_handlers,
                               register_graph_handlers,
                               register_jfamily_handlers,
                               register_speed_handlers,
                               register_structure_handlers)


def create_cli() -> click.Group:
    register_graph_handlers(cli)
    register_structure_handlers(cli)
    register_enumeration_handlers(cli)
    register_speed_handlers(cli)
    register_jfamily_handlers(cli)
    return cli


def main() -> None:
    create_cli()(prog_name="ordspeed")


if __name__ == "__main__":
    main()
