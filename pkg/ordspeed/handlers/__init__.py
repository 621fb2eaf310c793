from ordspeed.handlers.enumeration import register_enumeration_handlers
from ordspeed.handlers.graphs import register_graph_handlers
from ordspeed.handlers.jfamily import register_jfamily_handlers
from ordspeed.handlers.root import cli
from ordspeed.handlers.speeds import register_speed_handlers
from ordspeed.handlers.structures import register_structure_handlers
