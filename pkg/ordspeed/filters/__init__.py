from ordspeed.filters.graph_file import GraphFile, PartitionFile
from ordspeed.filters.numbers import BitString, IntegerList
from ordspeed.filters.speed_file import SpeedFile, parse_speed_text
