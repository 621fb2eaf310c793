from ordspeed.jfamily.schemas.j_class import JClass, P3P4Result
from ordspeed.jfamily.schemas.reports import P3P4Summary, WitnessSetReport
