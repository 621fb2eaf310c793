from ordspeed.jfamily.dto import JTag
from ordspeed.jfamily.identify import (irreducible_subgraphs, j_ell_member,
                                       j_ell_members, j_identify,
                                       j_member_graph, p3p4_classify,
                                       small_subgraph_test)
from ordspeed.jfamily.schemas import (JClass, P3P4Result, P3P4Summary,
                                      WitnessSetReport)
from ordspeed.jfamily.verify import verify_p3p4
from ordspeed.jfamily.witness import (comparable, incomparable_pair_host,
                                      min_witness_k)
