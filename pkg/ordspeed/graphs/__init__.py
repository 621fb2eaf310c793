from ordspeed.graphs.constructions import (gen_basic, gen_M,
                                           gen_M_subset_image,
                                           gen_permutation_graph,
                                           gen_somebases_prefix,
                                           gen_type1_host, gen_type3_host,
                                           somebases_body,
                                           type1_subgraph_family)
from ordspeed.graphs.containment import (contains, contains_through_last,
                                         find_embedding)
from ordspeed.graphs.dto import GraphKind, Orientation, Side
from ordspeed.graphs.operations import (canonical_key, complement, graph_sum,
                                        induced, induced_rows, key_from_rows,
                                        make_graph, power,
                                        symmetric_difference)
from ordspeed.graphs.ordered_graph import (MAX_ORDER, LoopedOrderedGraph,
                                           OrderedGraph)
from ordspeed.graphs.schemas import Permutation
from ordspeed.graphs.text_format import (read_graph, read_looped_graph,
                                         write_graph, write_looped_graph)
