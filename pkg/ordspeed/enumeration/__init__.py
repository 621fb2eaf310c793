from ordspeed.enumeration.budget import BudgetExhausted, BudgetMeter
from ordspeed.enumeration.dto import CountMethod, PropertyKind
from ordspeed.enumeration.examples import (bounded_matching_forbidden_set,
                                           example_block_profile)
from ordspeed.enumeration.exhaustive import graph_from_pattern, iter_all_graphs
from ordspeed.enumeration.extension import (SpecAcceptor, children,
                                            collect_level, walk_speeds)
from ordspeed.enumeration.membership import member
from ordspeed.enumeration.schemas import (EnumerationBudget, MemberList,
                                          PropertySpec, SpeedSequence,
                                          SubgraphCount)
from ordspeed.enumeration.speed import (block_profile_counts, blowup_count,
                                        brute_force_speed,
                                        count_predicate_speed, count_speed,
                                        filtered_speeds,
                                        is_hereditary_profile, list_members)
from ordspeed.enumeration.subgraphs import count_subgraphs, distinct_subgraphs
