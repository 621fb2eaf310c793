from ordspeed.graphs.schemas.permutation import Permutation
