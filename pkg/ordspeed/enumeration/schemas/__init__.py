from ordspeed.enumeration.schemas.budget import EnumerationBudget
from ordspeed.enumeration.schemas.property_spec import PropertySpec
from ordspeed.enumeration.schemas.results import (MemberList, SpeedSequence,
                                                  SubgraphCount)
