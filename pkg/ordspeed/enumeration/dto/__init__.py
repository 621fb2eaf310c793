from ordspeed.enumeration.dto.kinds import CountMethod, PropertyKind
