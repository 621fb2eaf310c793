from ordspeed.jfamily.dto.j_tag import JTag
