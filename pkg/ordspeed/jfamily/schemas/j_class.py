from typing import Optional

from pydantic import BaseModel, PositiveInt, root_validator

from ordspeed.graphs import OrderedGraph
from ordspeed.jfamily.dto import JTag


class JClass(BaseModel):
    tag: JTag
    order: PositiveInt

    @root_validator(skip_on_failure=True)
    def order_fits_tag(cls, values):
        tag, order = values["tag"], values["order"]
        if tag in (JTag.Q1, JTag.Q2) and order != 4:
            raise ValueError(f"{tag.value} has order 4")
        if tag == JTag.J2 and order < 2:
            raise ValueError("J2 needs order at least 2")
        return values

    class Config:
        frozen = True


class P3P4Result(BaseModel):
    """Either the J-family class or two distinct irreducible induced
    subgraphs of one order, with the vertices inducing them."""

    j_class: Optional[JClass] = None
    witness: Optional[tuple[OrderedGraph, OrderedGraph]] = None
    witness_vertices: Optional[tuple[tuple[int, ...], tuple[int, ...]]] = None

    class Config:
        arbitrary_types_allowed = True

    @root_validator(skip_on_failure=True)
    def exactly_one_outcome(cls, values):
        if (values.get("j_class") is None) == (values.get("witness") is None):
            raise ValueError("need exactly one of j_class and witness")
        return values
