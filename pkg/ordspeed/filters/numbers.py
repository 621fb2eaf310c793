import click


class IntegerList(click.ParamType):
    """Comma or space separated integers, e.g. ``1,2,1,1,1``."""

    name = "integers"

    def __init__(self, nonnegative: bool = True) -> None:
        self.nonnegative = nonnegative

    def convert(self, value, param, ctx):
        if not isinstance(value, str):
            return tuple(value)
        tokens = value.replace(",", " ").split()
        if not tokens:
            self.fail("expected at least one integer", param, ctx)
        numbers = []
        for token in tokens:
            try:
                number = int(token)
            except ValueError:
                self.fail(f"not an integer (at {token!r})", param, ctx)
            if self.nonnegative and number < 0:
                self.fail(f"must be nonnegative (at {token!r})", param, ctx)
            numbers.append(number)
        return tuple(numbers)


class BitString(click.ParamType):
    """Exactly four 0/1 characters, e.g. ``0110``."""

    name = "bits"

    def convert(self, value, param, ctx):
        if not isinstance(value, str):
            return tuple(value)
        if len(value) != 4 or set(value) - {"0", "1"}:
            self.fail(f"expected four 0/1 digits (at {value!r})", param, ctx)
        return tuple(int(c) for c in value)
