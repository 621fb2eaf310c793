class OrdspeedError(Exception):
    pass
