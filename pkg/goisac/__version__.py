VERSION = (0, 1, 1)

__version__ = ".".join(map(str, VERSION))
