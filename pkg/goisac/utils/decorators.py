import functools


def lazy_property(fn):
    """Property computed on first access and stored on the instance

    Used for one-off expensive results such as the PEB map of a scenario, which
    is written once and only read afterwards.
    """
    attr_name = "_lazy_" + fn.__name__

    @property
    @functools.wraps(fn)
    def _lazy_property(self):
        try:
            return self.__dict__[attr_name]
        except KeyError:
            value = fn(self)
            self.__dict__[attr_name] = value
            return value

    return _lazy_property
