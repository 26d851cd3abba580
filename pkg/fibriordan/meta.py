# -*- coding: utf-8 -*-
"""
Meta tools for verification suites
"""
from abc import ABCMeta
from contextlib import suppress


def subclasses(cls):
    """Return a set of subclasses of ``cls``, including sub-subclasses and so on."""
    direct_subclasses = set(cls.__subclasses__())
    return direct_subclasses.union(
        {s for c in direct_subclasses for s in subclasses(c)}
    )


class MetaSuite(ABCMeta):
    """
    Metaclass for AbstractSuite.

    This metaclass determines the valid parameters that have been defined using the
    SuiteParameter class descriptor as class variables. For example, AbstractSuite
    already has built-in SuiteParameter descriptors (order, rows, seed, etc.)

    Moreover, all classes generated by MetaSuite have an ``implementations`` attribute
    which points to concrete subclasses, both direct and indirect.
    """

    def __init__(cls, clsname, bases, clsdict):
        super().__init__(clsname, bases, clsdict)

        if not hasattr(cls, "valid_parameters"):
            cls.valid_parameters = set()

        # Only parameters defined via the SuiteParameter descriptor are configurable
        local_valid_parameters = {
            name
            for name, parameter in cls.__dict__.items()
            if isinstance(parameter, SuiteParameter)
        }
        cls.valid_parameters = cls.valid_parameters.union(local_valid_parameters)

        # If available, also include valid parameters from superclasses
        with suppress(AttributeError):
            cls.valid_parameters = set.union(cls.valid_parameters, super().valid_parameters)

        # Suites are registered by name; defaults to the class name
        if "name" not in clsdict:
            cls.name = clsname.lower()

    @property
    def implementations(self):
        """Concrete implementations, including direct subclasses, sub-subclasses, and so on."""
        return {c for c in subclasses(self) if not c.__abstractmethods__}


class SuiteParameter:
    """
    Descriptor to suite parameters, with default values and forced types.

    Parameters
    ----------
    name : str
        Parameter name
    ptype : type or callable
        Parameter type, e.g. int.
    default : object
        Default value of the parameter.
    """

    __slots__ = ("name", "type", "default")

    def __init__(self, name, ptype, default):
        self.name = name
        self.type = ptype
        self.default = default

    def __get__(self, instance, cls):
        if instance is None:
            return self
        return instance.__dict__.get(self.name, self.default)

    def __set__(self, instance, value):
        """If the value cannot be cast to the expected type, a TypeError is raised."""
        try:
            value = self.type(value)
        except (ValueError, TypeError):
            raise TypeError(
                f"Suite parameter {self.name} expects values of type {self.type.__name__}, but received {value!r}"
            )
        else:
            instance.__dict__[self.name] = value
