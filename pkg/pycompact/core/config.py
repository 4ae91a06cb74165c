"""
Configuration
-------------

Simple module for loading pycompact's configuration data.  Values are
read from the packaged ``pycompact.ini`` first, then from
``~/pycompact.ini`` and finally ``./pycompact.ini`` so later files
override earlier ones.
"""

import logging
from os.path import join, expanduser, dirname, abspath

from six.moves.configparser import (  # pylint: disable=import-error
    RawConfigParser)

from pycompact.core.logger import get_logger
from pycompact.exceptions import ConfigurationError

logger = get_logger("core.config")


class Configuration(RawConfigParser):  # pylint: disable=too-many-ancestors
    """
    Class responsible for loading and retrieving
    data from the configuration files.  This is used by a few parts
    of pycompact to control various aspects of execution.
    """
    FILES = (
        join(dirname(abspath(__file__)), "pycompact.ini"),
        expanduser(join("~", "pycompact.ini")),
        "pycompact.ini"
    )
    LOGGER_LEVEL_MAPPINGS = {
        "debug": logging.DEBUG,
        "info": logging.INFO,
        "warning": logging.WARNING,
        "error": logging.ERROR,
        "critical": logging.CRITICAL
    }

    def __init__(self):
        RawConfigParser.__init__(self)
        self.load()

    def load(self):
        """Loads the configuration from disk"""
        for section in self.sections():
            self.remove_section(section)
        loaded = self.read(self.FILES)
        logger.debug("Loaded configuration from %s", loaded)

    def logging_level(self):
        """
        Returns the logging level that the configuration currently
        requests.

        :raises pycompact.exceptions.ConfigurationError:
            Raised if the configured level is unknown.
        """
        value = self.get("pycompact", "log_level")
        try:
            return self.LOGGER_LEVEL_MAPPINGS[value.strip().lower()]
        except KeyError:
            raise ConfigurationError("Invalid log_level %r" % value)

    def support_bound(self):
        """
        Returns the default probe universe support bound used by
        product coverage scans.

        :raises pycompact.exceptions.ConfigurationError:
            Raised if the value is not a non-negative integer.
        """
        value = self.get("nets", "support_bound")
        try:
            bound = int(value)
        except ValueError:
            raise ConfigurationError("Invalid support_bound %r" % value)

        if bound < 0:
            raise ConfigurationError("support_bound must be >= 0")
        return bound

    def definitions_path(self):
        """
        Returns the default definition file path or None if one is
        not configured.
        """
        value = self.get("cli", "definitions").strip()
        return value or None


config = Configuration()  # pylint: disable=invalid-name
