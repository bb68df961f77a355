"""An exact-arithmetic toolkit for enumerating and machine-verifying
Beck-type and fixed-perimeter partition identities.
"""
import sys
import os
from configparser import ConfigParser
from collections import OrderedDict
from copy import deepcopy

__all__ = ['PV_USER_DIR', 'PV_USER_CONFIG', 'PV_DIR', 'PV_CONFIG', 'config']

__package_name__ = 'partverify'
__version__ = '0.9.0'
__author__ = 'PyPartVerify contributors'
__author_email__ = ''
__homepage__ = ''
__license__ = 'MIT'

PV_USER_DIR = os.path.join(os.path.expanduser('~'), '.config', 'partverify')  # affected by $HOME
PV_USER_CONFIG = os.path.join(os.path.expanduser('~'), '.partverifyrc')  # affected by $HOME
PV_DIR = os.environ.get('PV_DIR') or '.partverify'
PV_CONFIG = os.environ.get('PV_CONFIG') or 'config.ini'


def parse_int_list(value):
    """Parse a comma separated list of integers, e.g. "2,3,4,5"."""
    return [int(v) for v in value.split(',') if v.strip()]


class Config():
    """Config class whose values are lazily-initialized when accessed.

    Values are loaded from config files relative to CWD. Consider calling
    load() if the script changes CWD during the runtime.
    """
    DEFAULT = {
        'verify': {
            'franklin_n_max': '35',
            'theorem1_n_max': '25',
            'beck_n_max': '50',
            'j_max': '6',
            'r_set': '2,3,4,5',
            'perimeter_m_enum': '16',
            'perimeter_m_series': '200',
            'regular_m_enum': '14',
            'regular_m_series': '100',
            'fail_fast': 'false',
            },
        'enumerate': {
            'perimeter_bound': '24',
            },
        'conjecture': {
            'r_max': '8',
            'm_max': '500',
            'm_cross': '14',
            },
        'output': {
            'format': 'json',
            'footer': 'true',
            },
        'parallel': {
            'threads': '1',
            },
        }
    TYPES = {
        'verify': {
            'franklin_n_max': 'getint',
            'theorem1_n_max': 'getint',
            'beck_n_max': 'getint',
            'j_max': 'getint',
            'r_set': 'getintlist',
            'perimeter_m_enum': 'getint',
            'perimeter_m_series': 'getint',
            'regular_m_enum': 'getint',
            'regular_m_series': 'getint',
            'fail_fast': 'getboolean',
            },
        'enumerate': {
            'perimeter_bound': 'getint',
            },
        'conjecture': {
            'r_max': 'getint',
            'm_max': 'getint',
            'm_cross': 'getint',
            },
        'output': {
            'footer': 'getboolean',
            },
        'parallel': {
            'threads': 'getint',
            },
        }

    def __init__(self):
        self._conf = None
        self._data = None


    def __getitem__(self, key):
        if self._conf is None: self.load()  # lazy load
        return self._data[key]


    def __iter__(self):
        if self._conf is None: self.load()  # lazy load
        return iter(self._data)


    def getname(self, name):
        if self._conf is None: self.load()  # lazy load
        try:
            sec, key = name.split('.')
        except ValueError:
            return None
        try:
            return self._conf[sec][key]
        except KeyError:
            return None


    def dump(self, fh):
        if self._conf is None: self.load()  # lazy load
        self._conf.write(fh)


    def dump_object(self):
        """Dump configs as an object, with type casting.
        """
        if self._conf is None: self.load()  # lazy load
        return deepcopy(self._data)


    def load(self, root='.'):
        """Loads config files related to the given root directory.

        Skip if config file doesn't exist, but raise if not loadable.

        project config > user config > default config
        """
        def load_config(file):
            if not os.path.isfile(file):
                return

            try:
                parser = ConfigParser(interpolation=None)
                parser.read(file, encoding='UTF-8')
            except Exception:
                print(f'Error: Unable to load config from "{file}".', file=sys.stderr)
                raise
            else:
                for section in parser.sections():
                    # conf.setdefault(...).update(...) doesn't work here as the
                    # setdefault may return the default value rather then a
                    # Section object.
                    conf.setdefault(section, OrderedDict())
                    conf[section].update(parser[section])

        # default config
        self._conf = conf = ConfigParser(
            interpolation=None,
            converters={'intlist': parse_int_list},
            )
        conf.read_dict(self.DEFAULT)

        # user config
        load_config(os.path.join(PV_USER_DIR, PV_CONFIG))
        load_config(PV_USER_CONFIG)

        # project config
        load_config(os.path.join(root, PV_DIR, PV_CONFIG))

        self._data = OrderedDict()
        for section in conf.sections():
            sectionobj = self._data[section] = OrderedDict()
            for key in conf[section]:
                try:
                    caster = self.TYPES[section][key]
                except KeyError:
                    sectionobj[key] = conf[section][key]
                    continue
                try:
                    sectionobj[key] = getattr(conf[section], caster)(key)
                except ValueError as exc:
                    raise ValueError(f'Bad value for config "{section}.{key}": {exc}') from exc

config = Config()
