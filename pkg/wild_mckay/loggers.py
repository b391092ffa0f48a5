import inspect
import logging
import logging.handlers
import os
import sys


#-------------------------------------------------------------------------------
# Level related stuff
#-------------------------------------------------------------------------------
#
# A VERBOSE level sits below DEBUG for per-stratum chatter that would drown
# out everything else. Prompts are prepended to anything echoed to the
# console at a particular level.
#

NOTSET   = logging.NOTSET
VERBOSE  = 5
DEBUG    = logging.DEBUG
INFO     = logging.INFO
WARNING  = logging.WARNING
WARN     = WARNING
ERROR    = logging.ERROR
CRITICAL = logging.CRITICAL
FATAL    = CRITICAL

LEVEL_NAMES = {
    CRITICAL   : 'CRITICAL',
    ERROR      : 'ERROR',
    WARNING    : 'WARNING',
    INFO       : 'INFO',
    DEBUG      : 'DEBUG',
    VERBOSE    : 'VERBOSE',
    NOTSET     : 'NOTSET',
    'CRITICAL' : CRITICAL,
    'ERROR'    : ERROR,
    'WARN'     : WARNING,
    'WARNING'  : WARNING,
    'INFO'     : INFO,
    'DEBUG'    : DEBUG,
    'VERBOSE'  : VERBOSE,
    'NOTSET'   : NOTSET,
}

DEFAULT_PROMPTS = {
    VERBOSE  : "{level}: ".format(level=LEVEL_NAMES[VERBOSE]),
    DEBUG    : "{level}: ".format(level=LEVEL_NAMES[DEBUG]),
    INFO     : "{level}: ".format(level=LEVEL_NAMES[INFO]),
    WARNING  : "{level}: ".format(level=LEVEL_NAMES[WARNING]),
    ERROR    : "{level}: ".format(level=LEVEL_NAMES[ERROR]),
    CRITICAL : "{level}: ".format(level=LEVEL_NAMES[CRITICAL]),
}

LOCAL_PATH = '~/.wild_mckay/logs/'

FORMAT = '%(asctime)s %(levelname)s: %(message)s'

logging.addLevelName(VERBOSE, LEVEL_NAMES[VERBOSE])

# One logger per name, shared by the library modules and the command line.
_loggers = {}


def parse_level(value):
    """
    Turns a level given as a number or a name ('debug', 'VERBOSE', '10') into
    its numeric value.

    :param value: the level as an int or a string
    :return: the numeric level
    """
    if isinstance(value, int):
        return value
    text = str(value).strip()
    if text.lstrip('-').isdigit():
        return int(text)
    try:
        return LEVEL_NAMES[text.upper()]
    except KeyError:
        raise ValueError("Unknown logging level: '{}'".format(value))


class Logger(logging.Logger):
    """
    Replaces the regular logging methods (info, error, etc.) with methods that
    can both echo to the console and commit the record to the handlers.

    Echoed output goes to stderr: stdout is reserved for the reports the
    command line prints, which are often JSON or CSV.
    """
    def __init__(self, name, level=WARNING, print_default=True, log_default=True):
        """
        :param name: the name of the logger
        :type  name: str
        :param level: the level at which to log output
        :type  level: int
        :param print_default: whether to echo to stderr by default
        :param log_default: whether to commit to the handlers by default
        """
        super(Logger, self).__init__(name=name, level=level)

        self.prompts = DEFAULT_PROMPTS.copy()

        self.print_default = print_default
        self.log_default   = log_default

    def set_prompt(self, level, prompt):
        """
        Set a new prompt for echoed output at the given level.

        :param level: the level for the prompt to display at
        :param prompt: the prompt to display
        """
        self.prompts[level] = prompt

    def __emit(self, level, message, print_out, log):
        if print_out is None:
            print_out = self.print_default
        if log is None:
            log = self.log_default

        if print_out and self.level <= level:
            prompt = self.prompts.get(level, 'Level {}: '.format(level))
            sys.stderr.write("{prompt}{message}\n".format(prompt=prompt, message=message))
        if log:
            super(Logger, self).log(level, message)

    def verbose(self, message, print_out=None, log=None):
        """
        Log 'message' as verbose output (finer than debugging).

        :param message: information to display
        :param print_out: whether to echo to stderr
        :param log: whether to commit this to the handlers
        """
        self.__emit(VERBOSE, message, print_out, log)

    def debug(self, message, print_out=None, log=None):
        """
        Log 'message' as debugging output.
        """
        self.__emit(DEBUG, message, print_out, log)

    def info(self, message, print_out=None, log=None):
        """
        Log 'message' as general information.
        """
        self.__emit(INFO, message, print_out, log)

    def warning(self, message, print_out=None, log=None):
        """
        Log 'message' as a warning (not enough to halt execution, but enough to
        be notable, e.g. a representation violating the wild McKay hypotheses).
        """
        self.__emit(WARNING, message, print_out, log)

    warn = warning

    def error(self, message, print_out=None, log=None):
        """
        Log 'message' as an error.
        """
        self.__emit(ERROR, message, print_out, log)

    def critical(self, message, print_out=None, log=None):
        """
        Log 'message' as a critical failure.
        """
        self.__emit(CRITICAL, message, print_out, log)

    fatal = critical

    def log(self, level, message, print_out=None, log=None):
        """
        Log 'message' with a custom logging level.

        :param level: the verbosity level to log at
        :param message: information to display
        """
        self.__emit(level, message, print_out, log)


class FileLogger(Logger):
    """
    A rotating file logger. The file rolls over at 10MB, keeping up to five
    backups aside from the main file.

    The default destination is:
        LOCAL_PATH/<name>.log
    """
    def __init__(self, name=None, level=WARNING, path=None, print_default=False,
                 log_default=True, log_size=10485760, backup_count=5):
        """
        :param name: the name of the logger (e.g. "wild_mckay")
        :param level: the logging level for output
        :param path: the directory to put the log file inside
        """
        if not path:
            path = LOCAL_PATH
        path = os.path.expanduser(path)

        if not name:
            name = inspect.stack()[1][3]

        destination = os.path.join(path, name)
        if not destination.endswith('.log'):
            destination += '.log'

        if not os.path.exists(os.path.dirname(destination)):
            try:
                os.makedirs(os.path.dirname(destination))
            except OSError:
                raise ValueError("Invalid path specified: could not create '{}'".format(os.path.dirname(destination)))

        super(FileLogger, self).__init__(name=name, level=level,
                                         print_default=print_default,
                                         log_default=log_default)

        self.path = path

        # Lines look like:
        #   2026-02-05 17:29:48,289 WARNING: pseudo-reflection at a=1
        handler = logging.handlers.RotatingFileHandler(destination, maxBytes=log_size,
                                                       backupCount=backup_count)
        handler.setFormatter(logging.Formatter(FORMAT))
        self.addHandler(handler)


class StreamLogger(Logger):
    """
    A console logger. Records go to stderr through a StreamHandler; nothing is
    written to disk.
    """
    def __init__(self, name=None, level=WARNING, print_default=False, log_default=True):
        if not name:
            name = inspect.stack()[1][3]

        super(StreamLogger, self).__init__(name=name, level=level,
                                           print_default=print_default,
                                           log_default=log_default)

        handler = logging.StreamHandler(sys.stderr)
        handler.setFormatter(logging.Formatter(FORMAT))
        self.addHandler(handler)


def get_logger(name=None, log=False, level=WARNING, path=None):
    """
    Returns the logger registered under 'name', creating it on first use.

    A logger asked for again with log=True after being created as a stream
    logger is replaced by a file logger, so the command line can switch the
    whole package to file output once it has read its options.

    :param name: the logger name (and log file name)
    :param log: whether to commit records to a rotating file
    :param level: only records at or above this level are handled
    :param path: the folder to put the log file into
    """
    if not name:
        name = inspect.stack()[1][3]

    current = _loggers.get(name)
    if current is not None and (not log or isinstance(current, FileLogger)):
        return current

    if log:
        logger = FileLogger(name=name, level=level, path=path)
    else:
        logger = StreamLogger(name=name, level=level)
    _loggers[name] = logger
    return logger


def set_level(level):
    """
    Re-levels every logger handed out by get_logger.

    :param level: a numeric level or a level name
    """
    level = parse_level(level)
    for logger in _loggers.values():
        logger.setLevel(level)
