import logging

import pytest

from wild_mckay import loggers


def test_parse_level():
    assert loggers.parse_level('debug') == loggers.DEBUG
    assert loggers.parse_level('VERBOSE') == loggers.VERBOSE == 5
    assert loggers.parse_level('15') == 15
    assert loggers.parse_level(loggers.ERROR) == loggers.ERROR
    with pytest.raises(ValueError):
        loggers.parse_level('chatty')


def test_verbose_level_is_registered():
    assert logging.getLevelName(loggers.VERBOSE) == 'VERBOSE'


def test_get_logger_is_cached():
    first = loggers.get_logger('wild_mckay')
    assert loggers.get_logger('wild_mckay') is first
    assert isinstance(first, loggers.StreamLogger)


def test_file_logger_replaces_stream_logger(tmp_path):
    loggers.get_logger('wild_mckay')
    logger = loggers.get_logger('wild_mckay', log=True, path=str(tmp_path))
    assert isinstance(logger, loggers.FileLogger)
    assert loggers.get_logger('wild_mckay') is logger

    logger.warning("c_0 = 1/8")
    with open(str(tmp_path / 'wild_mckay.log')) as handle:
        assert "WARNING: c_0 = 1/8" in handle.read()


def test_set_level():
    logger = loggers.get_logger('wild_mckay')
    loggers.set_level('verbose')
    assert logger.level == loggers.VERBOSE


def test_echo_goes_to_stderr(capsys):
    logger = loggers.StreamLogger('echo', level=loggers.INFO)
    logger.error("bad input", print_out=True, log=False)
    logger.debug("hidden", print_out=True, log=False)
    captured = capsys.readouterr()
    assert captured.err == "ERROR: bad input\n"
    assert captured.out == ""


def test_custom_prompt(capsys):
    logger = loggers.StreamLogger('echo', level=loggers.VERBOSE)
    logger.set_prompt(loggers.VERBOSE, "... ")
    logger.verbose("stratum 1,_", print_out=True, log=False)
    assert capsys.readouterr().err == "... stratum 1,_\n"
