import logging
import sys

LOG_FORMAT = "[%(levelname)s][%(asctime)s][%(filename)s:%(lineno)d] - %(message)s"
LOG_DATEFMT = "%Y-%m-%d %H:%M:%S"


def _reset_logger(log, log_file="run.log"):
    for handler in log.handlers:
        handler.close()
        log.removeHandler(handler)
        del handler
    log.handlers.clear()
    log.propagate = False
    console_handle = logging.StreamHandler(sys.stdout)
    console_handle.setFormatter(logging.Formatter(LOG_FORMAT, datefmt=LOG_DATEFMT))
    file_handle = logging.FileHandler(log_file, encoding="utf-8")
    file_handle.setFormatter(logging.Formatter(LOG_FORMAT, datefmt=LOG_DATEFMT))
    log.addHandler(file_handle)
    log.addHandler(console_handle)


def _get_logger():
    log = logging.getLogger("wear")
    _reset_logger(log)
    log.setLevel(logging.INFO)
    return log


def set_debug(enabled: bool):
    logger.setLevel(logging.DEBUG if enabled else logging.INFO)


# 日志句柄
logger = _get_logger()
