import logging
import os
import sys


def _get_logger():
    log_level = os.environ.get("WALKS_LOG_LEVEL", "INFO")
    log_level = log_level.upper()
    logger = logging.getLogger("orthant_walks")
    logger.setLevel(log_level)
    # reports go to stdout, so diagnostics stay on stderr
    console_handler = logging.StreamHandler(sys.stderr)
    formatter = logging.Formatter('%(asctime)s %(levelname)s %(filename)s:%(lineno)d - %(message)s')
    console_handler.setFormatter(formatter)
    logger.addHandler(console_handler)
    logger.propagate = False
    return logger


logger = _get_logger()
