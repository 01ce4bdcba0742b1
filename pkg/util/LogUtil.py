import logging
import sys

ROOT_LOGGER_NAME = "tract_matroid"
LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


class LogUtil:
    """
    日志工具
    所有日志写到 stderr，stdout 只留给报告 JSON
    """

    _configured: bool = False

    def __init__(self):
        pass

    @staticmethod
    def configure(level: str = "INFO") -> None:
        root = logging.getLogger(ROOT_LOGGER_NAME)
        if not LogUtil._configured:
            handler = logging.StreamHandler(sys.stderr)
            handler.setFormatter(logging.Formatter(LOG_FORMAT))
            root.addHandler(handler)
            root.propagate = False
            LogUtil._configured = True
        root.setLevel(getattr(logging, str(level).upper(), logging.INFO))

    @staticmethod
    def get_logger(name: str) -> logging.Logger:
        if not LogUtil._configured:
            LogUtil.configure()
        return logging.getLogger(f"{ROOT_LOGGER_NAME}.{name}")
