import sys
import os
from datetime import datetime

DEFAULT_LOG_FILE = "data/logs/wzw_run.log"


def setup_logging(log_file_path=DEFAULT_LOG_FILE, run_name="wzw"):
    """
    Duplicates stderr (status lines, progress bars) into a log file.

    Results are written to stdout and are left untouched so they stay
    byte-identical between runs.

    Args:
        log_file_path (str): The path to the log file.
        run_name (str): Name printed in the run header.

    Returns:
        A tuple (original_stderr, log_file) to pass to restore_logging.
    """
    os.makedirs(os.path.dirname(log_file_path) or ".", exist_ok=True)
    original_stderr = sys.stderr
    log_file = open(log_file_path, 'a', encoding='utf-8')

    class Tee(object):
        """Writes to several file-like objects at once."""
        def __init__(self, *files):
            self.files = files
        def write(self, obj):
            for f in self.files:
                f.write(obj)
                f.flush()
        def flush(self):
            for f in self.files:
                f.flush()
        def isatty(self):
            return False

    sys.stderr = Tee(original_stderr, log_file)
    status(f"\n\n--- {run_name} started at {datetime.now().strftime('%Y-%m-%d %H:%M:%S')} ---")

    return original_stderr, log_file


def restore_logging(original_stderr, log_file):
    """
    Restores the original stderr and closes the log file.

    Args:
        original_stderr: The sys.stderr object returned by setup_logging.
        log_file: The log file object to close.
    """
    sys.stderr = original_stderr
    if log_file:
        log_file.close()


def status(message: str):
    """Prints a status line on stderr."""
    print(message, file=sys.stderr, flush=True)


def banner(title: str):
    status(f"\n==================== {title} ====================")
