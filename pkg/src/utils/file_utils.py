import os
import json
from datetime import datetime
import pandas as pd
from utils.logging_utils import status

TABLE_FORMATS = ('tsv', 'json', 'xlsx')


def rows_to_frame(rows: list, columns: list = None) -> pd.DataFrame:
    """Builds a DataFrame with a fixed column order."""
    frame = pd.DataFrame(rows, columns=columns)
    if columns is None and rows:
        frame = frame[list(rows[0].keys())]
    return frame


def render_table(rows: list, columns: list = None, fmt: str = 'text') -> str:
    """
    Renders rows for stdout.

    Args:
        rows: A list of dictionaries, one per row.
        columns: Optional fixed column order.
        fmt: 'text' (aligned columns), 'tsv' or 'json'.

    Returns:
        The rendered table, newline-terminated.
    """
    frame = rows_to_frame(rows, columns)
    if fmt == 'tsv':
        return frame.to_csv(sep='\t', index=False, lineterminator='\n')
    if fmt == 'json':
        return frame.to_json(orient='records', indent=2, force_ascii=False) + "\n"
    if frame.empty:
        return "(no rows)\n"
    return frame.to_string(index=False) + "\n"


def write_table(rows: list, filename: str, fmt: str = None, columns: list = None):
    """
    Writes rows to a TSV, JSON or xlsx file.

    The format is taken from the extension when fmt is not given.

    Args:
        rows: A list of dictionaries, where each dictionary represents a row.
        filename: The path to the output file.
        fmt: One of TABLE_FORMATS.
        columns: Optional fixed column order.
    """
    fmt = fmt or os.path.splitext(filename)[1].lstrip('.').lower() or 'tsv'
    if fmt not in TABLE_FORMATS:
        raise ValueError(f"Unsupported table format '{fmt}'")
    os.makedirs(os.path.dirname(os.path.abspath(filename)), exist_ok=True)
    frame = rows_to_frame(rows, columns)
    try:
        if fmt == 'tsv':
            frame.to_csv(filename, sep='\t', index=False, lineterminator='\n')
        elif fmt == 'json':
            frame.to_json(filename, orient='records', indent=2, force_ascii=False)
        else:
            frame.to_excel(filename, index=False, engine='openpyxl')
        status(f"📄 Wrote {len(frame)} rows to {os.path.abspath(filename)}")
    except Exception as e:
        status(f"❌ An error occurred while writing to '{filename}': {e}")
        raise


def write_document(document: dict, filename: str = None) -> str:
    """Serializes a nested document as JSON; writes it when filename is given."""
    text = json.dumps(document, indent=2, ensure_ascii=False) + "\n"
    if filename:
        os.makedirs(os.path.dirname(os.path.abspath(filename)), exist_ok=True)
        with open(filename, 'w', encoding='utf-8') as handle:
            handle.write(text)
    return text


def archive_report(output_file: str, archive_dir: str = 'data/archive') -> str:
    """
    Moves a previous report into the archive directory with a timestamp.

    Args:
        output_file: The path to the file to be archived.
        archive_dir: The directory where the file should be archived.

    Returns:
        The full path to the archived file, or None if nothing was archived.
    """
    if os.path.exists(output_file):
        try:
            os.makedirs(archive_dir, exist_ok=True)
            timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
            stem, ext = os.path.splitext(os.path.basename(output_file))
            archive_path = os.path.join(archive_dir, f"{stem}_{timestamp}{ext}")
            os.replace(output_file, archive_path)
            status("🗄️ Previous report archived.")
            return os.path.abspath(archive_path)
        except Exception as e:
            status(f"⚠️ Warning: Could not archive old report. It will be overwritten. Error: {e}")
    return None
