import csv
from pathlib import Path


def write_csv(path, header, rows):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for r in rows:
            w.writerow([f"{v:.9g}" if isinstance(v, float) else v for v in r])
    return path


def trace_rows(trace):
    return [[phi, k, e.real, e.imag] for phi, es in zip(trace.phis, trace.energies) for k, e in enumerate(es)]
