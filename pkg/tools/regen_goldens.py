"""Regenerate tests/golden/apoly.json and the CLI rendering goldens.

Only run after `twist-apoly verify --range -6..6` passes; every entry is the
common canonical answer of all three methods.
"""

import contextlib
import io
import json
from pathlib import Path

from twist_apoly.apoly import verify
from twist_apoly.cli import main, terms_record

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"


def cli_output(argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(argv)
    assert code == 0, argv
    return buf.getvalue()


def main_():
    table = {}
    for n in range(-6, 7):
        report = verify(n)
        assert report.agree, n
        table[str(n)] = terms_record(report.canonical)
    lines = [f"  {json.dumps(k)}: {json.dumps(v, separators=(',', ':'))}" for k, v in table.items()]
    (GOLDEN / "apoly.json").write_text("{\n" + ",\n".join(lines) + "\n}\n")
    for fmt in ("text", "latex"):
        out = "".join(
            cli_output(["compute", "-n", str(n), "--format", fmt]) for n in (-1, 0, 1)
        )
        (GOLDEN / f"compute_{fmt}.txt").write_text(out)


if __name__ == "__main__":
    main_()
