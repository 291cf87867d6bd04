"""CLI golden transcripts: name -> argv (run from tests/data).

Regenerate with ``python tests/golden_cases.py`` after an intended output
change, then review the diff.
"""

import io
import os
import sys
from pathlib import Path

HERE = Path(__file__).parent
DATA = HERE / "data"
GOLDEN = HERE / "golden"

CASES = {
    # eval
    "eval_ok": ["eval", "b1&b2", "11"],
    "eval_out_of_range": ["eval", "b3", "11"],
    "eval_syntax": ["eval", "b1&&", "11"],
    "eval_missing_arg": ["eval", "b1"],
    "eval_bad_pattern": ["eval", "b1", "1x"],
    # canon
    "canon_and": ["canon", "b2&b1", "--width", "2"],
    "canon_tautology": ["canon", "b1|!b1", "--width", "1"],
    "canon_zero": ["canon", "0", "--width", "2"],
    "canon_xor": ["canon", "!(b1 & b2) & (b1 | b2)", "--width", "2"],
    "canon_no_width": ["canon", "b1"],
    "canon_out_of_range": ["canon", "b1 | b3", "--width", "2"],
    "canon_bad_width": ["canon", "b1", "--width", "17"],
    # tt
    "tt_json": ["tt", "b1 & !b2", "--width", "2"],
    "tt_table": ["tt", "b1 | b2 & b3", "--width", "3", "--format", "table"],
    "tt_syntax": ["tt", "b1 |", "--width", "2"],
    # suff
    "suff_and_sufficient": ["suff", "and.jsonl", "--class", "all", "--target", "b1&b2"],
    "suff_two_samples": ["suff", "two.jsonl", "--class", "all", "--target", "b1&b2"],
    "suff_count_only": ["suff", "two.jsonl", "--witnesses", "2"],
    "suff_list_class": ["suff", "two.jsonl", "--class", "list:b1&b2;b1|b2;b1", "--format", "table"],
    "suff_conflict": ["suff", "conflict.jsonl", "--class", "all", "--target", "b1&b2"],
    "suff_malformed": ["suff", "malformed.jsonl"],
    "suff_bad_class": ["suff", "two.jsonl", "--class", "everything"],
    "suff_empty_needs_width": ["suff", "empty.jsonl"],
    "suff_empty_with_width": ["suff", "empty.jsonl", "--width", "1"],
    "suff_missing_file": ["suff", "nope.jsonl"],
    # learn
    "learn_lex": ["learn", "and.jsonl", "--class", "all", "--order", "lex"],
    "learn_given": ["learn", "two.jsonl"],
    "learn_three": ["learn", "three.jsonl", "--order", "lex"],
    "learn_seeded": ["learn", "or.jsonl", "--order", "seeded", "--seed", "5"],
    "learn_table": ["learn", "and.jsonl", "--order", "seeded", "--seed", "1", "--format", "table"],
    "learn_bad_order": ["learn", "and.jsonl", "--order", "random"],
    "learn_conflict": ["learn", "conflict.jsonl"],
    # nn-trace
    "nn_lr0": ["nn-trace", "and.jsonl", "--shape", "2,1", "--lr", "0", "--epochs", "50",
               "--seed", "7"],
    "nn_and": ["nn-trace", "and.jsonl", "--shape", "2,1", "--lr", "0.5", "--epochs", "1000",
               "--seed", "7"],
    "nn_or_table": ["nn-trace", "or.jsonl", "--shape", "2,3,1", "--lr", "0.5", "--epochs",
                    "300", "--seed", "2", "--format", "table"],
    "nn_bad_shape": ["nn-trace", "and.jsonl", "--shape", "2"],
    "nn_bad_lr": ["nn-trace", "and.jsonl", "--shape", "2,1", "--lr", "-1"],
    "nn_width_mismatch": ["nn-trace", "and.jsonl", "--shape", "3,1"],
    # global
    "unknown_flag": ["tt", "b1", "--width", "1", "--verbose"],
    "no_command": [],
}


def run_case(argv):
    from mechlearn.cli import main

    out, err = io.StringIO(), io.StringIO()
    cwd = os.getcwd()
    os.chdir(DATA)
    try:
        code = main(list(argv), stdout=out, stderr=err, stdin=io.StringIO(""))
    finally:
        os.chdir(cwd)
    return f"exit: {code}\n--- stdout\n{out.getvalue()}--- stderr\n{err.getvalue()}"


def regenerate():
    GOLDEN.mkdir(exist_ok=True)
    for name, argv in CASES.items():
        (GOLDEN / f"{name}.txt").write_text(run_case(argv), encoding="utf-8")


if __name__ == "__main__":
    sys.path.insert(0, str(HERE.parent / "src"))
    regenerate()
