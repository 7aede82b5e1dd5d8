"""This is the main file of the project. It contains the command-line
interface and the main menu to classify restricted Lie algebras, list
their classes, verify the classification and emit the class database."""

import argparse
import json
import logging
import os
import sys
from consolemenu import ConsoleMenu
from consolemenu.items import FunctionItem
from field.finite_field import FiniteField
from liealg.lie_algebra import CATALOG_NAMES, catalog_algebra, full_catalog
from pmap.restricted import RestrictedAlgebra
from classify.classifier import classify, list_classes
from verify.oracle import SearchSpaceTooLarge, cross_check

# --------------- Parameters ----------------
OUTPUT_DIR = "output"
BUDGET_PMAPS = 10**7
BUDGET_CONJ = 10**8
WORKERS = 1

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_REJECTED = 2
EXIT_BUDGET = 3


# --------------- For logs ----------------
def setup_logs(command, console=False):
    """
    Truncate the log file of a command and send the root logger to it.

    Args:
        command (str): The command name, used in output/logs/logs_<command>.log.
        console (bool): Whether to also log to the console.
    """
    log_dir = os.path.join(OUTPUT_DIR, "logs")
    if not os.path.exists(log_dir):
        os.makedirs(log_dir)

    filename = os.path.join(log_dir, f"logs_{command}.log")
    open(filename, "w", encoding="utf-8").close()
    logging.basicConfig(
        level=logging.INFO,
        format="%(asctime)s - %(levelname)s - %(message)s",
        filename=filename,
        force=True,
    )

    if console:
        console_handler = logging.StreamHandler()
        console_handler.setLevel(logging.INFO)
        console_handler.setFormatter(logging.Formatter("%(asctime)s - %(levelname)s - %(message)s"))
        logging.getLogger().addHandler(console_handler)


def fail(code, message):
    """Report a diagnostic on stderr and in the log, and return the exit code."""
    logging.error(message)
    print(message, file=sys.stderr)
    return code


def make_field(args):
    modulus = None
    if args.modulus:
        modulus = tuple(int(c) for c in args.modulus.split(","))
    return FiniteField(args.p, args.k, modulus, max_order=args.field_bound)


def dump(data, out=None):
    """
    Write a JSON document with sorted keys to a file, or to stdout.

    Raises:
        OSError: If the file cannot be written.
    """
    text = json.dumps(data, indent=4, sort_keys=True)
    if out is None:
        print(text)
        return
    directory = os.path.dirname(out)
    if directory and not os.path.exists(directory):
        os.makedirs(directory)
    with open(out, "w", encoding="utf-8") as f:
        f.write(text + "\n")
    logging.info("Wrote %s", out)


# --------------- Classify ----------------
def cmd_classify(args):
    """
    Classify the restricted algebra stored in a JSON file and print its label.
    """
    setup_logs("classify")
    try:
        with open(args.input, "r", encoding="utf-8") as f:
            data = json.load(f)
    except (OSError, json.JSONDecodeError) as e:
        return fail(EXIT_PARSE, f"cannot read {args.input}: {e}")

    try:
        R = RestrictedAlgebra.from_json(data, max_order=args.field_bound)
    except (KeyError, TypeError) as e:
        return fail(EXIT_PARSE, f"malformed input {args.input}: missing or invalid {e}")
    except ValueError as e:
        return fail(EXIT_REJECTED, f"invalid input {args.input}: {e}")

    try:
        label = classify(R)
    except ValueError as e:
        return fail(EXIT_REJECTED, f"cannot classify {args.input}: {e}")

    logging.info("%s classified as %s", args.input, label)
    print(json.dumps(label.to_json(R.field), separators=(",", ":")))
    return EXIT_OK


# --------------- Classes ----------------
def cmd_classes(args):
    """
    Print the class list of one catalog algebra.
    """
    setup_logs("classes")
    try:
        F = make_field(args)
        L = catalog_algebra(F, args.algebra)
    except ValueError as e:
        return fail(EXIT_REJECTED, str(e))

    dump(list_classes(L).to_json())
    return EXIT_OK


# --------------- Verify ----------------
def cmd_verify(args):
    """
    Cross-check the classification against the brute-force orbits of every
    selected catalog algebra and print the aggregated report.

    Cases over budget are listed under "skipped" in a full sweep; when the
    algebra was asked for explicitly the command fails with exit code 3.
    """
    setup_logs("verify", console=True)
    try:
        F = make_field(args)
        algebras = [catalog_algebra(F, args.algebra)] if args.algebra else full_catalog(F)
    except ValueError as e:
        return fail(EXIT_REJECTED, str(e))

    print(f"Started verifying over {F!r}...", file=sys.stderr)
    logging.info("Started verifying %d algebras over %r...", len(algebras), F)

    reports, skipped = [], []
    for L in algebras:
        try:
            report = cross_check(L, args.budget_pmaps, args.budget_conj, args.workers)
        except SearchSpaceTooLarge as e:
            if args.algebra:
                return fail(EXIT_BUDGET, f"{L.name} over {F!r}: {e}")
            logging.warning("Skipping %s over %r: %s", L.name, F, e)
            skipped.append({"algebra": L.name, "bound": e.bound, "budget": e.budget})
            continue
        logging.info(
            "%s: %d [p]-maps, %d orbits, %d mismatches",
            L.name,
            report.total,
            len(report.orbits),
            len(report.mismatches),
        )
        reports.append(report)

    ok = all(report.ok for report in reports)
    dump(
        {
            "field": F.spec.to_json(),
            "ok": ok,
            "reports": [report.to_json() for report in reports],
            "skipped": skipped,
        },
        args.out,
    )
    if not ok:
        return fail(EXIT_REJECTED, "the orbits disagree with the class lists")
    logging.info("Verification finished!")
    return EXIT_OK


# --------------- Database ----------------
def cmd_emit_db(args):
    """
    Write the class lists of every catalog algebra over a field as one JSON document.
    """
    setup_logs("emit_db", console=True)
    try:
        F = make_field(args)
    except ValueError as e:
        return fail(EXIT_REJECTED, str(e))

    print("Making the class database...", file=sys.stderr)
    sections = [list_classes(L).to_json() for L in full_catalog(F)]
    database = {
        "field": F.spec.to_json(),
        "class_count": sum(len(section["classes"]) for section in sections),
        "algebras": sections,
    }
    try:
        dump(database, args.out)
    except OSError as e:
        return fail(EXIT_PARSE, f"cannot write {args.out}: {e}")
    logging.info("Database with %d classes finished!", database["class_count"])
    return EXIT_OK


# --------------- Arguments ----------------
def add_field_arguments(parser):
    parser.add_argument("--p", type=int, required=True, help="characteristic")
    parser.add_argument("--k", type=int, default=1, help="extension degree")
    parser.add_argument(
        "--modulus", default=None, help="defining polynomial, little-endian, e.g. 1,1,1"
    )


def build_parser():
    """
    Build the argument parser with one subcommand per action.
    """
    parser = argparse.ArgumentParser(
        prog="main.py", description="Restricted Lie algebras of dimension at most 4"
    )
    parser.add_argument(
        "--field-bound",
        type=int,
        default=FiniteField.MAX_ORDER,
        help="largest accepted field order",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    classify_parser = commands.add_parser("classify", help="classify a restricted algebra file")
    classify_parser.add_argument("input", help="path to a restricted algebra JSON file")
    classify_parser.set_defaults(func=cmd_classify)

    classes_parser = commands.add_parser("classes", help="list the classes of one algebra")
    add_field_arguments(classes_parser)
    classes_parser.add_argument("--algebra", required=True, choices=CATALOG_NAMES)
    classes_parser.set_defaults(func=cmd_classes)

    verify_parser = commands.add_parser("verify", help="check the classes by brute force")
    add_field_arguments(verify_parser)
    verify_parser.add_argument("--algebra", default=None, choices=CATALOG_NAMES)
    verify_parser.add_argument("--budget-pmaps", type=int, default=BUDGET_PMAPS)
    verify_parser.add_argument("--budget-conj", type=int, default=BUDGET_CONJ)
    verify_parser.add_argument("--workers", type=int, default=WORKERS)
    verify_parser.add_argument("--out", default=None, help="write the report to this path")
    verify_parser.set_defaults(func=cmd_verify)

    db_parser = commands.add_parser("emit-db", help="write the class database of a field")
    add_field_arguments(db_parser)
    db_parser.add_argument("--out", default=None, help="write the database to this path")
    db_parser.set_defaults(func=cmd_emit_db)

    return parser


def run(argv):
    """
    Parse the arguments and run the selected command.

    Returns:
        int: The exit code, 0 on success, 1 on unreadable input, 2 on rejected
        input or a failed verification, 3 when a search exceeds its budget.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_PARSE if e.code else EXIT_OK
    for name in ("budget_pmaps", "budget_conj", "workers"):
        if getattr(args, name, 1) < 1:
            return fail(EXIT_PARSE, f"--{name.replace('_', '-')} must be positive")
    return args.func(args)


# --------------- Menu ----------------
def prompt_and_run(command, questions):
    """
    Ask for the arguments of a command on the console, then run it.
    """
    argv = [command]
    for flag, question in questions:
        answer = input(question).strip()
        if not answer:
            continue
        argv.extend([answer] if flag is None else [flag, answer])
    code = run(argv)
    print(f"Exit code: {code}")


FIELD_QUESTIONS = [("--p", "Characteristic p: "), ("--k", "Degree k (default 1): ")]


def create_main_menu():
    """
    Create the main menu with one item per command.
    """
    men = ConsoleMenu("Main Menu", "Choose an action", clear_screen=False)

    classify_item = FunctionItem(
        "Classify a file",
        prompt_and_run,
        ["classify", [(None, "Path to the JSON file: ")]],
        should_exit=True,
    )
    classes_item = FunctionItem(
        "List classes",
        prompt_and_run,
        ["classes", FIELD_QUESTIONS + [("--algebra", "Algebra, e.g. L_{4,2}: ")]],
        should_exit=True,
    )
    verify_item = FunctionItem(
        "Verify",
        prompt_and_run,
        ["verify", FIELD_QUESTIONS + [("--algebra", "Algebra (empty for all): ")]],
        should_exit=True,
    )
    db_item = FunctionItem(
        "Emit database",
        prompt_and_run,
        ["emit-db", FIELD_QUESTIONS + [("--out", "Output path (empty for stdout): ")]],
        should_exit=True,
    )

    men.append_item(classify_item)
    men.append_item(classes_item)
    men.append_item(verify_item)
    men.append_item(db_item)

    return men


if __name__ == "__main__":
    if len(sys.argv) > 1:
        sys.exit(run(sys.argv[1:]))
    menu = create_main_menu()
    menu.show()
