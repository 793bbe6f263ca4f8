import argparse
import json
import logging
import sys
from dataclasses import asdict, dataclass
from itertools import product
from typing import Optional

import pandas as pd

from ..errors import ConfigurationError
from ..foshuffle import (
    upsilon_monomial,
    verify_composition,
    verify_image_constraints,
    verify_wheel_closure,
    wheel_check,
)
from ..lyndon import (
    LoopLyndonTable,
    appendix_closed_form,
    dictionary_tree,
    emit_dictionary,
    verify_convexity,
    verify_exponent_bounds,
    verify_monotone,
    verify_periodicity,
)
from ..reporting import ReportBuilder
from ..rootsys import build, height
from ..shuffle import (
    verify_finite_leading_words,
    verify_loop_leading_words,
    verify_pbw_triangularity,
    verify_serre_images,
)
from ..version import __version__
from ..weyl import recover_reduced_word, verify_reduced_word, verify_weyl_order

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

SUITES = (
    "convexity",
    "exponent-bounds",
    "monotone",
    "periodicity",
    "weyl-order",
    "serre",
    "leading-word",
    "pbw",
    "composition",
    "fo-constraints",
    "all",
)

PBW_HEIGHT = 4
COMPOSITION_LENGTH = 3


@dataclass
class CommandConfig:
    """
    Validated arguments of a command

    Parameters
    ----------
    command : str
        One of tables, word, dictionary, verify

    type_letter : str
        Cartan type, A to G

    rank : int
        Rank of the root system

    suite : str, optional
        Verification suite, for `verify`

    root : tuple of int, optional
        Positive root as simple-root coefficients, for `word`

    d : int
        Vertical degree, for `word`

    letter : int
        First letter of the dictionary, for `dictionary`

    window : int
        Bound on vertical degrees or exponents examined by the sweeps

    count : int, optional
        Length of the beta chain for `weyl-order`

    height : int
        Largest height of the horizontal degrees swept by `pbw`

    output_format : str
        text or json

    seed : int
        Seed of the randomized checks

    latex : bool
        Render words with the LaTeX underline macro

    check : bool
        Annotate `tables` with the closed forms

    verbose : bool
        Log at INFO and show progress bars
    """

    command: str
    type_letter: str = "A"
    rank: int = 2
    suite: Optional[str] = None
    root: Optional[tuple] = None
    d: int = 1
    letter: int = 1
    window: int = 2
    count: Optional[int] = None
    height: int = PBW_HEIGHT
    output_format: str = "text"
    seed: int = 0
    latex: bool = False
    check: bool = False
    verbose: bool = False

    def validate(self):
        self.type_letter = str(self.type_letter).upper()
        cd = build(self.type_letter, self.rank)
        if self.output_format not in ("text", "json"):
            raise ConfigurationError("Unknown format {0!r}".format(self.output_format))
        if self.window < 0:
            raise ConfigurationError("The window must be non-negative")
        if self.count is not None and self.count < 1:
            raise ConfigurationError("The count must be at least 1")
        if self.height < 1:
            raise ConfigurationError("The height must be at least 1")
        if self.command == "verify" and self.suite not in SUITES:
            raise ConfigurationError("Unknown suite {0!r}".format(self.suite))
        if self.command == "word":
            if self.root is None:
                raise ConfigurationError("word needs --root")
            if not cd.is_positive_root(self.root):
                raise ConfigurationError("{0} is not a positive root".format(self.root))
        if self.command == "dictionary" and self.letter not in cd.colors:
            raise ConfigurationError("Letter {0} is not a color".format(self.letter))
        return cd


def _parse_root(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise ConfigurationError("Roots are comma separated integers, got {0!r}".format(text))


def _emit(config: CommandConfig, payload: dict, text: str):
    if config.output_format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def cmd_tables(config: CommandConfig, cd) -> int:
    """Prints l(alpha, d) for every positive root and 1 <= d <= |alpha|"""
    table = LoopLyndonTable(cd)
    rows = []
    for alpha in cd.positive_roots:
        for d in range(1, height(alpha) + 1):
            w = table.word(alpha, d)
            row = {"root": alpha, "d": d, "word": w.render(latex=config.latex)}
            if config.check and cd.is_classical:
                row["closed_form"] = appendix_closed_form(cd, alpha, d) == w
            rows.append(row)
    df = pd.DataFrame(rows)
    failed = "closed_form" in df and not df["closed_form"].all()
    payload = {
        "type": cd.name,
        "rows": [
            {k: (list(v) if k == "root" else v) for k, v in row.items()} for row in rows
        ],
    }
    _emit(config, payload, df.to_string(index=False))
    return EXIT_FAILED if failed else EXIT_OK


def cmd_word(config: CommandConfig, cd) -> int:
    """Prints the standard Lyndon loop word of one loop root"""
    table = LoopLyndonTable(cd)
    w = table.word(config.root, config.d)
    payload = {
        "type": cd.name,
        "root": list(config.root),
        "d": config.d,
        "word": w.to_json(),
        "rendered": w.render(latex=config.latex),
    }
    _emit(config, payload, w.render(latex=config.latex))
    return EXIT_OK


def cmd_dictionary(config: CommandConfig, cd) -> int:
    """Prints the dictionary of fundamental words starting with letter^(1)"""
    words = emit_dictionary(cd, config.letter)
    text = "\n".join(w.render(latex=config.latex) for w in words)
    text += "\n\n" + dictionary_tree(words)
    payload = {
        "type": cd.name,
        "letter": config.letter,
        "words": [w.to_json() for w in words],
    }
    _emit(config, payload, text)
    return EXIT_OK


def _pbw(cd, table, window, max_height=PBW_HEIGHT):
    builder = ReportBuilder("pbw", type=cd.name, height=max_height, window=window)
    for hdeg in product(range(max_height + 1), repeat=cd.rank):
        k = sum(hdeg)
        if not 1 <= k <= max_height:
            continue
        for vdeg in range(k + 1):
            builder.absorb(verify_pbw_triangularity(table, (hdeg, vdeg), (-window, window)))
    return builder.finish()


def _composition(cd, window):
    builder = ReportBuilder("composition", type=cd.name, length=COMPOSITION_LENGTH)
    alphabet = [(i, d) for i in cd.colors for d in (-1, 0, 1)]
    for k in range(1, COMPOSITION_LENGTH + 1):
        for letters in product(alphabet, repeat=k):
            builder.absorb(verify_composition(cd, letters, (-window - 1, window + 1)))
    return builder.finish()


def _fo_constraints(cd, window, seed):
    builder = ReportBuilder("fo-constraints", type=cd.name, window=window + 2)
    for i in cd.colors:
        for j in cd.colors:
            if i == j or cd.a_ij(i, j) == 0:
                continue
            n = 1 - cd.a_ij(i, j)
            samples = [[(i, 0), (j, 0)]]
            if n + 1 <= 4:
                samples.append([(i, 0)] * n + [(j, 0)])
            for letters in samples:
                R = upsilon_monomial(cd, letters)
                outcome = wheel_check(cd, R.numerator, i, j)
                builder.check(outcome.holds, letters=letters, issue="wheel")
                builder.absorb(verify_image_constraints(R, (-window - 2, window + 2)))
    builder.absorb(verify_wheel_closure(cd, samples=10, max_letters=3, seed=seed))
    return builder.finish()


def _run_suite(suite: str, config: CommandConfig, cd, table):
    window = config.window
    progress = config.verbose
    if suite == "convexity":
        return verify_convexity(table, vdeg_bound=window, progress=progress)
    if suite == "exponent-bounds":
        return verify_exponent_bounds(table, window)
    if suite == "monotone":
        return verify_monotone(table, window)
    if suite == "periodicity":
        return verify_periodicity(table, window)
    if suite == "weyl-order":
        rw = recover_reduced_word(table)
        builder = ReportBuilder("weyl-order", type=cd.name)
        builder.absorb(verify_reduced_word(rw))
        builder.absorb(verify_weyl_order(rw, table, config.count or 50))
        return builder.finish()
    if suite == "serre":
        return verify_serre_images(cd, mode_bound=window)
    if suite == "leading-word":
        builder = ReportBuilder("leading-word", type=cd.name)
        builder.absorb(verify_finite_leading_words(cd))
        builder.absorb(verify_loop_leading_words(table, progress=progress))
        return builder.finish()
    if suite == "pbw":
        return _pbw(cd, table, window, config.height)
    if suite == "composition":
        return _composition(cd, window)
    if suite == "fo-constraints":
        return _fo_constraints(cd, window, config.seed)
    raise ConfigurationError("Unknown suite {0!r}".format(suite))


def cmd_verify(config: CommandConfig, cd) -> int:
    """Runs a verification suite; exit 0 iff it passes"""
    table = LoopLyndonTable(cd)
    if config.suite == "all":
        builder = ReportBuilder("all", type=cd.name, window=config.window)
        for suite in SUITES[:-1]:
            logger.info("Running suite %s", suite)
            builder.absorb(_run_suite(suite, config, cd, table))
        report = builder.finish()
    else:
        report = _run_suite(config.suite, config, cd, table)
    _emit(config, report.to_dict(), str(report))
    return EXIT_OK if report.passed else EXIT_FAILED


COMMANDS = {
    "tables": cmd_tables,
    "word": cmd_word,
    "dictionary": cmd_dictionary,
    "verify": cmd_verify,
}


def _add_common(parser):
    parser.add_argument("--type", dest="type_letter", default="A", help="Cartan type, A to G")
    parser.add_argument("--rank", type=int, default=2, help="rank of the root system")
    parser.add_argument("--format", dest="output_format", default="text", choices=["text", "json"])
    parser.add_argument("--latex", action="store_true", help="render words with \\underline")
    parser.add_argument("--verbose", action="store_true", help="log progress")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lyndonloop",
        description="Standard Lyndon loop words, quantum loop groups and shuffle algebras",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    tables = sub.add_parser("tables", help="l(alpha, d) for the fundamental domain")
    tables.add_argument("type_pos", nargs="?", help="Cartan type")
    tables.add_argument("rank_pos", nargs="?", type=int, help="rank")
    tables.add_argument("--check", action="store_true", help="compare with the closed forms")
    _add_common(tables)

    word = sub.add_parser("word", help="the word of a single loop root")
    word.add_argument("--root", type=_parse_root, required=True)
    word.add_argument("--d", type=int, default=1)
    _add_common(word)

    dictionary = sub.add_parser("dictionary", help="the dictionary of one letter")
    dictionary.add_argument("--letter", type=int, default=1)
    _add_common(dictionary)

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("suite", choices=SUITES)
    verify.add_argument("--window", type=int, default=2)
    verify.add_argument("--count", type=int, default=None)
    verify.add_argument("--height", type=int, default=PBW_HEIGHT, help="largest height for pbw")
    verify.add_argument("--seed", type=int, default=0)
    _add_common(verify)
    return parser


def parse_config(argv=None) -> CommandConfig:
    args = vars(build_parser().parse_args(argv))
    type_pos = args.pop("type_pos", None)
    rank_pos = args.pop("rank_pos", None)
    if type_pos is not None:
        args["type_letter"] = type_pos
    if rank_pos is not None:
        args["rank"] = rank_pos
    return CommandConfig(**args)


def main(argv=None) -> int:
    """Entry point of the `lyndonloop` console script"""
    try:
        config = parse_config(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    except ConfigurationError as exc:
        print("error: {0}".format(exc), file=sys.stderr)
        return EXIT_USAGE

    logging.basicConfig(
        level=logging.INFO if config.verbose else logging.WARNING,
        format="%(asctime)s %(name)s %(levelname)s %(message)s",
    )
    try:
        cd = config.validate()
    except ConfigurationError as exc:
        print("error: {0}".format(exc), file=sys.stderr)
        return EXIT_USAGE
    logger.info("Running %s with %s", config.command, asdict(config))
    return COMMANDS[config.command](config, cd)


if __name__ == "__main__":
    sys.exit(main())
