from .main import CommandConfig, build_parser, main, parse_config  # noqa
