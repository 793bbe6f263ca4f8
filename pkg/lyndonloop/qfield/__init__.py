from .laurent import QLaurent, parse_laurent  # noqa
from .qnumbers import q_binomial, q_int  # noqa
from .qrat import QRat, evaluate_at, field_ops, parse_qrat  # noqa
