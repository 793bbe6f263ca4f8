from . import (  # noqa
    cli,
    errors,
    foshuffle,
    lyndon,
    qfield,
    reporting,
    rootsys,
    shuffle,
    weyl,
    words,
)
from .version import __version__  # noqa
