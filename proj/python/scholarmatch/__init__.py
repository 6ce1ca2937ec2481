"""Record linkage between publication authors and social-media accounts."""

from scholarmatch._core import (
    evaluate,
    freq_bucket,
    link,
    normalize,
    parse_display_name,
    parse_handle,
    synth_corpus,
)

__all__ = [
    "evaluate",
    "freq_bucket",
    "link",
    "normalize",
    "parse_display_name",
    "parse_handle",
    "synth_corpus",
]
