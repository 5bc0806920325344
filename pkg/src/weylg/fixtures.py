"""Bundled example tensors, loadable by short name from the CLI."""

from __future__ import annotations

from importlib import resources

from .errors import SchemaError
from .lattice import SqrtBraidingTensor, load_tensor_json

EXAMPLES = {
    "zeta11": "zeta11_d4.json",
    "zeta7": "zeta7_d4.json",
    "zeta3": "zeta3_rank3.json",
    "a2": "a2_d2.json",
}


def load_example(name: str) -> SqrtBraidingTensor:
    if name not in EXAMPLES:
        known = ", ".join(sorted(EXAMPLES))
        raise SchemaError(f"unknown example {name!r}; known: {known}")
    text = (
        resources.files("weylg.data").joinpath(EXAMPLES[name]).read_text("utf-8")
    )
    return load_tensor_json(text)
