"""Exact verification kernel for braided exchange algebras.

The heavy lifting lives in the compiled extension ``_uqfm``: a registry of
exact symbolic checks (run over both the generic coefficient field and a
rational numeric point), element normal forms in the supported
presentations, named central elements, and exact matrix export as JSON.
"""

from ._uqfm import (
    IllegalLetter,
    UnknownName,
    __version__,
    central_element,
    export_matrix_json,
    export_object_names,
    list_checks,
    nf,
    run_checks,
    suite_names,
)

__all__ = [
    "IllegalLetter",
    "UnknownName",
    "__version__",
    "central_element",
    "export_matrix_json",
    "export_object_names",
    "list_checks",
    "nf",
    "run_checks",
    "suite_names",
]
