import json

from ... import formats
from ...homology import betti_exact, betti_hodge


def betti(file, hodge=False):
    """Exact reduced Betti numbers as a JSON string.

    With ``hodge``, the kernel dimensions of ``L_k^ω`` are reported next to
    them under ``"hodge"``.

    """
    W = formats.load(file)
    numbers = betti_exact(W.complex)
    if not hodge:
        return json.dumps(numbers.to_dict())
    kernels = {
        str(k): betti_hodge(W, k) for k in range(-1, W.complex.dim + 1)
    }
    return json.dumps({"exact": numbers.to_dict(), "hodge": kernels})
