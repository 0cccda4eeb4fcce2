import json

from ... import formats
from ...operators import laplacian
from ...rational import format_float
from ...spectra import grouped, spectrum_of


def spectrum(
    file, k, operator="full", fmt="json", weights=None, matrix=False
):
    """
    The spectrum (or the exact matrix) of a weighted Laplacian.

    Args:
        file (str): Path to the complex file.
        k (int): Dimension.
        operator (str): ``full``, ``up``, ``down`` or ``up-extended``.
        fmt (str): ``json`` or ``csv``.
        weights (str, optional): A complex file whose weights replace those
            of ``file``, matched by label.
        matrix (bool): Emit the operator matrix instead of its spectrum.

    Returns:
        str: The formatted output.

    """
    W = formats.load(file)
    if weights is not None:
        override = formats.load(weights).weight_map()
        W = W.with_weights({**W.weight_map(), **override})
    M = laplacian(W, k, operator)
    if matrix:
        return M.to_csv() if fmt == "csv" else M.to_json(indent=2)
    s = spectrum_of(M)
    if fmt == "csv":
        lines = ["index,value"]
        lines += [f"{i},{format_float(v)}" for i, v in enumerate(s, 1)]
        return "\n".join(lines)
    data = {
        "k": k,
        "operator": operator,
        "values": list(s.values),
        "grouped": [
            {"value": value, "multiplicity": m}
            for value, m in grouped(s)
        ],
    }
    return json.dumps(data)
