import json

from ... import formats
from ...bounds import report, vanishing_checks


def bounds(file, k, subcomplex=None):
    """The bound report at dimension ``k`` as a JSON string.

    Args:
        file (str): Path to the complex file.
        k (int): Dimension.
        subcomplex (str, optional): Path to a subcomplex file.

    """
    W = formats.load(file)
    Wp = None if subcomplex is None else formats.load(subcomplex)
    data = report(W, k, subcomplex=Wp).to_dict()
    if k >= 0:
        data["vanishing"] = vanishing_checks(W, k, Wp)
    return json.dumps(data, indent=2)
