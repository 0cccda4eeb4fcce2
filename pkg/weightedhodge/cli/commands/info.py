import json

from ... import formats
from ...complex import f_vector, h, is_clique_complex, missing_faces


def info(file):
    """Summary of a complex file as a JSON string.

    Args:
        file (str): Path to the complex file.

    """
    W = formats.load(file)
    X = W.complex
    data = {
        "n": X.n,
        "dim": X.dim,
        "void": X.void,
        "f_vector": f_vector(X),
        "total_weight": str(W.total),
        "ghosts": list(X.ghosts),
    }
    if X.void:
        data.update(h=None, missing_faces=[], clique_complex=False)
    else:
        data.update(
            h=h(X),
            missing_faces=[list(X.labels(f)) for f in missing_faces(X)],
            clique_complex=is_clique_complex(X),
        )
    return json.dumps(data, indent=2)
