"""JSON wire formats.

Exactness must survive the wire: every number travels as an exact
rational string ("p/q", or the integer itself), decimal input strings
parse as exact decimal fractions, and user-facing payloads carry an
additional 12-significant-digit decimal rendering for readability.
Serializing a canonical object, parsing it back and serializing again is
byte-identical.

Distribution files look like::

    {"atoms": [{"v": "-1/2", "p": "1/4"}, {"v": "3", "p": "3/4"}]}

Certificates bundle the permutation terms (0-based permutations), the
witnessing joint law and the martingale coupling.
"""

from __future__ import annotations

import decimal
import json
from fractions import Fraction

from .certify import LiftResult, MartingaleCoupling, PermutationCertificate
from .dist import JointDist, SimpleDist, as_rational


def rational_str(x: Fraction) -> str:
    return str(x)


def decimal_str(x: Fraction, digits: int = 12) -> str:
    """Decimal rendering with `digits` significant digits."""
    ctx = decimal.Context(prec=digits)
    return str(ctx.divide(decimal.Decimal(x.numerator), decimal.Decimal(x.denominator)))


def rational_obj(x: Fraction) -> dict:
    """Two-field rendering used for report payloads."""
    return {"rational": rational_str(x), "decimal": decimal_str(x)}


def dist_to_obj(d: SimpleDist) -> dict:
    return {"atoms": [{"v": rational_str(v), "p": rational_str(p)} for v, p in d.atoms]}


def dist_from_obj(obj) -> SimpleDist:
    if not isinstance(obj, dict) or "atoms" not in obj:
        raise ValueError("distribution JSON must be an object with an 'atoms' list")
    atoms = obj["atoms"]
    if not isinstance(atoms, list):
        raise ValueError("'atoms' must be a list")
    pairs = []
    for entry in atoms:
        if not isinstance(entry, dict) or "v" not in entry or "p" not in entry:
            raise ValueError("each atom needs 'v' and 'p' fields")
        pairs.append((as_rational(entry["v"]), as_rational(entry["p"])))
    return SimpleDist.from_pairs(pairs)


def joint_to_obj(j: JointDist) -> dict:
    return {
        "m": j.m,
        "atoms": [
            {"v": [rational_str(x) for x in vec], "p": rational_str(p)}
            for vec, p in j.atoms
        ],
    }


def joint_from_obj(obj) -> JointDist:
    if not isinstance(obj, dict) or "atoms" not in obj:
        raise ValueError("joint JSON must be an object with an 'atoms' list")
    pairs = []
    for entry in obj["atoms"]:
        pairs.append((tuple(as_rational(x) for x in entry["v"]), as_rational(entry["p"])))
    return JointDist.from_pairs(pairs)


def certificate_to_obj(cert: PermutationCertificate) -> dict:
    return {
        "n": cert.n,
        "terms": [
            {"perm": list(perm), "weight": rational_str(w)} for perm, w in cert.terms
        ],
    }


def certificate_from_obj(obj) -> PermutationCertificate:
    if not isinstance(obj, dict) or "n" not in obj or "terms" not in obj:
        raise ValueError("certificate JSON must carry 'n' and 'terms'")
    terms = tuple(
        (tuple(int(i) for i in entry["perm"]), as_rational(entry["weight"]))
        for entry in obj["terms"]
    )
    return PermutationCertificate(n=int(obj["n"]), terms=terms)


def coupling_to_obj(c: MartingaleCoupling) -> dict:
    return {
        "n": c.n,
        "row_values": [rational_str(v) for v in c.row_values],
        "col_values": [rational_str(v) for v in c.col_values],
        "matrix": [[rational_str(x) for x in row] for row in c.matrix],
    }


def coupling_from_obj(obj) -> MartingaleCoupling:
    return MartingaleCoupling(
        n=int(obj["n"]),
        matrix=tuple(tuple(as_rational(x) for x in row) for row in obj["matrix"]),
        row_values=tuple(as_rational(v) for v in obj["row_values"]),
        col_values=tuple(as_rational(v) for v in obj["col_values"]),
    )


def lift_to_obj(res: LiftResult) -> dict:
    return {
        "xi_grid": [rational_str(v) for v in res.xi_grid],
        "eta_grid": [rational_str(v) for v in res.eta_grid],
        "delta": [rational_str(v) for v in res.delta],
        "gamma_top": rational_str(res.gamma_top),
        "lifted_xi": dist_to_obj(res.lifted_xi),
        "lifted_eta": dist_to_obj(res.lifted_eta),
    }


def dumps(obj) -> str:
    """Canonical JSON text: two-space indent, stable key order as built."""
    return json.dumps(obj, indent=2) + "\n"


def load_samples_csv(path: str) -> SimpleDist:
    """Empirical distribution from a one-value-per-line CSV file."""
    from .dist import from_samples

    samples = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            text = line.strip()
            if text:
                samples.append(as_rational(text))
    return from_samples(samples)


def load_dist(path: str) -> SimpleDist:
    """Read a distribution: JSON atom files, or .csv sample files (one
    value per line, equal weights)."""
    if path.endswith(".csv"):
        return load_samples_csv(path)
    with open(path, "r", encoding="utf-8") as fh:
        return dist_from_obj(json.load(fh))


def save_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
