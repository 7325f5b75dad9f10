"""Category-data files: a JSON text format with exact scalars.

Scalars are serialised as fraction strings ("2/3", "-1") so files are
human-diffable and round-trip bit for bit.  Structure constants are sparse:
missing entries are zero.  Loaders run the full validation pass by default.
"""

from __future__ import annotations

import json

from .errors import ShapeError
from .fincat import CategoryPresentation, Obj, validate_category
from .linalg import GF, QQ, Field

FORMAT_VERSION = 1

_KNOWN_KEYS = {
    "format_version",
    "field",
    "indecomposables",
    "sigma",
    "hom",
    "comp",
    "identities",
    "metadata",
}


def _field_tag(field: Field):
    if field is QQ:
        return "Q"
    return {"Fp": field.p}


def _field_from_tag(tag) -> Field:
    if tag == "Q":
        return QQ
    if isinstance(tag, dict) and set(tag) == {"Fp"}:
        return GF(int(tag["Fp"]))
    raise ShapeError(f"unknown field tag {tag!r}")


def presentation_to_dict(P: CategoryPresentation) -> dict:
    field = P.field
    hom = []
    for i in range(P.n):
        for j in range(P.n):
            d = P.hom_dim(i, j)
            if d:
                hom.append({"src": P.objects[i], "dst": P.objects[j], "dim": d})
    comp = []
    for (i, j, k) in sorted(P.comp.keys()):
        table = P.comp[(i, j, k)]
        for a, row in enumerate(table):
            for b, vec in enumerate(row):
                for c, x in enumerate(vec):
                    if x != field.zero:
                        comp.append(
                            {
                                "i": P.objects[i],
                                "j": P.objects[j],
                                "k": P.objects[k],
                                "a": a,
                                "b": b,
                                "c": c,
                                "coeff": field.fmt(x),
                            }
                        )
    comp.sort(key=lambda e: (e["i"], e["j"], e["k"], e["a"], e["b"], e["c"]))
    doc = {
        "format_version": FORMAT_VERSION,
        "field": _field_tag(field),
        "indecomposables": list(P.objects),
        "hom": hom,
        "comp": comp,
        "identities": [[field.fmt(x) for x in v] for v in P.identities],
        "metadata": P.metadata,
    }
    if P.sigma is not None:
        doc["sigma"] = list(P.sigma)
    return doc


def presentation_from_dict(doc: dict, strict: bool = True, validate: bool = True) -> CategoryPresentation:
    if strict:
        unknown = set(doc) - _KNOWN_KEYS
        if unknown:
            raise ShapeError(f"unknown fields in category file: {sorted(unknown)}")
    if doc.get("format_version") != FORMAT_VERSION:
        raise ShapeError(f"unsupported format_version {doc.get('format_version')!r}")
    field = _field_from_tag(doc["field"])
    objects = list(doc["indecomposables"])
    index = {name: i for i, name in enumerate(objects)}
    hom = {}
    for entry in doc["hom"]:
        hom[(index[entry["src"]], index[entry["dst"]])] = int(entry["dim"])

    def dim(i, j):
        return hom.get((i, j), 0)

    comp: dict = {}
    for entry in doc["comp"]:
        i, j, k = index[entry["i"]], index[entry["j"]], index[entry["k"]]
        key = (i, j, k)
        if key not in comp:
            comp[key] = [
                [[field.zero] * dim(i, k) for _ in range(dim(j, k))]
                for _ in range(dim(i, j))
            ]
        comp[key][int(entry["a"])][int(entry["b"])][int(entry["c"])] = field.parse(entry["coeff"])
    identities = [[field.parse(x) for x in vec] for vec in doc["identities"]]
    P = CategoryPresentation(
        field,
        objects,
        hom,
        comp,
        identities,
        sigma=doc.get("sigma"),
        metadata=doc.get("metadata", {}),
    )
    if validate:
        rep = validate_category(P)
        if not rep.ok:
            raise ShapeError(f"category file does not validate: {rep}")
    return P


def save_category(P: CategoryPresentation, path: str):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(presentation_to_dict(P), fh, indent=1, sort_keys=True)
        fh.write("\n")


def load_category(path: str, strict: bool = True, validate: bool = True) -> CategoryPresentation:
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    return presentation_from_dict(doc, strict=strict, validate=validate)


# -- object specs -------------------------------------------------------------


def resolve_object_name(P: CategoryPresentation, name: str) -> int:
    """Index of an indecomposable, accepting metadata aliases."""
    if name in P.objects:
        return P.index(name)
    alias = P.metadata.get("aliases", {})
    if name in alias and alias[name] in P.objects:
        return P.index(alias[name])
    raise ShapeError(f"unknown object name {name!r}")


def parse_object_spec(P: CategoryPresentation, spec: str) -> Obj:
    """Parse 'P1+P2^2+SP3' (or comma-separated) into an object."""
    mult = [0] * P.n
    for part in spec.replace(",", "+").split("+"):
        part = part.strip()
        if not part:
            continue
        if "^" in part:
            name, _, power = part.partition("^")
            count = int(power)
        else:
            name, count = part, 1
        mult[resolve_object_name(P, name.strip())] += count
    return Obj(tuple(mult))
