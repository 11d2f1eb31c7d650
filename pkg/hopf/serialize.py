"""JSON-ready dictionaries for Hopf algebras and morphisms, in a stable order"""

from typing import Dict

from hopf.algebra import HopfAlgebra, HopfMorphism
from exactla import vec_add_term
from scalar import context_init, parse, render


def vector_to_dict(h: HopfAlgebra, v) -> Dict[str, str]:
    return {h.labels[k]: render(s) for k, s in sorted(v.items())}


def hopf_to_dict(h: HopfAlgebra) -> dict:
    """
    Basis labels plus the sparse structure tensors.

    Multiplication and comultiplication entries are lists of
    [left, right, target, scalar] and [source, left, right, scalar].
    """
    lab = h.labels
    mult = []
    for i in range(h.dim):
        for j in range(h.dim):
            for k, s in sorted(h.mult(i, j).items()):
                mult.append([lab[i], lab[j], lab[k], render(s)])
    comult = []
    for k in range(h.dim):
        for (i, j), s in sorted(h.comult(k).items()):
            comult.append([lab[k], lab[i], lab[j], render(s)])
    antipode = {}
    if h.has_antipode():
        antipode = {lab[i]: vector_to_dict(h, h.antipode(i)) for i in range(h.dim)}
    return {
        'name': h.name,
        'p': h.ctx.p,
        'dim': h.dim,
        'basis': list(lab),
        'generators': [lab[g] for g in h.generators],
        'unit': vector_to_dict(h, h.unit),
        'counit': {lab[i]: render(h.counit(i)) for i in range(h.dim) if not h.counit(i).is_zero()},
        'mult': mult,
        'comult': comult,
        'antipode': antipode,
    }


def morphism_to_dict(phi: HopfMorphism) -> dict:
    return {
        'source': phi.source.name,
        'target': phi.target.name,
        'images': {phi.source.labels[i]: vector_to_dict(phi.target, v) for i, v in sorted(phi.images.items())},
    }


def hopf_from_dict(data: dict) -> HopfAlgebra:
    """Inverse of hopf_to_dict; structure maps are read from the stored tables"""
    ctx = context_init(int(data['p']))
    labels = list(data['basis'])
    index = {label: k for k, label in enumerate(labels)}
    mult: Dict[tuple, dict] = {}
    for left, right, target, text in data['mult']:
        vec_add_term(mult.setdefault((index[left], index[right]), {}), index[target], parse(ctx, text))
    comult: Dict[int, dict] = {}
    for source, left, right, text in data['comult']:
        vec_add_term(comult.setdefault(index[source], {}), (index[left], index[right]), parse(ctx, text))
    antipode = {index[k]: {index[t]: parse(ctx, s) for t, s in v.items()} for k, v in data.get('antipode', {}).items()}
    counit = {index[k]: parse(ctx, s) for k, s in data['counit'].items()}
    return HopfAlgebra(
        ctx, data['name'], labels,
        product=lambda i, j: dict(mult.get((i, j), {})),
        coproduct=lambda k: dict(comult.get(k, {})),
        unit={index[k]: parse(ctx, s) for k, s in data['unit'].items()},
        counit=lambda k: counit.get(k, ctx.zero),
        antipode=(lambda k: dict(antipode.get(k, {}))) if antipode else None,
        generators=[index[g] for g in data.get('generators', labels)],
    )
