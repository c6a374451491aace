"""DOT emission of Hasse diagrams for posets and dual lattices.

Plain digraphs only: quoted node ids, optional label attributes, and
lower -> upper edges from the transitive reduction.
"""

from .dual import DualLattice, lambda_of, upsilon_of
from .poset import FinitePoset, poset_from_relations, transitive_reduction


def support_label(x):
    """Stable set notation for a member's support, e.g. '{a,b}' or '{}'."""
    return "{" + ",".join(x.support_elements()) + "}"


def emit_poset_dot(poset, name="P"):
    covers = transitive_reduction(poset)
    lines = [f"digraph {name} {{"]
    for e in poset.elements:
        lines.append(f'  "{e}";')
    for lower, upper in covers.pairs:
        lines.append(f'  "{lower}" -> "{upper}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _member_poset(lattice):
    # The lattice itself as a finite poset over canonical member indices,
    # so cover edges come from the same transitive-reduction code path.
    names = [f"m{i}" for i in range(len(lattice.members))]
    pairs = []
    for i, x in enumerate(lattice.members):
        for j, y in enumerate(lattice.members):
            if i != j and x.support & ~y.support == 0:
                pairs.append((names[i], names[j]))
    return poset_from_relations(names, pairs, max_elements=len(names) or 1)


def emit_lattice_dot(lattice, name="L", label_embeddings=False):
    """DOT digraph of the lattice's Hasse diagram.

    With label_embeddings, members that equal an embedded base element
    carry a trailing annotation such as 'λ:a,υ:b'.
    """
    annotations = {}
    if label_embeddings:
        for p in lattice.base.elements:
            annotations.setdefault(lambda_of(lattice, p).support, []).append(
                f"λ:{p}"
            )
        for p in lattice.base.elements:
            annotations.setdefault(upsilon_of(lattice, p).support, []).append(
                f"υ:{p}"
            )

    lines = [f"digraph {name} {{"]
    for i, x in enumerate(lattice.members):
        label = support_label(x)
        notes = annotations.get(x.support)
        if notes:
            label = f"{label} {','.join(notes)}"
        lines.append(f'  "m{i}" [label="{label}"];')
    member_poset = _member_poset(lattice)
    for lower, upper in transitive_reduction(member_poset).pairs:
        lines.append(f'  "{lower}" -> "{upper}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def emit_dot(obj, name=None, label_embeddings=False):
    if isinstance(obj, FinitePoset):
        return emit_poset_dot(obj, name or "P")
    if isinstance(obj, DualLattice):
        return emit_lattice_dot(obj, name or "L", label_embeddings=label_embeddings)
    raise TypeError(f"cannot emit DOT for {type(obj).__name__}")
