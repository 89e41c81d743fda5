"""Assemble all invariants of one braid into a single report.

The report is a plain dict with a fixed key order, so that JSON output
is deterministic byte for byte.  A non-transitive braid still produces a
report: the braid data and the Lefschetz number are always present, the
geometric sections (which need the single closed orbit that gets
surgered) are null and ``warning`` says why.
"""

from __future__ import annotations

from ._version import __version__
from .braids import BraidWord, induced_permutation, is_transitive, parse_braid
from .floer import (FRAMING_NOTE, MONOTONE_REDUCTION_STATEMENT,
                    RESCALING_CAVEAT, SYMPLECTIC_CLASS_NOTE,
                    dims_lower_bound, predict_fiber_sum)
from .fourmanifold import (SumConfiguration, abelianization,
                           anticanonical_tori, assemble_pi1,
                           characteristic_numbers, configuration_from_dict,
                           configuration_to_dict, default_configuration,
                           mapping_torus_presentation, standard_form_order,
                           tietze_simplify)
from .freegroup import artin_endo
from .nielsen import nielsen_decomposition, refine_decomposition

STATEMENTS = (FRAMING_NOTE, MONOTONE_REDUCTION_STATEMENT,
              RESCALING_CAVEAT, SYMPLECTIC_CLASS_NOTE)


def build_report(braid: BraidWord | str, refine_depth: int = 0,
                 config_data: dict | None = None) -> dict:
    """Compute every invariant for one braid.

    ``config_data`` is a parsed gluing-configuration dict (see
    ``configuration_from_dict``); volume tokens "d" resolve against this
    braid.  ``refine_depth`` > 0 adds the bounded twisted-conjugacy
    refinement of the raw trace terms.
    """
    if isinstance(braid, str):
        braid = parse_braid(braid)
    if refine_depth < 0:
        raise ValueError("refine_depth must be >= 0")
    sigma = induced_permutation(braid)
    transitive = is_transitive(braid)
    endo = artin_endo(braid)
    nd = nielsen_decomposition(endo)

    warning = None
    config = nielsen = floer_bound = fiber_sum = pi1 = None
    char_numbers = tori = refined = None
    if transitive:
        cfg = (configuration_from_dict(config_data, braid.d)
               if config_data is not None else default_configuration(braid.d))
        config = configuration_to_dict(cfg)
        nielsen = _nielsen_section(nd)
        floer_bound = _dims_section(dims_lower_bound(nd))
        fiber_sum = _fiber_sum_section(nd, braid.d)
        pi1 = _pi1_section(braid)
        char_numbers = characteristic_numbers(cfg)._asdict()
        tori = anticanonical_tori(braid.d)._asdict()
        if refine_depth > 0:
            refined = _refined_section(endo, refine_depth)
    else:
        warning = (
            f"braid induces {_cycle_text(sigma)}, not the standard cycle "
            "(1 2 ... d); no orbit torus to surger, geometric sections "
            "are null")

    return {
        "tool": {"name": "braidfloer", "version": __version__},
        "config": config,
        "input": braid.to_text(),
        "d": braid.d,
        "permutation": list(sigma.images),
        "transitive": transitive,
        "warning": warning,
        "lefschetz": nd.lefschetz,
        "nielsen": nielsen,
        "floer_bound": floer_bound,
        "fiber_sum": fiber_sum,
        "pi1": pi1,
        "characteristic_numbers": char_numbers,
        "anticanonical_tori": tori,
        "statements": list(STATEMENTS),
        "refined": refined,
    }


def _cycle_text(sigma) -> str:
    return "permutation " + " ".join(
        "(" + " ".join(map(str, c)) + ")" for c in sigma.cycles())


def _nielsen_section(nd) -> dict:
    group = nd.space.group()
    return {
        "class_space": {
            "invariant_factors": list(nd.space.invariant_factors()),
            "group": group.pretty(),
            "order": group.order(),
        },
        "complete": nd.complete,
        "classes": [
            {"label": list(label),
             "element_order": nd.space.element_order(label),
             "index": index}
            for label, index in nd.entries],
        "bound": nd.bound(),
    }


def _dims_section(f) -> dict:
    return {"even": f.even, "odd": f.odd, "total": f.total(),
            "euler": f.euler(), "exact": f.exact}


def _fiber_sum_section(nd, d: int) -> dict:
    p = predict_fiber_sum(nd, d)
    return {
        "flux_class": p.flux_class,
        "summand_class": p.summand_class,
        "summand": _dims_section(p.summand),
        "summand_total": p.summand_total,
        "zero_torsion_multiples": list(p.zero_torsion_multiples),
        "total": p.total,
        "exact": p.exact,
        "notes": list(p.notes),
    }


def _pi1_section(braid: BraidWord) -> dict:
    assembled = assemble_pi1(braid)
    simplified = tietze_simplify(assembled)
    ab = abelianization(assembled)
    return {
        "mapping_torus": mapping_torus_presentation(braid).to_dict(),
        "assembled": assembled.to_dict(),
        "simplified": simplified.to_dict(),
        "standard_form_order": standard_form_order(simplified),
        "abelianization": {"free_rank": ab.free_rank,
                           "torsion": list(ab.torsion),
                           "pretty": ab.pretty()},
    }


def _refined_section(endo, depth: int) -> dict:
    classes = []
    for rc in refine_decomposition(endo, depth):
        classes.append({
            "label": list(rc.label),
            "clusters": [
                {"size": len(words), "index": coeff,
                 "representative": words[0].to_text()}
                for words, coeff in rc.clusters],
        })
    return {"depth": depth, "classes": classes}


def _presentation_text(p: dict) -> str:
    gens = ", ".join(p["generators"])
    rels = ", ".join(p["relators"])
    return f"< {gens} | {rels} >" if rels else f"< {gens} | >"


def render_text(report: dict) -> str:
    """Human-readable rendering of a report, one invariant per line."""
    lines = [
        f"{report['tool']['name']} {report['tool']['version']}",
        f"input: {report['input']}",
        f"d: {report['d']}",
        "permutation: " + " ".join(map(str, report["permutation"])),
        f"transitive: {'yes' if report['transitive'] else 'no'}",
    ]
    if report["warning"]:
        lines.append(f"warning: {report['warning']}")
    lines.append(f"lefschetz number: {report['lefschetz']}")
    if report["nielsen"] is not None:
        n = report["nielsen"]
        cs = n["class_space"]
        lines.append(
            f"class space: {cs['group']} (order {cs['order']}, "
            f"{'complete' if n['complete'] else 'nonzero classes only'})")
        for c in n["classes"]:
            label = "[" + " ".join(map(str, c["label"])) + "]"
            lines.append(f"  class {label}: index {c['index']} "
                         f"(element order {c['element_order']})")
        lines.append(f"nielsen bound: {n['bound']}")
    if report["floer_bound"] is not None:
        f = report["floer_bound"]
        kind = "exact" if f["exact"] else "lower bound"
        lines.append(f"floer dims ({kind}): even {f['even']}, "
                     f"odd {f['odd']}, total {f['total']}")
    if report["fiber_sum"] is not None:
        p = report["fiber_sum"]
        s = p["summand"]
        kind = "exact" if p["exact"] else "lower bound"
        lines.append(f"fiber sum at flux {p['flux_class']} ({kind}):")
        lines.append(f"  summand at [{p['summand_class']}]: even {s['even']}, "
                     f"odd {s['odd']}, total {p['summand_total']}")
        if p["zero_torsion_multiples"]:
            ks = ", ".join(map(str, p["zero_torsion_multiples"]))
            lines.append(f"  zero summand at k*[{p['summand_class']}] "
                         f"for k = {ks}")
        lines.append(f"  total over both flux generators: {p['total']}")
    if report["pi1"] is not None:
        g = report["pi1"]
        lines.append("pi1 assembled: " + _presentation_text(g["assembled"]))
        lines.append("pi1 simplified: " + _presentation_text(g["simplified"]))
        if g["standard_form_order"] is not None:
            lines.append("pi1 standard form: Z x Z/"
                         f"{g['standard_form_order']} presentation reached")
        lines.append(f"pi1 abelianization: {g['abelianization']['pretty']}")
    if report["characteristic_numbers"] is not None:
        c = report["characteristic_numbers"]
        lines.append(f"characteristic numbers: chi {c['chi']}, "
                     f"sigma {c['sigma']}, c2 {c['c2']}, "
                     f"c1^2 {c['c1_squared']}")
    if report["anticanonical_tori"] is not None:
        t = report["anticanonical_tori"]
        lines.append(f"anticanonical tori: {t['total']} = "
                     f"{t['h1_parallel']} (H1-parallel) + "
                     f"{t['h3_copies']} (H3) + {t['h4_copies']} (H4)")
    if report["refined"] is not None:
        r = report["refined"]
        lines.append(f"refinement (depth {r['depth']}):")
        for c in r["classes"]:
            label = "[" + " ".join(map(str, c["label"])) + "]"
            parts = ", ".join(
                f"{cl['size']} term(s) at {cl['representative']} "
                f"(index {cl['index']})" for cl in c["clusters"])
            lines.append(f"  class {label}: {parts}")
    return "\n".join(lines) + "\n"
