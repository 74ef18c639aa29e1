"""Command-line front end: one subcommand per library operation.

Exit codes: 0 success, 1 negative decision (not griddable, no word,
certificate fails, ...), 2 input error, 3 step budget exhausted.
Every subcommand accepts --json for machine-readable output; the text
payloads embedded there round-trip through the module parsers.
"""

import argparse
import json
import random
import sys
from fractions import Fraction

from . import circuits, gridding, graphs, letters, loh, partitions, perms
from .errors import Budget, BudgetExhausted, InputError


def _read(path):
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _budget(args):
    return Budget(getattr(args, "budget", None))


def _emit(args, text, payload):
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text.rstrip("\n"))


def _graph_payload(g):
    return {
        "n": g.n,
        "edges": [list(e) for e in g.sorted_edges()],
        "text": graphs.format_graph(g),
    }


def _decoder_payload(d):
    return {
        "letters": list(d.letters),
        "arcs": [list(a) for a in sorted(d.arcs)],
        "text": letters.format_decoder(d),
    }


def _perm_arg(s):
    return perms.parse_permutation(s)


def _cuts_arg(s):
    return tuple(Fraction(tok) for tok in s.split())


# --- core letter commands --------------------------------------------------

def cmd_decode(args):
    d = letters.parse_decoder(_read(args.decoder))
    w = letters.parse_word(args.word)
    g = letters.decode(d, w)
    _emit(args, graphs.format_graph(g), _graph_payload(g))
    return 0


def cmd_lettericity(args):
    g = graphs.parse_graph(_read(args.graph))
    k, d, w, cert = letters.lettericity_witness(g, _budget(args))
    text = (
        f"lettericity {k}\n"
        + letters.format_decoder(d)
        + "word " + letters.format_word(w) + "\n"
        + "vertices " + " ".join(str(v) for v in cert.order)
    )
    _emit(args, text, {
        "lettericity": k,
        "decoder": _decoder_payload(d),
        "word": list(w),
        "vertices": list(cert.order),
    })
    return 0


def cmd_recognize(args):
    d = letters.parse_decoder(_read(args.decoder))
    g = graphs.parse_graph(_read(args.graph))
    w = letters.recognize(d, g, _budget(args))
    if w is None:
        _emit(args, "no word over this decoder", {"word": None})
        return 1
    _emit(args, letters.format_word(w), {"word": list(w)})
    return 0


def cmd_obstructions(args):
    out = letters.minimal_obstructions(args.k, args.n_max, _budget(args))
    text = "\n".join(graphs.format_graph(g).rstrip("\n") for g in out)
    _emit(args, text or "none", {"obstructions": [_graph_payload(g) for g in out]})
    return 0


# --- perm ------------------------------------------------------------------

def cmd_perm_contains(args):
    hit = perms.contains_pattern(args.perm, args.pattern)
    if hit is None:
        _emit(args, "not contained", {"contained": False, "indices": None})
        return 1
    _emit(args, " ".join(str(i) for i in hit), {"contained": True, "indices": list(hit)})
    return 0


def cmd_perm_invgraph(args):
    g = perms.inversion_graph(args.perm)
    _emit(args, graphs.format_graph(g), _graph_payload(g))
    return 0


def cmd_perm_sum(args):
    out = perms.perm_sum(args.perm, args.other, args.mode)
    _emit(args, perms.format_permutation(out), {"perm": list(out.values)})
    return 0


def cmd_perm_pin(args):
    out = perms.pi_n(args.n)
    _emit(args, perms.format_permutation(out), {"perm": list(out.values)})
    return 0


# --- grid ------------------------------------------------------------------

def cmd_grid_cellgraph(args):
    m = gridding.parse_matrix(_read(args.matrix))
    g = gridding.cell_graph(m)
    labels = [gridding.cell_letter(m, i, j) for i, j in m.nonzero_cells()]
    text = graphs.format_graph(g) + "cells " + " ".join(labels)
    _emit(args, text, {**_graph_payload(g), "cells": labels})
    return 0


def cmd_grid_pmm(args):
    m = gridding.parse_matrix(_read(args.matrix))
    signs = gridding.find_pmm_signs(m)
    if signs is None:
        _emit(args, "not a partial multiplication matrix", {"pmm": False})
        return 1
    text = (
        "columns " + " ".join("+" if s == 1 else "-" for s in signs.column_signs)
        + "\nrows " + " ".join("+" if s == 1 else "-" for s in signs.row_signs)
    )
    _emit(args, text, {
        "pmm": True,
        "column_signs": list(signs.column_signs),
        "row_signs": list(signs.row_signs),
    })
    return 0


def cmd_grid_refine(args):
    m = gridding.parse_matrix(_read(args.matrix))
    out = gridding.refine(m, args.k)
    _emit(args, gridding.format_matrix(out), {"matrix": gridding.format_matrix(out)})
    return 0


def _gridding_payload(found):
    return {
        "griddable": True,
        "vcuts": [str(c) for c in found.vcuts],
        "hcuts": [str(c) for c in found.hcuts],
        "assignment": {str(i): list(cell) for i, cell in sorted(found.assignment.items())},
    }


def cmd_grid_monotone(args):
    m = gridding.parse_matrix(_read(args.matrix))
    if args.vcuts is not None or args.hcuts is not None:
        found = gridding.check_monotone_gridding(
            args.perm, m, args.vcuts or (), args.hcuts or ()
        )
    else:
        found = gridding.monotone_gridding(args.perm, m)
    if found is None:
        _emit(args, "not griddable", {"griddable": False})
        return 1
    text = (
        "vcuts " + " ".join(str(c) for c in found.vcuts)
        + "\nhcuts " + " ".join(str(c) for c in found.hcuts)
        + "\n" + "\n".join(
            f"point {i} -> cell {cell[0]} {cell[1]}"
            for i, cell in sorted(found.assignment.items())
        )
    )
    _emit(args, text, _gridding_payload(found))
    return 0


def cmd_grid_geometric(args):
    m = gridding.parse_matrix(_read(args.matrix))
    w = gridding.geometric_gridding(args.perm, m, _budget(args))
    if w is None:
        _emit(args, "not geometrically griddable", {"griddable": False})
        return 1
    _emit(args, letters.format_word(w), {"griddable": True, "word": list(w)})
    return 0


def _signs_or_die(m):
    signs = gridding.find_pmm_signs(m)
    if signs is None:
        raise InputError("matrix is not a partial multiplication matrix")
    return signs


def cmd_grid_phi(args):
    m = gridding.parse_matrix(_read(args.matrix))
    pi = gridding.phi(m, _signs_or_die(m), letters.parse_word(args.word))
    _emit(args, perms.format_permutation(pi), {"perm": list(pi.values)})
    return 0


def cmd_grid_decoder(args):
    m = gridding.parse_matrix(_read(args.matrix))
    d = gridding.decoder_from_pmm(m, _signs_or_die(m))
    _emit(args, letters.format_decoder(d), _decoder_payload(d))
    return 0


def cmd_grid_enumerate(args):
    m = gridding.parse_matrix(_read(args.matrix))
    out = gridding.enumerate_class(m, args.n, args.mode, _budget(args))
    text = "\n".join(perms.format_permutation(pi) for pi in out)
    _emit(args, text or "none", {"perms": [list(pi.values) for pi in out]})
    return 0


# --- cc --------------------------------------------------------------------

def _circuit_payload(cc):
    return {
        "n": cc.graph.n,
        "edges": [list(e) for e in cc.graph.sorted_edges()],
        "bags": [list(b) for b in cc.bags],
        "text": circuits.format_chain_circuit(cc),
    }


def cmd_cc_generate(args):
    if args.random:
        rng = random.Random(args.seed)
        cc = circuits.random_chain_circuit(rng, args.k, args.max_bag)
    else:
        if args.l is None:
            raise InputError("--l required unless --random")
        cc = circuits.generate_ckl(args.k, args.l)
    _emit(args, circuits.format_chain_circuit(cc), _circuit_payload(cc))
    return 0


def cmd_cc_complement(args):
    cc = circuits.parse_chain_circuit(_read(args.circuit))
    out = circuits.cc_complement(cc)
    _emit(args, circuits.format_chain_circuit(out), _circuit_payload(out))
    return 0


def cmd_cc_conflict(args):
    cc = circuits.parse_chain_circuit(_read(args.circuit))
    conf = circuits.conflict(cc)
    arcs = sorted(conf.arcs)
    text = "\n".join(f"{a} -> {b}" for a, b in arcs)
    _emit(args, text or "no arcs", {
        "nodes": list(conf.nodes),
        "arcs": [list(a) for a in arcs],
    })
    return 0


def _encoding_text(enc):
    return (
        letters.format_decoder(enc.decoder)
        + "word " + letters.format_word(enc.word) + "\n"
        + "vertices " + " ".join(str(v) for v in enc.vertices)
    )


def _encoding_payload(enc):
    return {
        "decoder": _decoder_payload(enc.decoder),
        "word": list(enc.word),
        "vertices": list(enc.vertices),
        "letters_used": enc.letters_used,
    }


def cmd_cc_cyclicword(args):
    cc = circuits.parse_chain_circuit(_read(args.circuit))
    enc = circuits.cyclic_word(cc)
    if enc is None:
        cyc = circuits.conflict_cycle(cc)
        text = "conflict cycle " + " ".join(str(v) for v in cyc)
        _emit(args, text, {"word": None, "conflict_cycle": list(cyc)})
        return 1
    _emit(args, _encoding_text(enc), _encoding_payload(enc))
    return 0


def cmd_cc_encode(args):
    cc = circuits.parse_chain_circuit(_read(args.circuit))
    enc = circuits.encode(cc, _budget(args))
    _emit(args, _encoding_text(enc), _encoding_payload(enc))
    return 0


def cmd_cc_twisted(args):
    graph, bags, signs = circuits.generate_twisted(args.k, args.l)
    lines = [graphs.format_graph(graph).rstrip("\n")]
    for i, bag in enumerate(bags, 1):
        lines.append(f"bag {i} : " + " ".join(str(v) for v in bag))
    for (a, b), s in sorted(signs.items()):
        lines.append(f"sign {a} {b} {'+' if s == 1 else '-'}")
    _emit(args, "\n".join(lines), {
        **_graph_payload(graph),
        "bags": [list(b) for b in bags],
        "signs": {f"{a} {b}": s for (a, b), s in sorted(signs.items())},
    })
    return 0


# --- partition -------------------------------------------------------------

def _param_cmd(fn):
    def run(args):
        g = graphs.parse_graph(_read(args.graph))
        val = fn(g, _budget(args))
        _emit(args, str(val), {"value": val})
        return 0
    return run


def cmd_partition_check(args):
    g = graphs.parse_graph(_read(args.graph))
    cert = partitions.parse_certificate(_read(args.certificate))
    ok = partitions.check_partition(g, cert, args.level)
    if ok:
        _emit(args, "certificate valid", {"valid": True})
        return 0
    payload = {"valid": False}
    text = "certificate invalid"
    if args.level in ("semi", "proper") and partitions.chain_pairs_ok(g, cert.bags):
        bad = partitions.proper_violations(g, cert, args.level)
        payload["violating_pairs"] = [list(p) for p in bad]
        text += "".join(f"\nbag pair {i} {j} violates the order condition" for i, j in bad)
    _emit(args, text, payload)
    return 1


def cmd_partition_linked(args):
    lcg = partitions.linked_chain(args.perm)
    cert = partitions.canonical_certificate(lcg)
    text = (
        graphs.format_graph(lcg.graph)
        + partitions.format_certificate(cert).rstrip("\n")
    )
    _emit(args, text, {
        **_graph_payload(lcg.graph),
        "certificate": partitions.format_certificate(cert),
    })
    return 0


def cmd_partition_apgrid(args):
    grid, k = partitions.parse_colouring(_read(args.colouring))
    wit = partitions.ap_grid_search(grid, k)
    if wit is None:
        _emit(args, "no monochromatic progression grid", {"found": False})
        return 1
    text = (
        "X " + " ".join(str(v) for v in wit.x)
        + "\nY " + " ".join(str(v) for v in wit.y)
        + f"\ncolour {wit.colour}"
    )
    _emit(args, text, {
        "found": True,
        "x": list(wit.x),
        "y": list(wit.y),
        "colour": wit.colour,
    })
    return 0


# --- loh -------------------------------------------------------------------

def cmd_loh_validate(args):
    h = loh.parse_loh(_read(args.loh))
    _emit(args, "valid", {"valid": True, "text": loh.format_loh(h)})
    return 0


def cmd_loh_cells(args):
    h = loh.parse_loh(_read(args.loh))
    cs = loh.cells(h)
    text = "\n".join("cell " + " ".join(sorted(c, key=str)) for c in cs)
    _emit(args, text, {"cells": [sorted(c, key=str) for c in cs]})
    return 0


def cmd_loh_consistent(args):
    h = loh.parse_loh(_read(args.loh))
    order = loh.is_globally_consistent(h)
    if order is None:
        cyc = loh.consistency_witness_cycle(h)
        text = "conflict cycle " + " ".join(str(x) for x in cyc)
        _emit(args, text, {"consistent": False, "conflict_cycle": list(cyc)})
        return 1
    _emit(args, "order " + " ".join(str(x) for x in order),
          {"consistent": True, "order": list(order)})
    return 0


def cmd_loh_split(args):
    h = loh.parse_loh(_read(args.loh))
    out = loh.split(h, args.element)
    _emit(args, loh.format_loh(out), {"text": loh.format_loh(out)})
    return 0


def cmd_loh_inconsistency(args):
    h = loh.parse_loh(_read(args.loh))
    val = loh.global_inconsistency(h, args.budget)
    _emit(args, str(val), {"inconsistency": val})
    return 0


def cmd_loh_fromcc(args):
    cc = circuits.parse_chain_circuit(_read(args.circuit))
    h = loh.from_chain_circuit(cc)
    _emit(args, loh.format_loh(h), {"text": loh.format_loh(h)})
    return 0


# --- plot ------------------------------------------------------------------

def _svg(width, height, body):
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">\n'
        + body
        + "</svg>\n"
    )


def _perm_points(pi, scale, pad):
    return [
        (pad + (i - Fraction(1, 2)) * scale, pad + (len(pi) - pi[i] + Fraction(1, 2)) * scale)
        for i in range(1, len(pi) + 1)
    ]


def _svg_out(args, svg):
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(svg)
        if not args.json:
            print(f"wrote {args.output}")
    elif not args.json:
        print(svg.rstrip("\n"))
    if args.json:
        print(json.dumps({"svg": svg, "output": args.output}, indent=2))


def cmd_plot_perm(args):
    pi = args.perm
    scale, pad = 40, 20
    size = 2 * pad + len(pi) * scale
    body = f'<rect x="{pad}" y="{pad}" width="{len(pi) * scale}" ' \
           f'height="{len(pi) * scale}" fill="none" stroke="black"/>\n'
    for x, y in _perm_points(pi, scale, pad):
        body += f'<circle cx="{float(x)}" cy="{float(y)}" r="4" fill="black"/>\n'
    _svg_out(args, _svg(size, size, body))
    return 0


def cmd_plot_gridding(args):
    pi = args.perm
    m = gridding.parse_matrix(_read(args.matrix))
    found = gridding.monotone_gridding(pi, m)
    if found is None:
        _emit(args, "not griddable", {"griddable": False})
        return 1
    scale, pad = 40, 20
    n = len(pi)
    size = 2 * pad + n * scale
    body = ""
    # s+1 vertical and t+1 horizontal grid lines: borders plus the cuts
    for c in (Fraction(0),) + tuple(found.vcuts) + (Fraction(n),):
        x = float(pad + c * scale)
        body += f'<line x1="{x}" y1="{pad}" x2="{x}" y2="{pad + n * scale}" stroke="grey"/>\n'
    for c in (Fraction(0),) + tuple(found.hcuts) + (Fraction(n),):
        y = float(pad + (n - c) * scale)
        body += f'<line x1="{pad}" y1="{y}" x2="{pad + n * scale}" y2="{y}" stroke="grey"/>\n'
    for x, y in _perm_points(pi, scale, pad):
        body += f'<circle cx="{float(x)}" cy="{float(y)}" r="4" fill="black"/>\n'
    _svg_out(args, _svg(size, size, body))
    return 0


# --- parser ----------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # route argparse failures through the input-error exit code
        raise InputError(message)


def _add_common(p):
    p.add_argument("--json", action="store_true", help="JSON output")


def _add_budget(p):
    p.add_argument("--budget", type=int, default=None, help="search step limit")


def build_parser():
    top = _Parser(prog="lettergrid", description=__doc__)
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decode", help="decode a word over a decoder")
    p.add_argument("--decoder", required=True)
    p.add_argument("--word", required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_decode)

    p = sub.add_parser("lettericity", help="exact lettericity with witness")
    p.add_argument("--graph", required=True)
    _add_common(p)
    _add_budget(p)
    p.set_defaults(fn=cmd_lettericity)

    p = sub.add_parser("recognize", help="word over a fixed decoder")
    p.add_argument("--decoder", required=True)
    p.add_argument("--graph", required=True)
    _add_common(p)
    _add_budget(p)
    p.set_defaults(fn=cmd_recognize)

    p = sub.add_parser("obstructions", help="minimal graphs beyond k letters")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    _add_common(p)
    _add_budget(p)
    p.set_defaults(fn=cmd_obstructions)

    perm = sub.add_parser("perm", help="permutation operations").add_subparsers(
        dest="sub", required=True
    )
    p = perm.add_parser("contains")
    p.add_argument("--perm", type=_perm_arg, required=True)
    p.add_argument("--pattern", type=_perm_arg, required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_perm_contains)
    p = perm.add_parser("invgraph")
    p.add_argument("--perm", type=_perm_arg, required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_perm_invgraph)
    p = perm.add_parser("sum")
    p.add_argument("--perm", type=_perm_arg, required=True)
    p.add_argument("--other", type=_perm_arg, required=True)
    p.add_argument("--mode", choices=("direct", "skew"), default="direct")
    _add_common(p)
    p.set_defaults(fn=cmd_perm_sum)
    p = perm.add_parser("pin")
    p.add_argument("--n", type=int, required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_perm_pin)

    grid = sub.add_parser("grid", help="grid matrix operations").add_subparsers(
        dest="sub", required=True
    )
    p = grid.add_parser("cellgraph")
    p.add_argument("--matrix", required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_grid_cellgraph)
    p = grid.add_parser("pmm")
    p.add_argument("--matrix", required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_grid_pmm)
    p = grid.add_parser("refine")
    p.add_argument("--matrix", required=True)
    p.add_argument("--k", type=int, required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_grid_refine)
    p = grid.add_parser("monotone")
    p.add_argument("--perm", type=_perm_arg, required=True)
    p.add_argument("--matrix", required=True)
    p.add_argument("--vcuts", type=_cuts_arg, default=None)
    p.add_argument("--hcuts", type=_cuts_arg, default=None)
    _add_common(p)
    p.set_defaults(fn=cmd_grid_monotone)
    p = grid.add_parser("geometric")
    p.add_argument("--perm", type=_perm_arg, required=True)
    p.add_argument("--matrix", required=True)
    _add_common(p)
    _add_budget(p)
    p.set_defaults(fn=cmd_grid_geometric)
    p = grid.add_parser("phi")
    p.add_argument("--matrix", required=True)
    p.add_argument("--word", required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_grid_phi)
    p = grid.add_parser("decoder")
    p.add_argument("--matrix", required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_grid_decoder)
    p = grid.add_parser("enumerate")
    p.add_argument("--matrix", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("grid", "geom"), required=True)
    _add_common(p)
    _add_budget(p)
    p.set_defaults(fn=cmd_grid_enumerate)

    cc = sub.add_parser("cc", help="chain circuit operations").add_subparsers(
        dest="sub", required=True
    )
    p = cc.add_parser("generate")
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--l", type=int, default=None)
    p.add_argument("--random", action="store_true")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--max-bag", type=int, default=4)
    _add_common(p)
    p.set_defaults(fn=cmd_cc_generate)
    p = cc.add_parser("complement")
    p.add_argument("--circuit", required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_cc_complement)
    p = cc.add_parser("conflict")
    p.add_argument("--circuit", required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_cc_conflict)
    p = cc.add_parser("cyclicword")
    p.add_argument("--circuit", required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_cc_cyclicword)
    p = cc.add_parser("encode")
    p.add_argument("--circuit", required=True)
    _add_common(p)
    _add_budget(p)
    p.set_defaults(fn=cmd_cc_encode)
    p = cc.add_parser("twisted")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_cc_twisted)

    part = sub.add_parser("partition", help="chain partition parameters").add_subparsers(
        dest="sub", required=True
    )
    for name, fn in (
        ("gamma", partitions.gamma),
        ("sigma", partitions.sigma),
        ("lambda", partitions.lambda_),
    ):
        p = part.add_parser(name)
        p.add_argument("--graph", required=True)
        _add_common(p)
        _add_budget(p)
        p.set_defaults(fn=_param_cmd(fn))
    p = part.add_parser("check")
    p.add_argument("--graph", required=True)
    p.add_argument("--certificate", required=True)
    p.add_argument("--level", choices=partitions.LEVELS, required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_partition_check)
    p = part.add_parser("linked")
    p.add_argument("--perm", type=_perm_arg, required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_partition_linked)
    p = part.add_parser("apgrid")
    p.add_argument("--colouring", required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_partition_apgrid)

    lohp = sub.add_parser("loh", help="locally ordered hypergraphs").add_subparsers(
        dest="sub", required=True
    )
    p = lohp.add_parser("validate")
    p.add_argument("--loh", required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_loh_validate)
    p = lohp.add_parser("cells")
    p.add_argument("--loh", required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_loh_cells)
    p = lohp.add_parser("consistent")
    p.add_argument("--loh", required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_loh_consistent)
    p = lohp.add_parser("split")
    p.add_argument("--loh", required=True)
    p.add_argument("--element", required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_loh_split)
    p = lohp.add_parser("inconsistency")
    p.add_argument("--loh", required=True)
    p.add_argument("--budget", type=int, default=None, help="split depth limit")
    _add_common(p)
    p.set_defaults(fn=cmd_loh_inconsistency)
    p = lohp.add_parser("fromcc")
    p.add_argument("--circuit", required=True)
    _add_common(p)
    p.set_defaults(fn=cmd_loh_fromcc)

    plot = sub.add_parser("plot", help="SVG figures").add_subparsers(
        dest="sub", required=True
    )
    p = plot.add_parser("perm")
    p.add_argument("--perm", type=_perm_arg, required=True)
    p.add_argument("--output", "-o", default=None)
    _add_common(p)
    p.set_defaults(fn=cmd_plot_perm)
    p = plot.add_parser("gridding")
    p.add_argument("--perm", type=_perm_arg, required=True)
    p.add_argument("--matrix", required=True)
    p.add_argument("--output", "-o", default=None)
    _add_common(p)
    p.set_defaults(fn=cmd_plot_gridding)

    return top


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.fn(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetExhausted as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        if exc.best is not None:
            print(f"best known: {exc.best}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
