"""Command-line frontend.

Exit codes: 0 success, 1 usage error, 2 enumeration/size cap exceeded,
3 precondition violation, 4 reproduction diff failure.
"""

from __future__ import annotations

import json
import os
import sys
from importlib import resources

import click

from .arrangement import (
    classify,
    conjecture_3412_violations,
    graph_diameter_of,
    sweep,
)
from .encodings import build_U, build_V, eta, psi, render_encoded
from .errors import PreconditionError, RedwordsError, TooLargeError
from .formulas import (
    bounds_21_iota,
    delta_recursion,
    diam_12,
    diam_231_avoiding,
    diam_312_avoiding,
    diam_low_family,
    low_family_forms,
    twelve_splits,
    twentyone_iota_forms,
)
from .oracle import brute_triple, graphs_of
from .perms import Perm, descending
from .wordgraphs import (
    DEFAULT_VERTEX_CAP,
    EdgeKind,
    build_word_graph,
    contract,
    diameter,
    export_dot,
    graph_json,
    payload_label,
)
from .words import DEFAULT_WORD_CAP, count_words, word_str, words_of

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_TOO_LARGE = 2
EXIT_PRECONDITION = 3
EXIT_DIFF = 4


class ReproduceDiff(RedwordsError):
    pass


def _perm(text: str) -> Perm:
    return Perm.parse(text)


@click.group()
@click.option(
    "--threads",
    type=int,
    default=lambda: os.cpu_count() or 1,
    help="Thread budget for the heavy diameter computations.",
)
@click.pass_context
def cli(ctx, threads):
    """Reduced words of permutations and their braid-move graphs."""
    ctx.ensure_object(dict)
    ctx.obj["threads"] = threads


@cli.command("enumerate")
@click.argument("perm")
@click.option("--cap", type=int, default=DEFAULT_WORD_CAP, show_default=True)
def enumerate_cmd(perm, cap):
    """Print R(PERM), one word per line, sorted."""
    for w in words_of(_perm(perm), cap):
        click.echo(word_str(w))


@cli.command("graph")
@click.argument("perm")
@click.option("--contract", "contract_kind", type=click.Choice(["C", "B"]))
@click.option("--dot", "fmt", flag_value="dot")
@click.option("--json", "fmt", flag_value="json", default=True)
@click.option("--cap", type=int, default=DEFAULT_WORD_CAP, show_default=True)
def graph_cmd(perm, contract_kind, fmt, cap):
    """Emit the word graph (or a contraction) as JSON or DOT."""
    g = build_word_graph(_perm(perm), cap)
    if contract_kind:
        g = contract(g, EdgeKind(contract_kind))
    if fmt == "dot":
        click.echo(export_dot(g), nl=False)
    else:
        click.echo(json.dumps(graph_json(g), sort_keys=True))


@cli.command("diameter")
@click.argument("perm")
@click.option("--which", type=click.Choice(["g", "c", "b", "all"]), default="all")
@click.option("--cap", type=int, default=DEFAULT_WORD_CAP, show_default=True)
@click.option("--vertex-cap", type=int, default=DEFAULT_VERTEX_CAP, show_default=True)
@click.pass_context
def diameter_cmd(ctx, perm, which, cap, vertex_cap):
    """Brute-force diameters of G, C, B."""
    threads = ctx.obj["threads"]
    p = _perm(perm)
    g = build_word_graph(p, cap)
    parts = []
    if which in ("g", "all"):
        parts.append(f"g={diameter(g, vertex_cap, threads)}")
    if which in ("c", "all"):
        parts.append(f"c={diameter(contract(g, EdgeKind.COMMUTATION), vertex_cap, threads)}")
    if which in ("b", "all"):
        parts.append(f"b={diameter(contract(g, EdgeKind.LONG_BRAID), vertex_cap, threads)}")
    click.echo(" ".join(parts))


@cli.command("encode")
@click.argument("family", type=click.Choice(["12", "21"]))
@click.argument("alpha")
@click.argument("beta")
@click.option("--cap", type=int, default=DEFAULT_WORD_CAP, show_default=True)
def encode_cmd(family, alpha, beta, cap):
    """Print the encoding set for an inflation with decoded words alongside."""
    al, be = _perm(alpha), _perm(beta)
    if family == "12":
        words = build_U(al, be, cap)
        pairs = [(render_encoded(w), word_str(eta(w, len(al)))) for w in words]
    else:
        words = build_V(al, be, cap)
        pairs = [(render_encoded(w), word_str(psi(w, len(be)))) for w in words]
    width = max((len(enc) for enc, _ in pairs), default=0)
    for enc, decoded in pairs:
        click.echo(f"{enc:<{width}}  {decoded}")


@cli.command("formulas")
@click.argument("perm")
@click.option("--cap", type=int, default=DEFAULT_WORD_CAP, show_default=True)
@click.option("--vertex-cap", type=int, default=DEFAULT_VERTEX_CAP, show_default=True)
@click.pass_context
def formulas_cmd(ctx, perm, cap, vertex_cap):
    """Apply every applicable diameter formula, with brute force if feasible."""
    threads = ctx.obj["threads"]
    p = _perm(perm)
    n = len(p)
    click.echo(f"perm {p}  n={n}  ell={p.length()}")

    def sub_triple(q):
        return brute_triple(q, cap, vertex_cap, threads)

    if p == descending(n) and n >= 1:
        t = delta_recursion(n)
        click.echo(f"delta_recursion: g={t.g} c={t.c} b={t.b}")
    for alpha, beta in twelve_splits(p):
        t = diam_12(sub_triple(alpha), sub_triple(beta), alpha.length(), beta.length())
        click.echo(f"12[{alpha},{beta}]: g={t.g} c={t.c} b={t.b}")
    for alpha, b in twentyone_iota_forms(p):
        a = len(alpha)
        if b == 1:
            from .formulas import diam_21_single

            t = diam_21_single(sub_triple(alpha), alpha.length(), a)
            click.echo(f"21[{alpha},1]: g={t.g} c={t.c} b={t.b}")
        else:
            bd = bounds_21_iota(sub_triple(alpha), alpha.length(), a, b)
            click.echo(
                f"21[{alpha},iota_{b}]: g in [{bd.g_lower},{bd.g_upper}] "
                f"c={bd.c_exact} b in [{bd.b_lower},{bd.b_upper}]"
            )
    if p.avoids(Perm((3, 1, 2))) and n >= 1:
        t = diam_312_avoiding(p)
        click.echo(f"312-avoiding recursion: g={t.g} c={t.c} b={t.b}")
    if p.avoids(Perm((2, 3, 1))) and n >= 1:
        t = diam_231_avoiding(p)
        click.echo(f"231-avoiding recursion: g={t.g} c={t.c} b={t.b}")
    for a, b, c, d in low_family_forms(p):
        click.echo(
            f"low family 12[iota_{c},21[iota_{a},iota_{b}],iota_{d}]: "
            f"g={diam_low_family(a, b, c, d)}"
        )
    size = count_words(p)
    if vertex_cap is None or size <= vertex_cap:
        t = brute_triple(p, cap, vertex_cap, threads)
        click.echo(f"brute force: g={t.g} c={t.c} b={t.b}")
    else:
        click.echo(f"brute force: skipped (|R| = {size} over vertex cap)")


@cli.command("sweep")
@click.argument("n", type=int)
@click.option("--cap", type=int, default=DEFAULT_VERTEX_CAP, show_default=True)
@click.option("--out", type=click.Path(dir_okay=False), default=None)
@click.pass_context
def sweep_cmd(ctx, n, cap, out):
    """Classify all of S_n against the L2 bounds; JSON-lines output."""
    threads = ctx.obj["threads"]
    reports = sweep(n, vertex_cap=cap, threads=threads)
    lines = [json.dumps(r.as_dict(), sort_keys=True) for r in reports]
    summary = {
        "summary": {
            "n": n,
            "covered": sum(1 for r in reports if r.klass != "Skipped"),
            "skipped": sum(1 for r in reports if r.klass == "Skipped"),
            "at_lower": [str(q) for q in (r.perm for r in reports if r.klass == "AtLower")],
            "below_lower": [str(r.perm) for r in reports if r.klass == "BelowLower"],
            "above_upper": [str(r.perm) for r in reports if r.klass == "AboveUpper"],
            "conjecture_3412_violations": [
                str(q) for q in conjecture_3412_violations(reports)
            ],
        }
    }
    lines.append(json.dumps(summary, sort_keys=True))
    text = "\n".join(lines) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


@cli.command("classify")
@click.argument("perm")
@click.option("--vertex-cap", type=int, default=DEFAULT_VERTEX_CAP, show_default=True)
@click.pass_context
def classify_cmd(ctx, perm, vertex_cap):
    """Classify one permutation against the L2 bounds."""
    threads = ctx.obj["threads"]
    p = _perm(perm)
    d = graph_diameter_of(p, vertex_cap=vertex_cap, threads=threads)
    click.echo(json.dumps(classify(p, d).as_dict(), sort_keys=True))


def _golden(name: str) -> dict:
    path = resources.files("redwords.golden").joinpath(name)
    return json.loads(path.read_text(encoding="utf-8"))


def _graph_record(g) -> dict:
    labels = [payload_label(p) for p in g.vertices]
    return {
        "vertices": labels,
        "edges": sorted([labels[u], labels[v], str(k)] for u, v, k in g.edges),
        "diameter": diameter(g, vertex_cap=None),
    }


def _reproduce_figure(perm_text: str) -> dict:
    g, c, b = graphs_of(_perm(perm_text), cap=None)
    return {
        "perm": perm_text,
        "G": _graph_record(g),
        "C": _graph_record(c),
        "B": _graph_record(b),
    }


def reproduce_data(target: str, threads: int | None = None) -> tuple[dict, dict]:
    """(recomputed, golden) for one reproduction target."""
    if target in ("fig2", "fig3", "fig4"):
        golden = _golden(f"{target}.json")
        return _reproduce_figure(golden["perm"]), golden
    if target == "table2":
        golden = _golden("table2.json")
        from .perms import all_perms, inflate  # noqa: F401  (inflate used below)

        rows = []
        for n in (4, 5, 6):
            reports = sweep(n, vertex_cap=DEFAULT_VERTEX_CAP, threads=threads)
            for r in reports:
                if r.klass == "AtLower":
                    rows.append({"n": n, "perm": str(r.perm)})
        return {"rows": rows}, {"rows": [
            {"n": row["n"], "perm": row["perm"]} for row in golden["rows"]
        ]}
    raise PreconditionError(f"unknown reproduce target {target!r}")


def _verify_table2_expressions() -> None:
    golden = _golden("table2.json")
    from .perms import Perm as P

    for row in golden["rows"]:
        built = eval_expression(row["expression"])
        if built != P.parse(row["perm"]):
            raise ReproduceDiff(
                f"expression {row['expression']} builds {built}, "
                f"table lists {row['perm']}"
            )


def eval_expression(expr: str) -> Perm:
    """Evaluate an inflation expression like ``12[i1,21[i2,i2]]``."""
    from .perms import inflate

    expr = expr.strip()
    if expr.startswith("i"):
        from .perms import identity

        return identity(int(expr[1:]))
    if expr.startswith("12[") or expr.startswith("21["):
        pattern = Perm((1, 2)) if expr.startswith("12[") else Perm((2, 1))
        inner = expr[3:-1]
        depth = 0
        split = None
        for i, ch in enumerate(inner):
            if ch == "[":
                depth += 1
            elif ch == "]":
                depth -= 1
            elif ch == "," and depth == 0:
                split = i
                break
        if split is None:
            raise PreconditionError(f"malformed expression {expr!r}")
        left, right = inner[:split], inner[split + 1 :]
        return inflate(pattern, [eval_expression(left), eval_expression(right)])
    raise PreconditionError(f"malformed expression {expr!r}")


@cli.command("reproduce")
@click.argument("target", type=click.Choice(["fig2", "fig3", "fig4", "table2"]))
@click.pass_context
def reproduce_cmd(ctx, target):
    """Recompute a bundled artifact and diff against its golden file."""
    threads = ctx.obj["threads"]
    recomputed, golden = reproduce_data(target, threads)
    if target == "table2":
        _verify_table2_expressions()
        if recomputed["rows"] != golden["rows"]:
            raise ReproduceDiff(
                "table2 mismatch:\n"
                f"recomputed: {json.dumps(recomputed['rows'])}\n"
                f"golden:     {json.dumps(golden['rows'])}"
            )
    else:
        for key in ("G", "C", "B"):
            if recomputed[key] != golden[key]:
                raise ReproduceDiff(
                    f"{target} {key} mismatch:\n"
                    f"recomputed: {json.dumps(recomputed[key], sort_keys=True)}\n"
                    f"golden:     {json.dumps(golden[key], sort_keys=True)}"
                )
    click.echo(f"{target}: OK")


def main(argv=None) -> int:
    try:
        cli.main(args=argv, standalone_mode=False, obj={})
        return EXIT_OK
    except click.UsageError as exc:
        click.echo(f"usage error: {exc.format_message()}", err=True)
        return EXIT_USAGE
    except click.ClickException as exc:
        exc.show()
        return EXIT_USAGE
    except TooLargeError as exc:
        click.echo(f"too large: {exc}", err=True)
        return EXIT_TOO_LARGE
    except ReproduceDiff as exc:
        click.echo(f"reproduce failed: {exc}", err=True)
        return EXIT_DIFF
    except RedwordsError as exc:
        click.echo(f"precondition violated: {exc}", err=True)
        return EXIT_PRECONDITION
    except click.Abort:
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
