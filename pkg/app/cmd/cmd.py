# =============================================================================
# app/cmd/cmd.py
# =============================================================================
# Purpose:
# The `forge` command line. One subcommand per public operation; each one
# reads its inputs, calls the library once and prints the result, as text
# or as JSON with --json.
#
# Exit codes:
# - 0 success
# - 1 domain error (one-line diagnostic on stderr, ErrorReport with --json)
# - 2 usage error (click)
# =============================================================================

import json
import logging
import time
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any

import click
from pydantic import BaseModel, ValidationError
from pydantic_core import to_json

from constructions import (
    build_raag,
    direct_product,
    fibre_data_from_rips,
    fibre_product_generators,
    reidemeister_schreier,
    rips,
    todd_coxeter,
    transversal_words,
    wreath_embed,
)
from constructions.raag_builder import raag_alphabet
from mcg import (
    block_wreath_embed,
    check_relations,
    curve_system_from_graph,
    raag_symplectic_rep,
    wreath_genus,
    wreath_genus_stepwise,
)
from mcg.symplectic import pairing_matrix
from models.errors import DimensionMismatchError, ErrorReport, ForgeError, PreconditionError
from models.matrix import IntMatrix
from models.presentation import Graph, Presentation
from models.reductions import PairWord, ZKernelSpec
from models.results import AreaBudget, AreaStatus, WreathElement
from presentation import format_word, parse_graph, parse_presentation, parse_word, serialize_presentation
from reductions import (
    build_phi,
    choose_oracle,
    conjugacy_rewrite,
    conjugation_table_from_rips,
    gamma0_membership,
    membership_query,
    sl2z_word,
    torsion_order,
    z_kernel_membership,
)
from reductions.demo import mapping_torus_demo
from reductions.modular import SL2Z
from solvers import (
    abelianization,
    area_estimate,
    brute_force_trivial,
    check_small_cancellation,
    dehn_function_values,
    dehn_solve,
    raag_normal_form,
    smith_normal_form,
)
from utilities.config import Settings, load_settings
from utilities.corpus import CORPUS_PREFIX, entries_with_tag, get_entries, get_presentation

logger = logging.getLogger(__name__)


# -----------------------------------------------------------------------------
# Shared state and IO helpers
# -----------------------------------------------------------------------------
@dataclass
class CliState:
    settings: Settings
    as_json: bool = False
    out: Path | None = None
    deadline: float | None = None


def emit(state: CliState, data: Any, text: str) -> None:
    """Write `data` as JSON with --json, `text` otherwise; to --out or stdout."""
    if state.as_json:
        payload = data.model_dump_json(indent=2) if isinstance(data, BaseModel) else to_json(data, indent=2).decode()
    else:
        payload = text
    if state.out is not None:
        state.out.write_text(payload + "\n", encoding="utf-8")
    else:
        click.echo(payload)


def load_presentation(source: str) -> Presentation:
    """A `.grp` file path or `corpus:<id>`."""
    if source.startswith(CORPUS_PREFIX):
        return get_presentation(source)
    path = Path(source)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise click.FileError(source, hint=str(exc)) from exc
    return parse_presentation(text)


def load_graph(path: str) -> Graph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def _fraction(ctx, param, value: str) -> Fraction:
    try:
        lam = Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise click.BadParameter(f"{value!r} is not a rational number") from exc
    if not 0 < lam < 1:
        raise click.BadParameter("lambda must lie strictly between 0 and 1")
    return lam


def _matrix(ctx, param, value: str | None) -> IntMatrix | None:
    if value is None:
        return None
    try:
        rows = json.loads(value)
        return IntMatrix.from_rows(rows)
    except (ValueError, TypeError) as exc:
        raise click.BadParameter(f"expected a JSON list of integer rows, got {value!r}") from exc


def format_matrix(m: IntMatrix) -> str:
    rows = [[str(m[i, j]) for j in range(m.cols)] for i in range(m.rows)]
    width = max((len(x) for row in rows for x in row), default=1)
    return "\n".join(" ".join(x.rjust(width) for x in row) for row in rows)


def _format_pair(pair: PairWord, alphabet: tuple[str, ...]) -> str:
    return f"({format_word(pair.left, alphabet)}, {format_word(pair.right, alphabet)})"


in_option = click.option("--in", "source", required=True, help="`.grp` file or corpus:<id>")
graph_option = click.option(
    "--graph", "graph_path", required=True, type=click.Path(exists=True, dir_okay=False), help="Edge-list file"
)
word_option = click.option("--word", required=True, help="Word expression over the input alphabet")
blocks_option = click.option("--blocks", type=int, default=None, help="Rips block count L (>= 8)")
subgroup_option = click.option("--subgroup", multiple=True, help="Subgroup generator word (repeatable)")
max_cosets_option = click.option("--max-cosets", type=click.IntRange(min=1), default=None)
matrix_option = click.option("--matrix", required=True, callback=_matrix, help="2x2 matrix as JSON, e.g. [[1,1],[0,1]]")


# -----------------------------------------------------------------------------
# Command group
# -----------------------------------------------------------------------------
class ForgeGroup(click.Group):
    """Turns domain errors into exit code 1 with a one-line diagnostic."""

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except ForgeError as exc:
            self._fail(ctx, ErrorReport.from_exception(exc))
        except ValidationError as exc:
            self._fail(ctx, ErrorReport(code=1, message=f"malformed input: {exc.errors()[0]['msg']}"))

    @staticmethod
    def _fail(ctx: click.Context, report: ErrorReport) -> None:
        state = ctx.obj
        if isinstance(state, CliState) and state.as_json:
            click.echo(report.model_dump_json(indent=2))
        click.echo(f"error: {report.message}", err=True)
        ctx.exit(report.code)


@click.group(cls=ForgeGroup)
@click.option("--json", "as_json", is_flag=True, help="Print results as JSON")
@click.option("--out", type=click.Path(dir_okay=False, path_type=Path), default=None, help="Write the result here")
@click.option("-v", "--verbose", count=True, help="More logging (repeatable)")
@click.option("--timeout", type=click.FloatRange(min=0, min_open=True), default=None, help="Seconds for long searches")
@click.pass_context
def forge(ctx: click.Context, as_json: bool, out: Path | None, verbose: int, timeout: float | None):
    """Finitely presented groups: constructions, solvers and reductions."""
    try:
        settings = load_settings()
    except ValidationError as exc:
        raise click.UsageError(f"bad FORGE_* setting: {exc.errors()[0]['msg']}") from exc
    level = max(logging.DEBUG, logging.WARNING - 10 * verbose) if verbose else settings.log_level
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", force=True)
    deadline = time.monotonic() + timeout if timeout else None
    ctx.obj = CliState(settings=settings, as_json=as_json, out=out, deadline=deadline)


# -----------------------------------------------------------------------------
# Presentations and constructions
# -----------------------------------------------------------------------------
@forge.command()
@in_option
@click.pass_obj
def parse(state: CliState, source: str):
    """Parse a presentation and print it back in `.grp` form."""
    p = load_presentation(source)
    emit(state, p, serialize_presentation(p).rstrip("\n"))


@forge.command()
@graph_option
@click.pass_obj
def raag(state: CliState, graph_path: str):
    """The right-angled Artin group of a graph."""
    p = build_raag(load_graph(graph_path))
    emit(state, p, serialize_presentation(p).rstrip("\n"))


@forge.command()
@in_option
@click.option("--with", "other", required=True, help="Second factor: `.grp` file or corpus:<id>")
@click.pass_obj
def product(state: CliState, source: str, other: str):
    """Direct product of two presentations."""
    p, left, right = direct_product(load_presentation(source), load_presentation(other))
    emit(state, {"presentation": p, "left": left, "right": right}, serialize_presentation(p).rstrip("\n"))


@forge.command("rips")
@in_option
@blocks_option
@click.pass_obj
def rips_command(state: CliState, source: str, blocks: int | None):
    """Rips construction: a C'(1/6) group mapping onto the input with 2-generated kernel."""
    out = rips(load_presentation(source), blocks or state.settings.rips_blocks)
    report = out.certification
    header = (
        f"# blocks: {out.padding_params.block_count}\n"
        f"# C'(1/6): max piece {report.max_piece_length}, shortest relator "
        f"{report.min_relator_length}, ratio {report.ratio}\n"
    )
    emit(state, out, header + serialize_presentation(out.gamma).rstrip("\n"))


@forge.command("fibre-gens")
@in_option
@blocks_option
@click.pass_obj
def fibre_gens(state: CliState, source: str, blocks: int | None):
    """Generators of the fibre product of the Rips map of the input."""
    q = load_presentation(source)
    out = rips(q, blocks or state.settings.rips_blocks)
    _, oracle = choose_oracle(q, state.settings.max_len, state.settings.max_steps)
    pairs = fibre_product_generators(fibre_data_from_rips(out), oracle)
    emit(state, pairs, "\n".join(_format_pair(pair, out.gamma.alphabet) for pair in pairs))


# -----------------------------------------------------------------------------
# Solvers
# -----------------------------------------------------------------------------
@forge.command()
@in_option
@click.option("--lambda", "lam", default="1/6", callback=_fraction, help="Rational λ, e.g. 1/6")
@click.pass_obj
def smallcancel(state: CliState, source: str, lam: Fraction):
    """Longest piece and the C'(λ) verdicts."""
    report = check_small_cancellation(load_presentation(source), lam)
    lines = [
        f"max piece: {report.max_piece_length}",
        f"shortest relator: {report.min_relator_length}",
        f"ratio: {report.ratio}",
    ]
    for key in sorted(report.passes_lambda, key=Fraction, reverse=True):
        lines.append(f"C'({key}): {'yes' if report.passes_lambda[key] else 'no'}")
    emit(state, report, "\n".join(lines))


@forge.command()
@in_option
@word_option
@click.option("--auto", is_flag=True, help="Pick the best available oracle instead of Dehn's algorithm")
@click.pass_obj
def solve(state: CliState, source: str, word: str, auto: bool):
    """Word problem by Dehn's algorithm (the presentation must be C'(1/6))."""
    p = load_presentation(source)
    w = parse_word(word, p.alphabet)
    if auto:
        kind, oracle = choose_oracle(p, state.settings.max_len, state.settings.max_steps)
        verdict = oracle(w)
    else:
        kind, verdict = "dehn", dehn_solve(w, p)
    emit(state, {"verdict": verdict, "oracle": kind}, verdict.value)


@forge.command()
@in_option
@word_option
@click.option("--max-len", type=click.IntRange(min=1), default=None, help="Intermediate word length cap")
@click.option("--max-steps", type=click.IntRange(min=1), default=None, help="Search node budget")
@click.pass_obj
def brute(state: CliState, source: str, word: str, max_len: int | None, max_steps: int | None):
    """Bidirectional search for a derivation of the empty word."""
    p = load_presentation(source)
    result = brute_force_trivial(
        parse_word(word, p.alphabet),
        p,
        max_len or state.settings.max_len,
        max_steps or state.settings.max_steps,
        state.deadline,
    )
    emit(state, result, result.verdict.value)


def _area_text(status: AreaStatus, value: int) -> str:
    return str(value) if status is AreaStatus.EXACT else f"{status.value} {value}"


@forge.command()
@in_option
@word_option
@click.option("--max-area", type=click.IntRange(min=1), default=None)
@click.option("--max-len", type=click.IntRange(min=0), default=0, help="Intermediate length cap (0: the word length)")
@click.pass_obj
def area(state: CliState, source: str, word: str, max_area: int | None, max_len: int):
    """Van Kampen area of a null-homotopic word."""
    p = load_presentation(source)
    budget = AreaBudget(
        max_area=max_area or state.settings.max_area,
        max_intermediate_length=max_len,
        max_nodes=state.settings.max_steps,
    )
    result = area_estimate(parse_word(word, p.alphabet), p, budget, state.deadline)
    emit(state, result, _area_text(result.status, result.value))


@forge.command("dehn-values")
@in_option
@click.option("--max-len", "length", type=click.IntRange(min=0), default=4, help="Largest word length n")
@click.option("--max-area", type=click.IntRange(min=1), default=None)
@click.pass_obj
def dehn_values(state: CliState, source: str, length: int, max_area: int | None):
    """Pointwise Dehn function values δ(0..n)."""
    p = load_presentation(source)
    _, oracle = choose_oracle(p, state.settings.max_len, state.settings.max_steps)
    budget = AreaBudget(max_area=max_area or state.settings.max_area, max_intermediate_length=0)
    values = dehn_function_values(p, length, oracle, budget, state.deadline)
    emit(state, values, "\n".join(f"{v.n} {_area_text(v.status, v.value)}" for v in values))


@forge.command()
@graph_option
@word_option
@click.pass_obj
def nf(state: CliState, graph_path: str, word: str):
    """Normal form in the right-angled Artin group of a graph (generators v1..vn)."""
    g = load_graph(graph_path)
    alphabet = raag_alphabet(g.n)
    result = raag_normal_form(parse_word(word, alphabet), g)
    emit(state, result, format_word(result, alphabet))


@forge.command()
@in_option
@click.pass_obj
def abel(state: CliState, source: str):
    """Abelianization as Z^r + torsion."""
    free_rank, torsion = abelianization(load_presentation(source))
    terms = ([f"Z^{free_rank}"] if free_rank else []) + [f"Z/{d}" for d in torsion]
    emit(state, {"free_rank": free_rank, "torsion": torsion}, " + ".join(terms) or "0")


@forge.command()
@click.option("--matrix", required=True, callback=_matrix, help="Integer matrix as JSON rows")
@click.pass_obj
def snf(state: CliState, matrix: IntMatrix):
    """Smith normal form U·M·V = D."""
    u, d, v = smith_normal_form(matrix)
    text = "\n".join(f"{label}:\n{format_matrix(m)}" for label, m in (("U", u), ("D", d), ("V", v)))
    emit(state, {"U": u, "D": d, "V": v}, text)


@forge.command()
@in_option
@subgroup_option
@max_cosets_option
@click.pass_obj
def tc(state: CliState, source: str, subgroup: tuple[str, ...], max_cosets: int | None):
    """Todd-Coxeter coset enumeration."""
    p = load_presentation(source)
    gens = [parse_word(w, p.alphabet) for w in subgroup]
    result = todd_coxeter(p, gens, max_cosets or state.settings.max_cosets)
    if result.completed:
        text = f"index {result.index}"
    else:
        text = f"not determined within {result.max_cosets} cosets ({result.cosets_defined} defined)"
    emit(state, result, text)


def _complete_table(state: CliState, p: Presentation, subgroup: tuple[str, ...], max_cosets: int | None):
    gens = [parse_word(w, p.alphabet) for w in subgroup]
    limit = max_cosets or state.settings.max_cosets
    result = todd_coxeter(p, gens, limit)
    if result.table is None:
        raise PreconditionError(f"index not determined within {limit} cosets")
    return result.table


@forge.command()
@in_option
@subgroup_option
@max_cosets_option
@click.pass_obj
def rs(state: CliState, source: str, subgroup: tuple[str, ...], max_cosets: int | None):
    """Reidemeister-Schreier presentation of a finite-index subgroup."""
    p = load_presentation(source)
    sub, inclusion = reidemeister_schreier(p, _complete_table(state, p, subgroup, max_cosets))
    emit(state, {"subgroup": sub, "inclusion": inclusion}, serialize_presentation(sub).rstrip("\n"))


@forge.command("wreath-embed")
@in_option
@subgroup_option
@word_option
@max_cosets_option
@click.pass_obj
def wreath_embed_command(state: CliState, source: str, subgroup: tuple[str, ...], word: str, max_cosets: int | None):
    """Image of an element in H wr Sym(cosets)."""
    p = load_presentation(source)
    table = _complete_table(state, p, subgroup, max_cosets)
    element = wreath_embed(parse_word(word, p.alphabet), table, transversal_words(table))
    lines = ["top: " + " ".join(str(c) for c in element.top)]
    lines += [f"{c}: {format_word(b, p.alphabet)}" for c, b in enumerate(element.bottom)]
    emit(state, element, "\n".join(lines))


# -----------------------------------------------------------------------------
# Reductions
# -----------------------------------------------------------------------------
@forge.command()
@in_option
@click.option("--left", required=True, help="First component, a word over Γ")
@click.option("--right", required=True, help="Second component, a word over Γ")
@blocks_option
@click.pass_obj
def member(state: CliState, source: str, left: str, right: str, blocks: int | None):
    """Membership of (left, right) in the fibre product of the Rips map of the input."""
    q = load_presentation(source)
    out = rips(q, blocks or state.settings.rips_blocks)
    pair = PairWord(left=parse_word(left, out.gamma.alphabet), right=parse_word(right, out.gamma.alphabet))
    kind, oracle = choose_oracle(q, state.settings.max_len, state.settings.max_steps)
    result = membership_query(pair, fibre_data_from_rips(out), oracle)
    emit(state, {"membership": result, "oracle": kind}, result.value)


@forge.command("conj-rewrite")
@click.option("--in", "source", default=None, help="`.grp` file or corpus:<id>; Γ is its Rips group")
@click.option("--demo", is_flag=True, help="Use the mapping torus of a1 -> a1 a2, a2 -> a2 instead")
@word_option
@click.option("--target", default=None, help="Kernel generator to conjugate (default: the first)")
@blocks_option
@click.pass_obj
def conj_rewrite(state: CliState, source: str | None, demo: bool, word: str, target: str | None, blocks: int | None):
    """Rewrite w a w^-1 as a word over the kernel generators."""
    if demo == (source is not None):
        raise click.UsageError("give exactly one of --in and --demo")
    if demo:
        table = mapping_torus_demo().table
    else:
        table = conjugation_table_from_rips(rips(load_presentation(source), blocks or state.settings.rips_blocks))
    a = parse_word(target, table.inner_gens) if target else 0
    result = conjugacy_rewrite(parse_word(word, table.outer_gens), a, table)
    emit(state, result, format_word(result, table.inner_gens))


@forge.command()
@click.option("--in", "sources", multiple=True, required=True, help="One factor per use")
@click.option("--weights", multiple=True, required=True, help="Integer weights of φ_i, e.g. '1 0'")
@click.option("--word", "words", multiple=True, required=True, help="Coordinate i, a word over factor i")
@click.pass_obj
def zkernel(state: CliState, sources: tuple[str, ...], weights: tuple[str, ...], words: tuple[str, ...]):
    """Membership in the kernel of Σ φ_i from a product of groups onto ℤ."""
    factors = [load_presentation(s) for s in sources]
    try:
        rows = [[int(x) for x in row.split()] for row in weights]
    except ValueError as exc:
        raise click.BadParameter("weights must be integers", param_hint="--weights") from exc
    spec = ZKernelSpec.from_weights(factors, rows)
    if len(words) != len(factors):
        raise DimensionMismatchError(f"expected {len(factors)} words, got {len(words)}")
    coordinates = [parse_word(w, factor.alphabet) for w, factor in zip(words, factors)]
    result = z_kernel_membership(coordinates, spec)
    emit(state, {"membership": result}, result.value)


@forge.command()
@matrix_option
@click.option("--level", type=click.IntRange(min=1), required=True)
@click.pass_obj
def gamma0(state: CliState, matrix: IntMatrix, level: int):
    """Whether a matrix lies in Γ0(level)."""
    result = gamma0_membership(matrix, level)
    emit(state, {"member": result}, str(result).lower())


@forge.command()
@matrix_option
@click.option("--max-n", type=click.IntRange(min=1), default=12)
@click.pass_obj
def order(state: CliState, matrix: IntMatrix, max_n: int):
    """Order of a matrix in SL(2, ℤ), up to max-n."""
    result = torsion_order(matrix, max_n)
    emit(state, {"order": result}, "none" if result is None else str(result))


@forge.command()
@matrix_option
@click.pass_obj
def sl2word(state: CliState, matrix: IntMatrix):
    """A word in S, T evaluating to the matrix."""
    result = sl2z_word(matrix)
    emit(state, result, format_word(result, SL2Z.alphabet))


@forge.command()
@click.option("--level", type=click.IntRange(min=2), default=17)
@max_cosets_option
@click.pass_obj
def phi(state: CliState, level: int, max_cosets: int | None):
    """A surjection from Γ0(level) onto ℤ, for prime level."""
    result = build_phi(level, max_cosets or state.settings.max_cosets)
    lines = [
        f"index: {result.index}",
        f"subgroup rank: {result.subgroup.rank}",
        f"abelianization: free rank {result.free_rank}, torsion {list(result.torsion)}",
        f"coordinate: {result.coordinate}",
        "weights: " + " ".join(str(w) for w in result.weights),
    ]
    emit(state, result, "\n".join(lines))


# -----------------------------------------------------------------------------
# Mapping class groups
# -----------------------------------------------------------------------------
@forge.command()
@graph_option
@click.pass_obj
def curves(state: CliState, graph_path: str):
    """Curve classes realizing a graph as their intersection pattern."""
    space, classes = curve_system_from_graph(load_graph(graph_path))
    matrix = pairing_matrix(classes)
    lines = [f"genus: {space.genus}"]
    lines += [f"c{i + 1}: " + " ".join(str(x) for x in c.vector) for i, c in enumerate(classes)]
    lines += ["pairing:", format_matrix(IntMatrix.from_rows(matrix))]
    emit(state, {"space": space, "curves": classes, "pairing": matrix}, "\n".join(lines))


@forge.command()
@graph_option
@click.option("--power", type=click.IntRange(min=2), default=None, help="Twist power N")
@click.pass_obj
def rep(state: CliState, graph_path: str, power: int | None):
    """Symplectic images of the RAAG generators."""
    result = raag_symplectic_rep(load_graph(graph_path), power or state.settings.twist_power)
    lines = []
    for i, image in enumerate(result.images):
        lines += [f"v{i + 1}:", format_matrix(image.matrix)]
    emit(state, result, "\n".join(lines))


@forge.command()
@graph_option
@click.option("--power", type=click.IntRange(min=2), default=None, help="Twist power N")
@click.option("--word-len-cap", type=click.IntRange(min=1), default=8)
@click.pass_obj
def relcheck(state: CliState, graph_path: str, power: int | None, word_len_cap: int):
    """Which pairs of images commute, and relation search on the others."""
    g = load_graph(graph_path)
    report = check_relations(raag_symplectic_rep(g, power or state.settings.twist_power), g, word_len_cap)
    lines = []
    for pair in report.pairs:
        status = "commute" if pair.commute else "no relation" if pair.relation is None else f"relation {pair.relation}"
        lines.append(f"v{pair.i + 1} v{pair.j + 1}: {'edge' if pair.edge else 'non-edge'}, {status}")
    lines.append(f"violations: {report.violations}")
    emit(state, report, "\n".join(lines))


@forge.command("wreath-genus")
@click.option("--gs", "g_s", type=click.IntRange(min=0), required=True, help="Genus of S")
@click.option("--b", type=click.IntRange(min=1), required=True, help="Boundary components of S")
@click.option("--h", type=click.IntRange(min=0), required=True, help="Genus of the base")
@click.option("--m", type=click.IntRange(min=1), required=True, help="Number of copies")
@click.option("--stepwise", is_flag=True, help="Show each cut-and-paste stage")
@click.pass_obj
def wreath_genus_command(state: CliState, g_s: int, b: int, h: int, m: int, stepwise: bool):
    """Genus of the surface whose mapping class group contains Mod(S) wr C_m."""
    genus = wreath_genus(g_s, b, h, m)
    if not stepwise:
        emit(state, {"genus": genus}, str(genus))
        return
    stages = wreath_genus_stepwise(g_s, b, h, m)
    lines = [f"{s.stage}: χ={s.euler_characteristic}, boundary {s.boundary}" for s in stages]
    lines.append(f"genus: {genus}")
    emit(state, {"genus": genus, "stages": stages}, "\n".join(lines))


@forge.command("block-embed")
@click.option("--element", type=click.Path(exists=True, dir_okay=False), required=True, help="WreathElement JSON")
@click.option("--block-dim", type=click.IntRange(min=2), required=True)
@click.pass_obj
def block_embed(state: CliState, element: str, block_dim: int):
    """Block permutation matrix of a wreath element with matrix entries."""
    w = WreathElement.model_validate_json(Path(element).read_text(encoding="utf-8"))
    result = block_wreath_embed(w, block_dim)
    emit(state, result, format_matrix(result))


# -----------------------------------------------------------------------------
# Corpus
# -----------------------------------------------------------------------------
@forge.command()
@click.option("--tag", default=None, help="Only entries carrying this tag")
@click.pass_obj
def corpus(state: CliState, tag: str | None):
    """List the registered presentations."""
    entries = entries_with_tag(tag) if tag else get_entries()
    lines = [
        f"{e['id']:<16} {e['name']:<10} {'inf' if e.get('order') is None else e['order']:>4}  {','.join(e.get('tags', []))}"
        for e in entries
    ]
    emit(state, entries, "\n".join(lines))


if __name__ == "__main__":
    forge()
