import re
import shutil
from textwrap import TextWrapper

import click

from .. import __version__, exceptions
from ..config import load_config
from ..constructions import FIXTURES
from ..logging import set_verbose
from ..operators import OPERATORS
from . import commands


class Group(click.Group):
    """A command group that maps package errors to exit codes."""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except exceptions.VerificationError:
            ctx.exit(2)
        except exceptions.WeightedHodgeException:
            # Already logged when raised
            ctx.exit(1)


def echo(text="", **kwargs):
    """Print a message wrapped to the terminal width.

    Back-quoted fragments are highlighted.

    Args:
        text (str): The text to print.
        kwargs: Additional keyword arguments to pass to ``click.echo``.
    """
    try:
        width = shutil.get_terminal_size().columns
    except Exception:
        width = 80
    wrapper = TextWrapper(width=width, drop_whitespace=True)
    L, R = click.style("><", fg="blue").split("><")
    for paragraph in re.split(r"\n\s*\n", text.strip()):
        paragraph = " ".join(paragraph.split())
        paragraph = wrapper.fill(paragraph)
        click.echo(re.sub("`(.*?)`", L + r"\1" + R, paragraph), **kwargs)


def _write(text, output):
    if output is None:
        click.echo(text)
    else:
        commands.write_text(text, output)
        echo(f"Wrote `{output}`.", err=True)


complex_file = click.argument(
    "file", type=click.Path(exists=True, dir_okay=False)
)
output_option = click.option(
    "-o",
    "--output",
    type=click.Path(dir_okay=False),
    default=None,
    help="Write the complex to this file instead of standard output.",
)


@click.group(cls=Group)
@click.version_option(__version__, prog_name="weightedhodge")
@click.option(
    "--config",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="YAML config file. Defaults to `weightedhodge.yml` if present.",
)
@click.option(
    "--verbose", is_flag=True, help="Show debug messages on the terminal."
)
def main(config, verbose):
    """Spectra and bounds of vertex-weighted simplicial complexes."""
    set_verbose(verbose)
    load_config(config)


@main.command()
@complex_file
def info(file):
    """Print n, dim, the f-vector, h(X) and the missing faces."""
    click.echo(commands.info(file))


@main.command()
@complex_file
@click.option("-k", type=int, required=True, help="Dimension.")
@click.option(
    "--operator",
    type=click.Choice(list(OPERATORS)),
    default="full",
    show_default=True,
    help="Which Laplacian to take.",
)
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["json", "csv"]),
    default="json",
    show_default=True,
)
@click.option(
    "--weights",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="Complex file whose weights override those of FILE.",
)
@click.option(
    "--matrix",
    is_flag=True,
    help="Print the exact operator matrix instead of its spectrum.",
)
def spectrum(file, k, operator, fmt, weights, matrix):
    """Print the spectrum of a weighted Laplacian."""
    click.echo(commands.spectrum(file, k, operator, fmt, weights, matrix))


@main.command()
@complex_file
@click.option("-k", type=int, required=True, help="Dimension.")
@click.option(
    "--subcomplex",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="A subcomplex for the shift bounds and the vanishing criteria.",
)
def bounds(file, k, subcomplex):
    """Print every bound at dimension K next to the measured spectrum."""
    click.echo(commands.bounds(file, k, subcomplex))


@main.command()
@complex_file
@click.option(
    "--hodge",
    is_flag=True,
    help="Also print the kernel dimensions of the weighted Laplacians.",
)
def betti(file, hodge):
    """Print the exact reduced Betti numbers."""
    click.echo(commands.betti(file, hodge))


@main.group()
def construct():
    """Build a complex and write it in the canonical format."""
    pass


@construct.command()
@click.argument("first", type=click.Path(exists=True, dir_okay=False))
@click.argument("second", type=click.Path(exists=True, dir_okay=False))
@click.option(
    "--namespace/--no-namespace",
    default=True,
    help="Prefix labels with the block index.",
)
@output_option
def join(first, second, namespace, output):
    """The join of two complexes."""
    _write(commands.construct_join(first, second, namespace), output)


@construct.command()
@complex_file
@output_option
def dual(file, output):
    """The Alexander dual."""
    _write(commands.construct_dual(file), output)


@construct.command()
@complex_file
@click.option("-k", type=int, required=True, help="Dimension.")
@output_option
def complement(file, k, output):
    """The complement complex generated by the missing k-faces."""
    _write(commands.construct_complement(file, k), output)


@construct.command()
@complex_file
@click.option("-k", type=int, required=True, help="Dimension.")
@output_option
def star(file, k, output):
    """The complex of all subsets of complements of k-faces."""
    _write(commands.construct_star(file, k), output)


@construct.command()
@complex_file
@click.option("-p", type=int, required=True, help="Skeleton dimension.")
@output_option
def skeleton(file, p, output):
    """The p-skeleton."""
    _write(commands.construct_skeleton(file, p), output)


@construct.command()
@click.option("--d", "d", type=int, required=True)
@click.option("--t", "t", type=int, required=True)
@click.option("--r", "r", type=int, required=True)
@click.option(
    "--weights",
    default=None,
    help="Comma separated: one weight per sphere block, then one per "
    "simplex vertex. Defaults to all ones.",
)
@output_option
def extremal(d, t, r, weights, output):
    """The extremal gap family with t sphere blocks and an r-simplex."""
    _write(commands.construct_extremal(d, t, r, weights), output)


@construct.command()
@click.argument("name", type=click.Choice(list(FIXTURES)))
@click.option("--n", "n", type=int, default=None)
@click.option("--p", "p", type=int, default=None)
@click.option("--k", "k", type=int, default=None)
@output_option
def fixture(name, n, p, k, output):
    """A named fixture complex with unit weights."""
    _write(commands.construct_fixture(name, n=n, p=p, k=k), output)


@construct.command()
@click.option("--n", "n", type=int, required=True)
@click.option("--k", "k", type=int, required=True, help="Facet dimension.")
@click.option("--density", type=float, default=0.5, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@output_option
def random(n, k, density, seed, output):
    """A random complex with unit weights."""
    _write(commands.construct_random(n, k, density, seed), output)


@construct.command()
@click.argument("graph", type=click.Path(exists=True, dir_okay=False))
@click.option("--max-dim", type=int, default=None)
@output_option
def clique(graph, max_dim, output):
    """The clique complex of a graph file."""
    _write(commands.construct_clique(graph, max_dim), output)


@construct.command()
@click.argument("graph", type=click.Path(exists=True, dir_okay=False))
@output_option
def independence(graph, output):
    """The independence complex of a graph file."""
    _write(commands.construct_independence(graph), output)


@main.command()
@click.argument("suite")
@click.option("--seeds", type=int, default=None, help="Number of seeds.")
@click.option("--max-n", type=int, default=None, help="Vertex cap.")
@click.option("--seed", type=int, default=0, help="First seed.")
@click.option("--workers", type=int, default=None)
@click.option(
    "--json",
    "json_file",
    type=click.Path(dir_okay=False),
    default=None,
    help="Write the JSON report to this file.",
)
def verify(suite, seeds, max_n, seed, workers, json_file):
    """Run a verification suite (or `all`) and print a summary."""
    summary, failures = commands.verify(
        suite, seeds, max_n, seed, workers, json_file
    )
    click.echo(summary)
    if failures:
        raise exceptions.VerificationError(failures)
