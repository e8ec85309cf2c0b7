"""
SED-pair Toolkit - CLI 接口

构造、验证、膨胀 SED-pair，计算 g(n)，以及输出各优化系统的数值证书。
结果行为 key=value 文本，便于脚本解析；表格等人类可读内容经 rich 输出。
"""

import functools
import sys
from pathlib import Path
from typing import List, Optional

import click
import yaml
from rich.console import Console
from rich.table import Table

from . import __version__
from .analyzers.optimization import MinimaxSystem, certify_floor, figure_curves, write_curves_csv
from .builders.blowup import apex_augment, blow_up, check_blowup_remark, restricted_class_check
from .builders.constructions import (
    THEOREM2_LIMIT,
    CirculantBipartiteSpec,
    CirculantSpec,
    circulant_bipartite,
    circulant_unipartite,
    complete_graph,
    pell_solution,
    pell_solutions,
    theorem2_bound_check,
    theorem2_construction,
)
from .builders.extremal import ExtremalSpec, brute_force_f_max, quasi_complete, quasi_star, sum_deg_sq
from .core.config import Config
from .core.edge_list import format_edge_list, read_edge_list, write_edge_list
from .core.errors import EdgeListParseError, SedPairError
from .core.signed_graph import SignedGraph, check_adjacent_vertex_sum_lemma, verify_sed
from .search.exact_solver import SearchConfig, SearchMode, solve_g, verify_lower_bounds
from .utils.progress_tracker import ProgressTracker
from .utils.stage_timer import StageTimer

console = Console()
err_console = Console(stderr=True)

EXIT_DOMAIN = 1
EXIT_USAGE = 2

_WEIGHTS = {'+1': 1, '1': 1, '-1': -1}


def _bool(value: bool) -> str:
    return 'true' if value else 'false'


def _num(value: float) -> str:
    return f"{value:.10g}"


def _fail(error: Exception, code: int) -> None:
    err_console.print(f"[red]错误: {error}[/red]")
    sys.exit(code)


def _handle_errors(func):
    """领域错误退出码 1；解析与 I/O 错误退出码 2"""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except EdgeListParseError as e:
            _fail(e, EXIT_USAGE)
        except SedPairError as e:
            _fail(e, EXIT_DOMAIN)
        except OSError as e:
            _fail(e, EXIT_USAGE)

    return wrapper


def _quiet(ctx: click.Context) -> bool:
    return ctx.obj['quiet']


def _config(ctx: click.Context) -> Config:
    return ctx.obj['config']


@click.group()
@click.option('--config', 'config_path', type=click.Path(dir_okay=False),
              help='YAML 配置文件（默认读取 SEDPAIR_CONFIG 环境变量）')
@click.option('--quiet', '-q', is_flag=True, help='只输出最终结果行')
@click.version_option(version=__version__, prog_name='sedpair')
@click.pass_context
def cli(ctx, config_path, quiet):
    """SED-pair Toolkit - 带符号边支配函数的构造、验证与下界计算

    \b
    可用命令：
      sedpair construct   生成图族与极值构造
      sedpair verify      验证边表文件是否为 SED-pair
      sedpair blowup      k 倍膨胀（可选增广顶点）
      sedpair extremal    Σdeg² 极值图与 F(n, e)
      sedpair optimize    各优化系统的数值证书
      sedpair gn          精确计算 g(n)
      sedpair bounds      极值构造的 s/n² 序列
      sedpair pell        Pell 方程 p² = 2q² + 1 的正解
      sedpair config      查看或初始化配置

    \b
    常用示例：
      sedpair construct theorem2 --pell-index 1 --report
      sedpair gn --n 5 --workers 4
      sedpair optimize --system all --csv curves/
    """
    try:
        config = Config(config_path)
    except (FileNotFoundError, ValueError, yaml.YAMLError) as e:
        _fail(e, EXIT_USAGE)

    if quiet:
        config.set('output.quiet', True)
    ctx.obj = {'config': config, 'quiet': config.quiet}


# =========================================================================
# 图输出
# =========================================================================

def _graph_line(graph: SignedGraph, extra: Optional[List[str]] = None) -> str:
    report = verify_sed(graph)
    tokens = [f"n={graph.n}", f"m={graph.m}", f"s={report.total_weight}", f"is_sed={_bool(report.is_sed)}"]
    return " ".join(tokens + (extra or []))


def _print_report_table(graph: SignedGraph) -> None:
    report = verify_sed(graph)
    table = Table(show_header=False)
    table.add_column("项目", style="cyan")
    table.add_column("值")
    table.add_row("顶点数", str(graph.n))
    table.add_row("边数", f"{graph.m} (+{len(graph.positive_edges)} / -{len(graph.negative_edges)})")
    table.add_row("总权重", str(report.total_weight))
    table.add_row("SED-pair", "[green]是[/green]" if report.is_sed else "[red]否[/red]")
    if report.failing_edges:
        shown = ", ".join(str(graph.edges[i][:2]) for i in report.failing_edges[:5])
        table.add_row("失败的边", f"{len(report.failing_edges)} 条: {shown}")
    console.print(table)


def _emit_graph(ctx: click.Context, graph: SignedGraph, out: Optional[str], report: bool,
                comments: List[str], extra: Optional[List[str]] = None) -> None:
    """--out 写文件；--report 输出报告；两者都没有时把边表写到标准输出"""
    if out:
        write_edge_list(graph, out, comments)
        if not _quiet(ctx):
            console.print(f"[green]已写入[/green] {out}")

    if report:
        if not _quiet(ctx):
            _print_report_table(graph)
        click.echo(_graph_line(graph, extra))
    elif not out:
        click.echo(format_edge_list(graph, comments), nl=False)


def _output_options(func):
    func = click.option('--report', is_flag=True, help='输出 SED 报告而不是边表')(func)
    func = click.option('--out', type=click.Path(dir_okay=False), help='边表输出文件')(func)
    return func


def _weight_option(func):
    return click.option('--weight', type=click.Choice(list(_WEIGHTS)), default='+1', show_default=True,
                        help='统一边权')(func)


# =========================================================================
# construct
# =========================================================================

@cli.group()
def construct():
    """生成图族与极值构造"""


@construct.command('theorem2')
@click.option('--pell-index', type=int, default=1, show_default=True, help='Pell 解序号 k')
@_output_options
@click.pass_context
@_handle_errors
def construct_theorem2(ctx, pell_index, out, report):
    """极值 SED-pair：阶数 4(p+q)p + 1"""
    pq = pell_solution(pell_index)
    result = theorem2_construction(pq)
    graph = result.graph

    sums = verify_sed(graph).vertex_sums
    extra = [f"s_{name}={sums[block.start]}" for name, block in result.parts.items()]
    comments = [f"theorem2 p={pq.p} q={pq.q}"]
    _emit_graph(ctx, graph, out, report, comments, extra)


@construct.command('circulant-bipartite')
@click.option('--a', 'a', type=int, required=True, help='X 侧块数')
@click.option('--b', 'b', type=int, required=True, help='Y 侧块数')
@click.option('--k', 'k', type=int, required=True, help='带宽')
@click.option('--l', 'l', type=int, required=True, help='块大小')
@_weight_option
@_output_options
@click.pass_context
@_handle_errors
def construct_circulant_bipartite(ctx, a, b, k, l, weight, out, report):
    """二部循环带状图 K_{X,Y,k/l}"""
    graph = circulant_bipartite(CirculantBipartiteSpec(a=a, b=b, k=k, l=l), _WEIGHTS[weight])
    _emit_graph(ctx, graph, out, report, [f"circulant-bipartite a={a} b={b} k={k} l={l} w={weight}"])


@construct.command('circulant')
@click.option('--a', 'a', type=int, required=True, help='块大小')
@click.option('--k', 'k', type=int, required=True, help='带宽')
@click.option('--l', 'l', type=int, required=True, help='块数的一半')
@_weight_option
@_output_options
@click.pass_context
@_handle_errors
def construct_circulant(ctx, a, k, l, weight, out, report):
    """循环带状图 K_{X,k/l}"""
    graph = circulant_unipartite(CirculantSpec(a=a, k=k, l=l), _WEIGHTS[weight])
    _emit_graph(ctx, graph, out, report, [f"circulant a={a} k={k} l={l} w={weight}"])


@construct.command('complete')
@click.option('--n', 'n', type=int, required=True, help='顶点数')
@_weight_option
@_output_options
@click.pass_context
@_handle_errors
def construct_complete(ctx, n, weight, out, report):
    """完全图 K_n"""
    graph = complete_graph(n, _WEIGHTS[weight])
    _emit_graph(ctx, graph, out, report, [f"complete n={n} w={weight}"])


# =========================================================================
# verify / blowup
# =========================================================================

@cli.command()
@click.option('--in', 'in_path', type=click.Path(dir_okay=False), required=True, help='边表文件')
@click.option('--lemma', is_flag=True, help='同时检查相邻顶点和引理')
@click.option('--restricted', is_flag=True, help='同时检查是否属于受限类')
@click.option('--report', is_flag=True, help='输出详细报告')
@click.pass_context
@_handle_errors
def verify(ctx, in_path, lemma, restricted, report):
    """验证边表文件是否为 SED-pair"""
    graph = read_edge_list(in_path)
    result = verify_sed(graph)

    if report and not _quiet(ctx):
        _print_report_table(graph)

    tokens = [f"is_sed={_bool(result.is_sed)}", f"total={result.total_weight}"]
    if lemma:
        tokens.append(f"lemma={_bool(check_adjacent_vertex_sum_lemma(graph))}" if result.is_sed else "lemma=n/a")
    if restricted:
        tokens.append(f"restricted={_bool(restricted_class_check(graph))}")
    click.echo(" ".join(tokens))


@cli.command()
@click.option('--in', 'in_path', type=click.Path(dir_okay=False), required=True, help='边表文件')
@click.option('--k', 'k', type=int, required=True, help='膨胀倍数')
@click.option('--apex', is_flag=True, help='膨胀后再增广一个与全部顶点相连的 +1 顶点')
@_output_options
@click.pass_context
@_handle_errors
def blowup(ctx, in_path, k, apex, out, report):
    """k 倍膨胀"""
    graph = read_edge_list(in_path)
    result = blow_up(graph, k)
    extra = []
    if verify_sed(graph).is_sed:
        extra.append(f"remark={_bool(check_blowup_remark(graph, k).holds)}")
    if apex:
        result = apex_augment(result)
    _emit_graph(ctx, result, out, report, [f"blowup k={k} apex={_bool(apex)}"], extra)


# =========================================================================
# extremal
# =========================================================================

@cli.command()
@click.option('--n', 'n', type=int, required=True, help='顶点数')
@click.option('--e', 'e', type=int, help='边数')
@click.option('--all-e', is_flag=True, help='遍历 0..C(n,2) 的全部边数（默认）')
@click.option('--oracle', is_flag=True, help='同时用穷举结果对照')
@click.pass_context
@_handle_errors
def extremal(ctx, n, e, all_e, oracle):
    """准完全图、准星图与 F(n, e)"""
    if e is not None and all_e:
        raise click.UsageError("--e 与 --all-e 不能同时使用")

    values = [e] if e is not None else range(n * (n - 1) // 2 + 1)
    max_n = _config(ctx).brute_force_max_n

    table = Table(title=f"F({n}, e)")
    for column in ("e", "Σdeg²(C)", "Σdeg²(S)", "F") + (("穷举",) if oracle else ()):
        table.add_column(column, justify="right")

    lines = []
    for value in values:
        spec = ExtremalSpec(n, value)
        c_value = sum_deg_sq(quasi_complete(n, spec.e))
        s_value = sum_deg_sq(quasi_star(n, spec.e))
        row = [str(value), str(c_value), str(s_value), str(max(c_value, s_value))]
        line = f"e={value} C={c_value} S={s_value} F={max(c_value, s_value)}"
        if oracle:
            oracle_value = brute_force_f_max(n, value, max_n=max_n)
            row.append(str(oracle_value))
            line += f" oracle={oracle_value}"
        table.add_row(*row)
        lines.append(line)

    if not _quiet(ctx):
        console.print(table)
    for line in lines:
        click.echo(line)


# =========================================================================
# optimize
# =========================================================================

@cli.command()
@click.option('--system', type=click.Choice([s.value for s in MinimaxSystem] + ['all']), default='all',
              show_default=True, help='要证书化的系统')
@click.option('--grid', 'grid_step', type=float, help='网格步长（默认取配置 optimize.grid_step）')
@click.option('--csv', 'csv_dir', type=click.Path(file_okay=False), help='输出采样曲线 CSV 的目录')
@click.option('--workers', type=int, help='网格求值线程数')
@click.pass_context
@_handle_errors
def optimize(ctx, system, grid_step, csv_dir, workers):
    """各优化系统的网格加细化数值证书"""
    config = _config(ctx)
    step = grid_step if grid_step is not None else config.grid_step
    workers = workers if workers is not None else config.optimize_workers
    systems = list(MinimaxSystem) if system == 'all' else [MinimaxSystem(system)]

    timer = StageTimer()
    certificates = []
    for target in systems:
        with timer.stage(target.value) as metrics:
            certificates.append(certify_floor(target, step, config.refine_tol, workers))
            metrics.items_processed = 1

    if csv_dir:
        with timer.stage("csv") as metrics:
            paths = write_curves_csv(figure_curves(step), csv_dir, config.csv_decimals)
            metrics.items_processed = len(paths)

    if not _quiet(ctx):
        table = Table(title="数值证书")
        for column in ("系统", "最小值", "argmin", "下界", "余量", "通过"):
            table.add_column(column)
        for cert in certificates:
            table.add_row(
                cert.system.value,
                f"{cert.min_value:.10f}",
                f"({cert.argmin[0]:.6f}, {cert.argmin[1]:.6f})",
                f"{cert.floor:.10f}",
                f"{cert.margin:.3e}",
                "[green]✓[/green]" if cert.passed else "[red]✗[/red]",
            )
        console.print(table)
        for cert in certificates:
            for note in cert.notes:
                console.print(f"[dim]{cert.system.value}: {note}[/dim]")
        if len(systems) > 1 or csv_dir:
            console.print(timer.summary_table())

    for cert in certificates:
        click.echo(f"system={cert.system.value} min={_num(cert.min_value)} "
                   f"argmin={_num(cert.argmin[0])},{_num(cert.argmin[1])} "
                   f"floor={_num(cert.floor)} passed={_bool(cert.passed)}")

    if not all(cert.passed for cert in certificates):
        err_console.print("[red]错误: 存在未通过的证书[/red]")
        sys.exit(EXIT_DOMAIN)


# =========================================================================
# gn
# =========================================================================

@cli.command()
@click.option('--n', 'n', type=int, required=True, help='阶数')
@click.option('--mode', type=click.Choice([m.value for m in SearchMode]), default='all', show_default=True)
@click.option('--workers', '-j', type=int, help='进程数（0 = 自动检测，1 = 串行）')
@click.option('--witness', type=click.Path(dir_okay=False), help='把达到最优值的图写入边表文件')
@click.option('--symmetry/--no-symmetry', default=None, help='顶点 0 对称约简')
@click.option('--no-prune', is_flag=True, help='关闭剪枝（只用于对照）')
@click.pass_context
@_handle_errors
def gn(ctx, n, mode, workers, witness, symmetry, no_prune):
    """精确计算 g(n) = min s[(G,f)]"""
    config = _config(ctx)
    quiet = _quiet(ctx)

    search_config = SearchConfig(
        n=n,
        mode=SearchMode(mode),
        max_n_guard=config.max_n_guard,
        parallel=workers if workers is not None else config.solver_workers,
        report_witness=True,
        prune=not no_prune,
        symmetry=config.symmetry if symmetry is None else symmetry,
        prefix_depth=config.prefix_depth,
        incumbent_poll=config.incumbent_poll,
    )

    tracker = None
    if not quiet and search_config.workers > 1:
        tracker = ProgressTracker(f"g({n})", num_workers=search_config.workers, console=console)

    timer = StageTimer()
    with timer.stage("search") as metrics:
        result = solve_g(search_config, tracker)
        metrics.items_processed = result.nodes_explored
    with timer.stage("bounds"):
        verify_lower_bounds([result])

    if witness and result.witness is not None:
        write_edge_list(result.witness, witness, [f"g({n}) mode={mode} value={result.g_value}"])

    if not quiet:
        console.print(timer.summary_table())
    click.echo(f"n={result.n} g={result.g_value} nodes={result.nodes_explored}")


# =========================================================================
# bounds / pell
# =========================================================================

@cli.command()
@click.option('--count', type=int, default=3, show_default=True, help='Pell 解个数')
@click.pass_context
@_handle_errors
def bounds(ctx, count):
    """极值构造的 (n, s, s/n²) 序列"""
    table = Table(title=f"s/n² → {THEOREM2_LIMIT:.6f}")
    for column in ("k", "p", "q", "n", "s", "s/n²"):
        table.add_column(column, justify="right")

    lines = []
    for index, pq in enumerate(pell_solutions(count), start=1):
        bound = theorem2_bound_check(pq)
        table.add_row(str(index), str(pq.p), str(pq.q), str(bound.n), str(bound.s), f"{bound.ratio:.6f}")
        lines.append(f"k={index} p={pq.p} q={pq.q} n={bound.n} s={bound.s} ratio={bound.ratio:.6f}")

    if not _quiet(ctx):
        console.print(table)
    for line in lines:
        click.echo(line)


@cli.command()
@click.option('--count', type=int, help='输出前 count 个正解')
@click.option('--index', 'index', type=int, help='只输出第 index 个正解（闭式计算）')
@click.pass_context
@_handle_errors
def pell(ctx, count, index):
    """Pell 方程 p² = 2q² + 1 的正解"""
    if count is not None and index is not None:
        raise click.UsageError("--count 与 --index 不能同时使用")

    if index is not None:
        pairs = [(index, pell_solution(index))]
    else:
        pairs = list(enumerate(pell_solutions(count if count is not None else 5), start=1))

    for k, pq in pairs:
        click.echo(f"k={k} p={pq.p} q={pq.q}")


# =========================================================================
# config
# =========================================================================

@cli.group('config')
def config_group():
    """查看或初始化配置"""


@config_group.command('show')
@click.pass_context
def config_show(ctx):
    """输出生效的配置（YAML）"""
    click.echo(_config(ctx).dump(), nl=False)


@config_group.command('init')
@click.argument('path', type=click.Path(dir_okay=False))
@click.option('--force', is_flag=True, help='覆盖已存在的文件')
@click.pass_context
@_handle_errors
def config_init(ctx, path, force):
    """把默认配置写入 PATH"""
    target = Path(path)
    if target.exists() and not force:
        err_console.print(f"[red]错误: 文件已存在: {target}（使用 --force 覆盖）[/red]")
        sys.exit(EXIT_USAGE)

    Config(use_env=False).save(str(target))
    if not _quiet(ctx):
        console.print(f"[green]已写入默认配置[/green] {target}")


def run(argv: Optional[List[str]] = None) -> int:
    """以参数列表运行 CLI，返回退出码"""
    try:
        cli.main(args=argv, prog_name='sedpair', standalone_mode=True)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else (0 if e.code is None else EXIT_DOMAIN)
    return 0


def main():
    """CLI 入口点"""
    cli()


if __name__ == '__main__':
    main()
