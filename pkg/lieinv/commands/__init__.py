"""
lieinv.commands 패키지

서브커맨드마다 모듈 하나. main.py 에서 그룹에 붙인다.

- catalog    : case 목록과 파라미터 범위
- cohomology : Betti 수, 대표원, exact 판정
- complex    : 복소 부분대수 grid 탐색, J 적분가능성, 템플릿 인스턴스 확인
- symplectic : 닫힌 2-형식 family 와 존재 판정
- kahler     : 호환 family, Kähler 판정, 계량 부호수, J_{mu,nu} 스캔
- verify     : 표 전체 검증
"""

import functools
import json
import logging
from typing import Optional, Tuple

import click

from lieinv.catalog import catalog_build, case_config, normalize_params
from lieinv.errors import EXIT_USAGE, ConfigError, JacobiError, LieInvError
from lieinv.lie import LieAlgebra, jacobi_defect
from lieinv.parsing import ingest, parse_params

log = logging.getLogger("lieinv.commands")


# ---------- 공통 옵션 ----------

case_option = click.option("--case", "case_id", metavar="ID", help="catalog case id (see `lieinv catalog`)")
params_option = click.option("--params", "params_text", metavar="K=V,...", help="case parameters, e.g. lam=3/5")
file_option = click.option("--file", "file_path", type=click.Path(dir_okay=False), help="algebra file to ingest")
json_option = click.option("--json", "as_json", is_flag=True, help="machine-readable output (JSON lines)")
grid_option = click.option("--grid", "grid_name", metavar="NAME", default=None,
                           help="Gaussian grid for searches (small | default)")


def handle_errors(func):
    """LieInvError → 'error: ...' 한 줄 + 매핑된 종료 코드"""

    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except ConfigError as e:
            log.error("%s", e)
            click.echo(f"error: {e}", err=True)
            raise SystemExit(EXIT_USAGE)
        except LieInvError as e:
            log.debug("%s failed", func.__name__, exc_info=True)
            click.echo(f"error: {e}", err=True)
            raise SystemExit(e.exit_code)

    return wrapper


def load_algebra(case_id: Optional[str], params_text: Optional[str], file_path: Optional[str],
                 require_lie: bool = True) -> Tuple[LieAlgebra, Optional[str]]:
    """--case/--params 또는 --file → (LieAlgebra, case_id). 둘 다 없거나 둘 다 있으면 UsageError."""
    if bool(case_id) == bool(file_path):
        raise click.UsageError("give exactly one of --case or --file")
    if file_path:
        if params_text:
            raise click.UsageError("--params only applies to --case")
        g = ingest(file_path)
    else:
        case_config(case_id)
        params = normalize_params(case_id, parse_params(params_text))
        g = catalog_build(case_id, params)
    if require_lie:
        defects = jacobi_defect(g)
        if defects:
            i, j, k, _ = defects[0]
            raise JacobiError(f"{g.name}: Jacobi identity fails at (e{i}, e{j}, e{k})")
    return g, case_id


def emit_json(data) -> None:
    click.echo(json.dumps(data, sort_keys=True, ensure_ascii=False))
