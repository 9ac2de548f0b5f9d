"""
Point d'entrée de la ligne de commande `msym`

Codes de sortie : 0 succès, 2 entrée invalide, 3 violation de contrat
(y compris une identité en échec, dont le rapport est tout de même émis).
Le rapport part sur stdout, les diagnostics sur stderr.
"""

import argparse
import sys
from typing import TextIO

from msym_toolkit import __version__
from msym_toolkit.core.config import get_config
from msym_toolkit.core.exceptions import ContractViolation, ToolkitError
from msym_toolkit.monitoring.logger import configure_logging, get_logger, log_event

from .commands import COMMANDS
from .report import OUTPUT_FORMATS

logger = get_logger(__name__)


def build_parser() -> argparse.ArgumentParser:
    config = get_config()
    common = argparse.ArgumentParser(add_help=False)
    source = common.add_argument_group("structure")
    source.add_argument("--form", help="expression de la forme, ex. 'dx1^dx2 + dx3^dx4'")
    source.add_argument("--file", help="fichier UTF-8 contenant l'expression")
    source.add_argument("--catalog", help="symplectic, volume, multicotangent, g2 (ex. 'symplectic(2)')")
    source.add_argument("--n", type=int, help="dimension (ou base q pour multicotangent)")
    source.add_argument("--k", type=int, help="degré k de multicotangent")
    common.add_argument("--m", type=int, help="degré des multivecteurs")
    common.add_argument("--point", action="append", help="point '1,2,1/2' (répétable)")
    common.add_argument("--seed", type=int, default=config.default_seed)
    common.add_argument("--cases", type=int, default=config.default_cases)
    common.add_argument("--output", choices=OUTPUT_FORMATS, default=config.output_format)
    common.add_argument("--zeta", help="forme hamiltonienne ζ")
    common.add_argument("--xi", help="forme hamiltonienne ξ")
    common.add_argument("--xi-field", help="champ hamiltonien de ξ (calculé si absent)")
    common.add_argument("--zeta-field", help="champ hamiltonien de ζ (calculé si absent)")
    common.add_argument("--field", help="champ de multivecteurs, ex. 'x1*e1'")
    common.add_argument("--max-degree", type=int, help="degré maximal des multivecteurs tirés")
    common.add_argument("--matrix", help="matrice 'a,b;c,d'")
    common.add_argument("--scale", help="facteur λ de λ·Id")
    common.add_argument("--target", help="forme Ω2 de φ*Ω2 = cΩ1 (Ω par défaut)")

    parser = argparse.ArgumentParser(
        prog="msym", description="Calcul extérieur exact pour les structures multisymplectiques"
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        subparsers.add_parser(name, parents=[common], help=help_text)
    return parser


def run_command(
    argv: list[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None
) -> int:
    """
    Exécute une commande et écrit le rapport

    Args:
        argv: Arguments (sans le nom du programme)
        stdout: Flux du rapport (sys.stdout par défaut)
        stderr: Flux des erreurs (sys.stderr par défaut)

    Returns:
        Code de sortie
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        config = get_config()
        configure_logging(config.log_level)
        args = build_parser().parse_args(argv)
    except ToolkitError as exc:
        print(f"erreur: {exc}", file=stderr)
        return exc.exit_code
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    command, _ = COMMANDS[args.command]
    try:
        report = command(args)
    except ToolkitError as exc:
        logger.info("command_failed", command=args.command, error_type=type(exc).__name__)
        print(f"erreur: {exc}", file=stderr)
        return exc.exit_code

    stdout.write(report.render(args.output))
    log_event("command_completed", command=args.command, passed=report.passed)
    if not report.passed:
        print("erreur: au moins une identité a échoué", file=stderr)
        return ContractViolation.exit_code
    return 0


def main() -> int:
    return run_command(sys.argv[1:])
