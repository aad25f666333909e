"""Enhanced logging using Rich's logging handler."""

import logging
from typing import Any, Dict, List

from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape


class EnhancedLogger:
    """Enhanced logger using Rich for colored output without tables."""

    def __init__(self, name: str = "ng-chromatic", level: int = logging.INFO):
        """Initialize the enhanced logger.

        Args:
            name: Logger name
            level: Logging level
        """
        self.console = Console()

        self.logger = logging.getLogger(name)
        self.logger.setLevel(level)

        # Remove existing handlers to avoid duplicates
        for handler in self.logger.handlers[:]:
            self.logger.removeHandler(handler)

        rich_handler = RichHandler(
            console=self.console,
            show_time=False,
            show_path=False,
            rich_tracebacks=True,
            markup=True,
        )
        rich_handler.setFormatter(logging.Formatter(fmt="%(message)s"))
        self.logger.addHandler(rich_handler)

    def set_debug(self, enabled: bool) -> None:
        """Switch between DEBUG and INFO level."""
        self.logger.setLevel(logging.DEBUG if enabled else logging.INFO)

    def debug(self, message: str) -> None:
        """Log debug message."""
        self.logger.debug(f"[dim cyan]🔍 {message}[/dim cyan]")

    def success(self, message: str) -> None:
        """Log success message."""
        self.logger.info(f"[green]✓ {message}[/green]")

    def warning(self, message: str) -> None:
        """Log warning message."""
        self.logger.warning(f"[yellow]⚠ {message}[/yellow]")

    def error(self, message: str) -> None:
        """Log error message."""
        self.logger.error(f"[red]✗ {message}[/red]")

    def status(self, message: str) -> None:
        """Log status message."""
        self.logger.info(f"[cyan]→ {message}[/cyan]")

    def section_header(self, title: str) -> None:
        """Print a section header."""
        self.logger.info(f"\n[bold cyan]═══ {escape(title)} ═══[/bold cyan]")

    def print_profile(self, profile: Dict[str, Any]) -> None:
        """Print the parameter values of a graph and its complement.

        Args:
            profile: Dictionary produced by ``ParameterProfile.to_dict``
        """
        graph6 = profile.get("graph6") or "-"
        self.section_header(f"Graph {graph6} (n = {profile['order']})")

        for title, side in (("G", profile["g"]), ("complement", profile["complement"])):
            regular = " [green]regular[/green]" if side["regular"] else ""
            self.logger.info(
                f"  [bold white]{title:<10}[/bold white] "
                f"χ [cyan]{side['chi']}[/cyan]  "
                f"χ₂ [cyan]{side['chi2']}[/cyan]  "
                f"χᵢ [cyan]{side['chi_injective']}[/cyan]  "
                f"χ□ [cyan]{side['chi_square']}[/cyan]  "
                f"[dim]Δ {side['max_degree']} δ {side['min_degree']}[/dim]{regular}"
            )

    def print_report(self, checks: List[Dict[str, Any]]) -> None:
        """Print one line per theorem check.

        Args:
            checks: Dictionaries produced by ``CheckResult.to_dict``
        """
        self.section_header("Theorem Checks")

        for check in checks:
            if not check["applicable"]:
                verdict = "[dim]n/a[/dim]"
            elif check["holds"]:
                verdict = "[green]holds[/green]"
            else:
                verdict = "[bold red]VIOLATED[/bold red]"

            flags = []
            if check["extremal"]:
                flags.append("[magenta]extremal[/magenta]")
            if check["exception"]:
                flags.append("[yellow]exception[/yellow]")
            suffix = f" {' '.join(flags)}" if flags else ""

            self.logger.info(
                f"  [cyan]{check['check_id']:<15}[/cyan] {verdict} "
                f"[dim]{escape(check['detail'])}[/dim]{suffix}"
            )

    def print_certificates(self, certificates: Dict[str, Dict[str, Any]]) -> None:
        """Print the optimal coloring found for each variant on both sides.

        Args:
            certificates: Variant name -> ``{"g": ..., "complement": ...}``,
                each side a ``ColoringResult.to_dict`` document
        """
        if not certificates:
            return
        self.section_header("Certificates")

        for variant, sides in certificates.items():
            for title, side in (("G", sides["g"]), ("complement", sides["complement"])):
                checked = ""
                if "certificate_valid" in side:
                    checked = " [green]valid[/green]" if side["certificate_valid"] else " [red]invalid[/red]"
                self.logger.info(
                    f"  [cyan]{variant:<11}[/cyan] [bold white]{title:<10}[/bold white] "
                    f"[cyan]{side['value']}[/cyan] colors "
                    f"[dim]{escape(str(side['assignment']))}[/dim]{checked}"
                )

    def print_sweep_summary(self, summary: Dict[str, Any]) -> None:
        """Print per-check totals of a sweep.

        Args:
            summary: Dictionary produced by ``SweepSummary.to_dict``
        """
        orders = ", ".join(str(n) for n in summary["orders"]) or "-"
        self.section_header(f"Sweep Summary (orders {orders})")

        for check_id, tally in summary["checks"].items():
            violations = tally["violation_count"]
            color = "red" if violations else "green"
            line = (
                f"  [cyan]{check_id:<15}[/cyan] "
                f"applicable [white]{tally['applicable_count']}[/white]  "
                f"violations [{color}]{violations}[/{color}]  "
                f"extremal [magenta]{tally['extremal_count']}[/magenta]"
            )
            if tally["exception_count"]:
                line += f"  exceptions [yellow]{tally['exception_count']}[/yellow]"
            if tally["violation_witness"]:
                line += f"  first violation [red]{escape(tally['violation_witness'])}[/red]"
            self.logger.info(line)

        self.logger.info(
            f"\n[bold white]{summary['graph_count']} graphs, "
            f"{summary['violation_count']} violations[/bold white] "
            f"[dim]({summary['duration_seconds']:.2f}s)[/dim]"
        )

    def print_constructions(self, outcomes: List[Dict[str, Any]]) -> None:
        """Print whether each constructed witness attains its bound.

        Args:
            outcomes: Dictionaries produced by ``ConstructionOutcome.to_dict``
        """
        self.section_header("Extremal Constructions")

        for outcome in outcomes:
            if outcome["extremal"]:
                verdict = "[green]attains bound[/green]"
            elif outcome["holds"]:
                verdict = "[yellow]not extremal[/yellow]"
            else:
                verdict = "[bold red]VIOLATED[/bold red]"
            self.logger.info(
                f"  [bold white]{escape(outcome['family']):<22}[/bold white] "
                f"[cyan]{outcome['check_id']:<12}[/cyan] {verdict} "
                f"[dim]{escape(outcome['detail'])}[/dim]"
            )


# Global logger instance
logger = EnhancedLogger()
