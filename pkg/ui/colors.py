from typing import Dict, Literal

# One palette for every table and message of the expanders command

ColorKey = Literal[
    "header",
    "title",
    "vertex",
    "rational",
    "count",
    "strategy",
    "success",
    "error",
    "info",
    "warning",
    "exact",
    "heuristic",
    "dim",
    "bold",
]

COLORS: Dict[ColorKey, str] = {
    # tables
    "header": "blue",
    "title": "blue",
    "vertex": "cyan",
    "rational": "bright_white",
    "count": "green",
    "strategy": "magenta",
    # status lines
    "success": "green",
    "error": "red",
    "info": "blue",
    "warning": "yellow",
    # where a certificate came from
    "exact": "light_green",
    "heuristic": "yellow",
    "dim": "dim",
    "bold": "bold",
}


def get_color(color_key: ColorKey) -> str:
    return COLORS.get(color_key, "")


def style(text: str, color_key: ColorKey, bold: bool = False) -> str:
    """Wrap text in rich markup for the given palette entry"""
    color = get_color(color_key)
    if not color:
        return text
    markup = f"{color} bold" if bold else color
    return f"[{markup}]{text}[/{markup}]"


# column styles for rich.Table
HEADER_COLOR = COLORS["header"]
VERTEX_COLOR = COLORS["vertex"]
RATIONAL_COLOR = COLORS["rational"]
COUNT_COLOR = COLORS["count"]
STRATEGY_COLOR = COLORS["strategy"]
