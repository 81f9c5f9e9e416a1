from .terminal import Terminal, pretty_rational

__all__ = ["Terminal", "pretty_rational"]
