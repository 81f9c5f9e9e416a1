import hashlib
import json
from datetime import datetime, timedelta
from pathlib import Path
from typing import Any, Dict, Optional

from models import Multigraph

from .formats import canonical_graph_json


class OracleCache:
    """
    On-disk cache of exact oracle answers, one JSON file per (graph, query).

    Keys hash the canonical graph JSON together with the query string, so
    the same edges listed in any order share an entry.
    """

    def __init__(self, cache_dir: Optional[str] = None, expiry_hours: Optional[int] = None):
        from expander_config import CACHE_EXPIRY_HOURS, DEFAULT_CACHE_DIR

        self.cache_dir = Path(cache_dir or DEFAULT_CACHE_DIR)
        self.expiry_hours = CACHE_EXPIRY_HOURS if expiry_hours is None else expiry_hours
        self.cache_dir.mkdir(parents=True, exist_ok=True)

    def _get_cache_key(self, graph: Multigraph, query: str) -> str:
        """Generate cache key from the canonical graph and the query"""
        content = f"{canonical_graph_json(graph)}:{query}"
        return hashlib.md5(content.encode()).hexdigest()

    def _get_cache_path(self, cache_key: str) -> Path:
        return self.cache_dir / f"{cache_key}.json"

    def _is_expired(self, cache_path: Path) -> bool:
        if not cache_path.exists():
            return True

        modified_time = datetime.fromtimestamp(cache_path.stat().st_mtime)
        expiry_time = modified_time + timedelta(hours=self.expiry_hours)
        return datetime.now() > expiry_time

    def get(self, graph: Multigraph, query: str) -> Optional[Dict[str, Any]]:
        """Cached result if present and fresh"""
        cache_path = self._get_cache_path(self._get_cache_key(graph, query))

        if self._is_expired(cache_path):
            return None

        try:
            with open(cache_path, "r", encoding="utf-8") as f:
                data = json.load(f)
                return data.get("result")
        except (FileNotFoundError, json.JSONDecodeError):
            return None

    def set(self, graph: Multigraph, query: str, result: Dict[str, Any]):
        cache_path = self._get_cache_path(self._get_cache_key(graph, query))

        data = {
            "query": query,
            "vertices": graph.vertex_count,
            "edges": graph.edge_count,
            "result": result,
            "cached_at": datetime.now().isoformat(),
        }

        with open(cache_path, "w", encoding="utf-8") as f:
            json.dump(data, f, indent=2)

    def cleanup(self) -> int:
        """Remove expired cache files; returns how many were removed"""
        removed = 0
        for cache_file in self.cache_dir.glob("*.json"):
            if self._is_expired(cache_file):
                cache_file.unlink()
                removed += 1
        return removed
