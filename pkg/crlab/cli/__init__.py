from crlab.cli.manager import CRLabManager
from crlab.cli.service import build_parser, get_schema, main, run
from crlab.cli.storage import ManifestStore

__all__ = ["CRLabManager", "ManifestStore", "build_parser", "get_schema", "main", "run"]
