from pathlib import Path

repo_dir = Path(__file__).parent
tables_dir = repo_dir / "json_tables"
default_tables_file = tables_dir / "published.json"
