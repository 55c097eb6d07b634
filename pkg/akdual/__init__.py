__version__ = "0.1.0"

from akdual.config import load_config_file
from akdual.pattern import PatternError, RelationPattern, normalize, path_survives
from akdual.dual import SignConvention, build_dual
from akdual.akdual_run import analyze, sweep, verify_pattern
