from akdual.ext.rep import QuiverRep, RepError, projective, simple
from akdual.ext.resolution import (ResolutionError, ResolutionStep, check_oracle_agreement, ext_dims,
                                   ext_table, global_dimension, minimal_resolution, resolution_length,
                                   syzygy)
