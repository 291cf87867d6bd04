"""Mechanical learning laboratory.

Bit patterns, X-form expressions as internal representations, exact data
sufficiency, an interval learning machine, and extraction of the boolean
function computed by small threshold networks.
"""

from .canon import canonical_min_dnf, canonicalize, minimize
from .errors import MechLearnError
from .learner import LearningMachine, new_machine, run_to_convergence
from .nnbridge import (ThresholdNet, TrainConfig, extract_function, init_net,
                       net_to_xform, trace_training, train_epoch)
from .patterns import (Dataset, LabeledSample, Pattern, enumerate_patterns,
                       load_dataset, parse_pattern, sample, validate_dataset)
from .sufficiency import (AllFunctions, BoundedDnf, ExplicitList, consistent,
                          consistent_count, is_sufficient, minimal_sufficient_subset)
from .xform import (TruthTable, equivalent, evaluate, parse_xform, random_xform,
                    size, to_text, truth_table)

__version__ = "0.1.0"
