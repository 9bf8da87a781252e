"""Rule-based morphological inflection baseline and shared-task tooling."""

__version__ = "0.1.0"

from .align import Alignment, ZoneSplit, align, split_zones
from .core import (ColumnOrder, Condition, Dataset, FeatureBundle, Paradigm, Triple,
                   parse_paradigms, parse_triples, serialize_paradigms, serialize_triples)
from .evaluate import (EvalReport, levenshtein, macro_average, oracle_ensemble,
                       oracle_feature_combination, score_forms, score_paradigms, score_triples)
from .inflector import Model, Orientation, detect_orientation, inflect, train
from .paradigm import complete, train_from_paradigms
from .rules import PrefixRule, RuleStore, SuffixRule, extract_rules
from .sampler import (SplitSpec, count_tokens, make_task1_splits, make_task2_splits,
                      sample_without_replacement, unigram_distribution)
