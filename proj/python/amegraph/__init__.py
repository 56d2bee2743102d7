# Copyright 2026 The amegraph Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""AME graph states over prime fields: verification, search and secret sharing."""

from amegraph._core import (
    AmeReport,
    AmegraphError,
    Graph,
    SearchResult,
    ame_report,
    builtin_witness_names,
    canonical_form,
    code_to_graph,
    composite_report,
    cut_edits,
    dense_cut_entropy,
    factorize,
    is_ame,
    is_ame_grouped,
    op_mult,
    op_star,
    run_criterion,
    run_ramp,
    run_threshold,
    search,
    truncate,
)

__all__ = [
    "AmeReport",
    "AmegraphError",
    "Graph",
    "SearchResult",
    "ame_report",
    "builtin_witness_names",
    "canonical_form",
    "code_to_graph",
    "composite_report",
    "cut_edits",
    "dense_cut_entropy",
    "factorize",
    "is_ame",
    "is_ame_grouped",
    "op_mult",
    "op_star",
    "run_criterion",
    "run_ramp",
    "run_threshold",
    "search",
    "truncate",
]
