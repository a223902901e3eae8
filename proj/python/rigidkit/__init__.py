# Copyright 2026 The rigidkit Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Rigidity of periodic and cone frameworks from colored graphs."""

from ._rigidkit import (
    Component,
    Graph,
    OracleBoundExceeded,
    ParseError,
    component_images,
    cone3_components,
    cone3_decide,
    cone3_extract,
    cone_components,
    cone_decide,
    cone_extract,
    cone_family,
    develop,
    is_trivial_image,
    oracle_components,
    oracle_is_sparse,
    oracle_is_tight,
    oracle_max_independent,
    random_colored,
    ross_components,
    ross_decide,
    ross_extract,
    ross_family,
)

__all__ = [
    "Component",
    "Graph",
    "OracleBoundExceeded",
    "ParseError",
    "component_images",
    "cone3_components",
    "cone3_decide",
    "cone3_extract",
    "cone_components",
    "cone_decide",
    "cone_extract",
    "cone_family",
    "develop",
    "is_trivial_image",
    "oracle_components",
    "oracle_is_sparse",
    "oracle_is_tight",
    "oracle_max_independent",
    "random_colored",
    "ross_components",
    "ross_decide",
    "ross_extract",
    "ross_family",
]
