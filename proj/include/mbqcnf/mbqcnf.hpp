// Copyright 2026 The mbqcnf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "mbqcnf/error.hpp"
#include "mbqcnf/gf2.hpp"
#include "mbqcnf/gflow.hpp"
#include "mbqcnf/graph.hpp"
#include "mbqcnf/instances.hpp"
#include "mbqcnf/json_io.hpp"
#include "mbqcnf/normal_forms.hpp"
#include "mbqcnf/open_graph.hpp"
#include "mbqcnf/search.hpp"
#include "mbqcnf/simulator.hpp"
#include "mbqcnf/vertex_set.hpp"
