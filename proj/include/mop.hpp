// Copyright 2026 The moprc Authors
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

#include "mop/core.hpp"
#include "mop/coloring.hpp"
#include "mop/cuts.hpp"
#include "mop/edge_coloring.hpp"
#include "mop/error.hpp"
#include "mop/exact.hpp"
#include "mop/farley.hpp"
#include "mop/generators.hpp"
#include "mop/graph.hpp"
#include "mop/io.hpp"
#include "mop/metrics.hpp"
#include "mop/spine.hpp"
#include "mop/verify.hpp"
