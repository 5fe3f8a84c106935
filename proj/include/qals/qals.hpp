// Copyright 2026 The qals developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "qals/cost_model.hpp"
#include "qals/encoding.hpp"
#include "qals/experiments.hpp"
#include "qals/io.hpp"
#include "qals/parallel.hpp"
#include "qals/problem.hpp"
#include "qals/qubo.hpp"
#include "qals/rng.hpp"
#include "qals/samplers.hpp"
#include "qals/solvers.hpp"
