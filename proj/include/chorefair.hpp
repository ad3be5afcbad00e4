// Copyright 2026 The Authors.
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

#include "chorefair/envy_graph.hpp"
#include "chorefair/errors.hpp"
#include "chorefair/exhaustive.hpp"
#include "chorefair/fairness.hpp"
#include "chorefair/generate.hpp"
#include "chorefair/ido.hpp"
#include "chorefair/instance.hpp"
#include "chorefair/io.hpp"
#include "chorefair/oracle.hpp"
#include "chorefair/properties.hpp"
#include "chorefair/rational.hpp"
#include "chorefair/round_robin.hpp"
#include "chorefair/tefx.hpp"
#include "chorefair/three_agent.hpp"
#include "chorefair/verify.hpp"
