// Copyright 2026 The qadv Authors
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

// Umbrella header. oracles.hpp and verify.hpp are not included: they pull in
// Eigen and are only needed for self-checks.
#pragma once

#include "qadv/correlations.hpp"
#include "qadv/error.hpp"
#include "qadv/optimize.hpp"
#include "qadv/protocol.hpp"
#include "qadv/qcore.hpp"
#include "qadv/sweep.hpp"
#include "qadv/transactions.hpp"
#include "qadv/xstate.hpp"
