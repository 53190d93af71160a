// Copyright 2026 The vcgr Authors.
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

// Umbrella header: pulls in the whole routing simulator.

#ifndef VCGR_VCGR_HPP_
#define VCGR_VCGR_HPP_

#include "vcgr/anomaly.hpp"
#include "vcgr/engine.hpp"
#include "vcgr/geometry.hpp"
#include "vcgr/harness.hpp"
#include "vcgr/metrics.hpp"
#include "vcgr/protocols.hpp"
#include "vcgr/rng.hpp"
#include "vcgr/topology.hpp"
#include "vcgr/vcs.hpp"

#endif  // VCGR_VCGR_HPP_
