// Copyright 2026 The mubkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Umbrella header.

#pragma once

#include "mubkit/common.hpp"
#include "mubkit/finite_field.hpp"
#include "mubkit/galois_ring.hpp"
#include "mubkit/characters.hpp"
#include "mubkit/report.hpp"
#include "mubkit/parallel.hpp"
#include "mubkit/matrix.hpp"
#include "mubkit/mub.hpp"
#include "mubkit/phase_operator.hpp"
#include "mubkit/entanglement.hpp"
#include "mubkit/serialize.hpp"
#include "mubkit/acceptance.hpp"
