// Copyright 2026 The fmat Authors
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

// Umbrella header: the whole library.

#pragma once

#include "fmat/boolean.hpp"
#include "fmat/compact.hpp"
#include "fmat/complex_root_two.hpp"
#include "fmat/errors.hpp"
#include "fmat/laws.hpp"
#include "fmat/morphism.hpp"
#include "fmat/protocols.hpp"
#include "fmat/quantum.hpp"
#include "fmat/random_gen.hpp"
#include "fmat/report.hpp"
#include "fmat/scalar.hpp"
#include "fmat/shape.hpp"
#include "fmat/structural.hpp"
#include "fmat/text_format.hpp"

namespace fmat {}
