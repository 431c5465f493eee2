// Copyright 2026 The Heliotrack Authors
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

// Umbrella header.

#ifndef HELIOTRACK_HELIOTRACK_HPP
#define HELIOTRACK_HELIOTRACK_HPP

#include "heliotrack/errors.hpp"
#include "heliotrack/io.hpp"
#include "heliotrack/mec.hpp"
#include "heliotrack/mtm.hpp"
#include "heliotrack/oracle.hpp"
#include "heliotrack/rational.hpp"
#include "heliotrack/scenario.hpp"
#include "heliotrack/step_function.hpp"

#endif  // HELIOTRACK_HELIOTRACK_HPP
