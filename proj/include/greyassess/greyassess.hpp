// Copyright 2026 The Greyassess Authors.
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

#ifndef GREYASSESS_GREYASSESS_HPP
#define GREYASSESS_GREYASSESS_HPP

#include "greyassess/assessment.hpp"
#include "greyassess/csv_io.hpp"
#include "greyassess/error.hpp"
#include "greyassess/expression.hpp"
#include "greyassess/grade_scale.hpp"
#include "greyassess/grey_number.hpp"
#include "greyassess/report.hpp"
#include "greyassess/tfn.hpp"

#endif  // GREYASSESS_GREYASSESS_HPP
