// Copyright 2026 The superweave Authors. All Rights Reserved.
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

#ifndef SUPERWEAVE_SUPERWEAVE_HPP_
#define SUPERWEAVE_SUPERWEAVE_HPP_

#include "superweave/linalg.hpp"
#include "superweave/frame.hpp"
#include "superweave/partition.hpp"
#include "superweave/weaving.hpp"
#include "superweave/constructions.hpp"
#include "superweave/io.hpp"

#endif  // SUPERWEAVE_SUPERWEAVE_HPP_
