// Copyright 2026 The metdim Authors
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

#ifndef METDIM_METDIM_HPP_
#define METDIM_METDIM_HPP_

#include "metdim/composer.hpp"
#include "metdim/distances.hpp"
#include "metdim/domination.hpp"
#include "metdim/error.hpp"
#include "metdim/graph.hpp"
#include "metdim/resolver.hpp"
#include "metdim/theorems.hpp"
#include "metdim/tree.hpp"

#endif  // METDIM_METDIM_HPP_
