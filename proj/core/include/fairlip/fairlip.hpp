//
// Copyright 2026 The fairlip Authors
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
//

#ifndef FAIRLIP_FAIRLIP_HPP_
#define FAIRLIP_FAIRLIP_HPP_

#include "fairlip/affirmative.hpp"
#include "fairlip/error.hpp"
#include "fairlip/expmech.hpp"
#include "fairlip/fairness_lp.hpp"
#include "fairlip/lp.hpp"
#include "fairlip/matrix.hpp"
#include "fairlip/parity.hpp"
#include "fairlip/prob_metrics.hpp"
#include "fairlip/types.hpp"

#endif  // FAIRLIP_FAIRLIP_HPP_
