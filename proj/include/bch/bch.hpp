/* Copyright 2026 The bchcoeff Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// Umbrella header.

#ifndef BCH_BCH_HPP
#define BCH_BCH_HPP

#define BCH_VERSION "0.1.0"

#include "bch/coeff.hpp"
#include "bch/error.hpp"
#include "bch/mateval.hpp"
#include "bch/rational.hpp"
#include "bch/series.hpp"
#include "bch/tables.hpp"
#include "bch/word.hpp"

#endif  // BCH_BCH_HPP
