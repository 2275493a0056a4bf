// Copyright 2026 The ksconf Authors
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


#ifndef KSCONF_RATIONAL_H
#define KSCONF_RATIONAL_H

#include <boost/rational.hpp>
#include <cstdint>

namespace ksconf {

/// Exact rational arithmetic.
///
/// Compare only against other Rationals: under C++20 rewritten comparison
/// rules, boost 1.74's mixed `rational == int` overload recurses forever.
using Rational = boost::rational<int64_t>;

}  // namespace ksconf

#endif
