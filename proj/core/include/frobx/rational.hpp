// Copyright 2026 The frobx Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FROBX_RATIONAL_HPP
#define FROBX_RATIONAL_HPP

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace frobx {

// Exact rational arithmetic; boost::rational keeps values reduced with a
// positive denominator, which is exactly the serialization contract.
using Rational = boost::rational<std::int64_t>;

/// "a/b" form, always with an explicit denominator ("3/1", "49/16").
std::string rational_slash(const Rational& r);

/// Human form: "3" when the value is integral, "49/16" otherwise.
std::string rational_human(const Rational& r);

/// Ceiling of a/b for b > 0.
std::int64_t ceil_div(std::int64_t a, std::int64_t b);

}  // namespace frobx

#endif  // FROBX_RATIONAL_HPP
