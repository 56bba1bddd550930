// Copyright 2026 The odiam Authors
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

#ifndef ODIAM_RATIONAL_HPP_
#define ODIAM_RATIONAL_HPP_

#include <cstdint>
#include <string>
#include <string_view>

namespace odiam {

// Exact positive rational used for the epsilon parameter.
class Rational {
 public:
  Rational() = default;
  // Throws kInvalidArgument when den == 0; the result is reduced.
  Rational(std::int64_t num, std::int64_t den);

  // Accepts "3", "0.25", "1/3" (optional leading sign).
  static Rational parse(std::string_view text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool positive() const noexcept { return num_ > 0; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// L(eps) = ceil(100 / eps), never below 2 (the extension step needs L >= 2).
std::uint32_t cap_l(const Rational& epsilon);
// ceil(100 / eps) without the clamp.
std::uint64_t raw_cap_l(const Rational& epsilon);

// 4 * C(L+1, 2) = 2 L (L + 1).
std::uint64_t additive_constant(std::uint32_t cap);

// True iff value <= (3 + eps) * s + extra, evaluated exactly.
bool within_linear_bound(std::uint64_t value, const Rational& epsilon, std::uint64_t s,
                         std::uint64_t extra);

}  // namespace odiam

#endif  // ODIAM_RATIONAL_HPP_
