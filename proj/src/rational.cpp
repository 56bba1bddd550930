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

#include "odiam/rational.hpp"

#include <charconv>
#include <numeric>

#include "odiam/error.hpp"

namespace odiam {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    fail(ErrorCode::kParseError, "cannot parse number '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) fail(ErrorCode::kInvalidArgument, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g == 0 ? 0 : num / g;
  den_ = g == 0 ? 1 : den / g;
}

Rational Rational::parse(std::string_view text) {
  const std::string_view whole = text;
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::int64_t num = 0;
  std::int64_t den = 1;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = parse_int(text.substr(0, slash), whole);
    den = parse_int(text.substr(slash + 1), whole);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view int_part = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    if (frac.size() > 15 || (int_part.empty() && frac.empty())) {
      fail(ErrorCode::kParseError, "cannot parse number '" + std::string(whole) + "'");
    }
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    num = (int_part.empty() ? 0 : parse_int(int_part, whole)) * den +
          (frac.empty() ? 0 : parse_int(frac, whole));
  } else {
    num = parse_int(text, whole);
  }
  if (den == 0) fail(ErrorCode::kParseError, "zero denominator in '" + std::string(whole) + "'");
  return Rational(negative ? -num : num, den);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::uint64_t raw_cap_l(const Rational& epsilon) {
  if (!epsilon.positive()) fail(ErrorCode::kInvalidArgument, "epsilon must be positive");
  const auto num = static_cast<unsigned __int128>(epsilon.num());
  const auto scaled = static_cast<unsigned __int128>(100) * static_cast<std::uint64_t>(epsilon.den());
  return static_cast<std::uint64_t>((scaled + num - 1) / num);
}

std::uint32_t cap_l(const Rational& epsilon) {
  const std::uint64_t raw = raw_cap_l(epsilon);
  if (raw > 1'000'000) fail(ErrorCode::kInvalidArgument, "epsilon too small: L(eps) exceeds 10^6");
  return static_cast<std::uint32_t>(raw < 2 ? 2 : raw);
}

std::uint64_t additive_constant(std::uint32_t cap) {
  return 2ull * cap * (static_cast<std::uint64_t>(cap) + 1);
}

bool within_linear_bound(std::uint64_t value, const Rational& epsilon, std::uint64_t s,
                         std::uint64_t extra) {
  using Wide = __int128;
  const Wide den = epsilon.den();
  const Wide lhs = static_cast<Wide>(value) * den;
  const Wide rhs = (3 * den + epsilon.num()) * static_cast<Wide>(s) + static_cast<Wide>(extra) * den;
  return lhs <= rhs;
}

}  // namespace odiam
