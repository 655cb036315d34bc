// Copyright 2026 The imgame Authors
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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

namespace imgame {

/// Exact rational scalar. Always kept in lowest terms with a positive
/// denominator by GMP. Expression templates are disabled so the type
/// composes cleanly with Eigen expressions.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

template <typename Scalar> using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar> using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using VectorXq = VectorX<Rational>;
using MatrixXq = MatrixX<Rational>;

/// Thrown when an instance exceeds a hard size limit of an exhaustive routine.
class GuardError : public std::runtime_error
{
public:
  explicit GuardError(const std::string &what) : std::runtime_error(what) {}
};

/// Parses "num" or "num/den" (optional leading '-'). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical "num/den" form; the denominator is always written, e.g. "3/1".
std::string to_fraction_string(const Rational &q);

/// Short form: "3" for integers, "5/2" otherwise. Used for human-readable text output.
std::string to_display_string(const Rational &q);

inline bool is_integer(const Rational &q) { return boost::multiprecision::denominator(q) == 1; }

template <typename Derived> bool all_integer(const Eigen::MatrixBase<Derived> &v)
{
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!is_integer(v(i))) return false;
  }
  return true;
}

/// Integer value of an integral rational; throws std::invalid_argument otherwise or on overflow.
std::int64_t to_int64(const Rational &q);

} // namespace imgame
