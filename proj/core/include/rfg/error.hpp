// Copyright 2026 The rfg Authors
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

#ifndef RFG_ERROR_HPP_
#define RFG_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace rfg {

enum class Errc {
  invalid_game,
  unknown_player,
  incomplete_others,
  budget_exceeded,
  non_monotone_profile,
  target_below_maxmin,
  not_two_player,
  unsupported_dimensions,
  not_safe_rfe,
  not_improvement,
  parameter_out_of_range,
  wrong_kind,
  empty_pools,
  duplicate_commit,
  duplicate_connection,
  wrong_phase,
  commitment_mismatch,
  insufficient_deposit,
  parse_error,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace rfg

#endif  // RFG_ERROR_HPP_
