/*
 * Copyright 2026 The embsp Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef EMBSP_ERROR_HPP
#define EMBSP_ERROR_HPP

#include <stdexcept>
#include <string>

#include "embsp/embsp.h"

namespace embsp {

class Error : public std::runtime_error {
 public:
  Error(embsp_status_t code, std::string msg)
      : std::runtime_error(std::move(msg)), code_(code) {}
  embsp_status_t code() const { return code_; }

 private:
  embsp_status_t code_;
};

[[noreturn]] inline void fail(embsp_status_t code, const std::string& msg) {
  throw Error(code, msg);
}

// Thrown inside VP threads to unwind when another VP aborted the run.
struct AbortRun {};

}  // namespace embsp

#endif
