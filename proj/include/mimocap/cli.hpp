// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The mimocap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MIMOCAP_CLI_HPP
#define MIMOCAP_CLI_HPP

#include <iosfwd>

namespace mimocap {

enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitIo = 2,
  kExitOrdering = 3,
};

// Entry point for the mimocap tool; writes results to `out` and diagnostics
// to `err` so the whole command surface can be driven in-process.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mimocap

#endif  // MIMOCAP_CLI_HPP
