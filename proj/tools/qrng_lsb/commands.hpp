// Copyright 2026 The qrng-lsb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QRNG_LSB_COMMANDS_HPP_
#define QRNG_LSB_COMMANDS_HPP_

#include <iosfwd>

namespace qrng::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitModelError = 1;
inline constexpr int kExitUsage = 2;

// Environment variable naming the directory that relative --out, --plot,
// --summary and --dump paths are resolved against.
inline constexpr const char* kOutputDirEnv = "QRNG_LSB_OUTPUT_DIR";

// Parses argv and runs one subcommand. Output without --out goes to `out`,
// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace qrng::cli

#endif  // QRNG_LSB_COMMANDS_HPP_
