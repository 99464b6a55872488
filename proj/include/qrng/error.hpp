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

#ifndef QRNG_ERROR_HPP_
#define QRNG_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace qrng {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad sample data (non-finite values and the like).
class InputError : public Error {
 public:
  using Error::Error;
};

// An argument lies outside its documented domain.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// The physical model is inconsistent, e.g. classical noise exceeding the
// measured signal.
class ModelError : public Error {
 public:
  using Error::Error;
};

// A configuration produces no usable outcome distribution.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

}  // namespace qrng

#endif  // QRNG_ERROR_HPP_
