/*
 * Copyright 2026 The ergvc Authors
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

#ifndef ERGVC_ERROR_HPP
#define ERGVC_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ergvc {

/// Error categories shared by the C++ core and the C API status codes.
enum class ErrorKind {
  Domain,
  Syntax,
  Resource,
  Precondition,
  InsufficientData,
  Config,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error(ErrorKind::Domain, what) {}
};

/// Parse failure; `position` is the 0-based byte offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error(ErrorKind::Syntax,
              what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what)
      : Error(ErrorKind::Resource, what) {}
};

class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what)
      : Error(ErrorKind::Precondition, what) {}
};

class InsufficientDataError : public Error {
 public:
  InsufficientDataError(const std::string& what, std::size_t available)
      : Error(ErrorKind::InsufficientData, what), available_(available) {}

  std::size_t available() const noexcept { return available_; }

 private:
  std::size_t available_;
};

/// Configuration schema violation. `pointer` is a JSON pointer to the
/// offending field.
class ConfigError : public Error {
 public:
  ConfigError(const std::string& pointer, const std::string& what)
      : Error(ErrorKind::Config, pointer + ": " + what), pointer_(pointer) {}

  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

}  // namespace ergvc

#endif  // ERGVC_ERROR_HPP
