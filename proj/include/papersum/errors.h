// Copyright 2026 The papersum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PAPERSUM_ERRORS_H_
#define PAPERSUM_ERRORS_H_

#include <stdexcept>
#include <string>
#include <utility>

namespace papersum {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid geometric input: cross-page pairs, zero-area denominators,
// inverted rectangles.
class GeometryError : public Error {
 public:
  using Error::Error;
};

// A JSON document (IR, detections, annotations, box references) does not
// conform to its schema. `field()` names the offending field.
class SchemaError : public Error {
 public:
  SchemaError(std::string field, const std::string& message)
      : Error("schema error at '" + field + "': " + message),
        field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// The PDF could not be turned into a DocumentIR.
class IngestError : public Error {
 public:
  using Error::Error;
};

// Bad parameters handed to an operation (e.g. empty ground truth,
// duplicate document ids).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace papersum

#endif  // PAPERSUM_ERRORS_H_
