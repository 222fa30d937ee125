// Copyright 2026 The TalentLens Authors
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

#include <stdexcept>
#include <string>

namespace talentlens {

// Base for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Stream-level ingest failure (unreadable input, bad UTF-8, bad header).
// Per-line schema violations never throw; they become reject entries.
class IngestError : public Error {
 public:
  using Error::Error;
};

// Precondition violation on a pure operation (empty quartile input,
// fraction out of range, NEGOTIABLE annualization, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class PipelineError : public Error {
 public:
  using Error::Error;
};

// A region identifier that is well-formed but absent from the snapshot.
class UnknownRegionError : public Error {
 public:
  using Error::Error;
};

// Snapshot cache read/write failure.
class CacheError : public Error {
 public:
  using Error::Error;
};

}  // namespace talentlens
