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

#ifndef PAPERSUM_INGEST_H_
#define PAPERSUM_INGEST_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "papersum/ir.h"

namespace papersum {

// Builds a DocumentIR from a PDF file. The document id is the file stem.
// Throws IngestError for unreadable, malformed or encrypted files. A PDF
// without extractable text yields empty pages plus the "no extractable
// text" warning.
DocumentIR ingest_pdf(const std::filesystem::path& path);

// Same as ingest_pdf for PDF bytes already in memory.
DocumentIR ingest_pdf_bytes(std::string bytes, std::string doc_id);

// True when `bytes` starts like a PDF file.
bool looks_like_pdf(std::string_view bytes);

std::string read_file(const std::filesystem::path& path);

}  // namespace papersum

#endif  // PAPERSUM_INGEST_H_
