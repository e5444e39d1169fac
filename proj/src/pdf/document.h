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

#ifndef PAPERSUM_PDF_DOCUMENT_H_
#define PAPERSUM_PDF_DOCUMENT_H_

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "pdf/object.h"

namespace papersum::pdf {

// One page as seen by the content interpreter: its visible box in default
// user space plus resources and concatenated content stream.
struct PageSource {
  double llx = 0, lly = 0, urx = 0, ury = 0;
  std::shared_ptr<const Dict> resources;
  std::string content;
};

// Random-access view of a PDF file.
//
// Objects are located by scanning the file for "N G obj" headers rather than
// trusting the cross-reference table, so damaged or incrementally updated
// files still load; later definitions win. Objects packed in object streams
// are indexed as well.
class Document {
 public:
  // Throws IngestError for non-PDF input, encrypted files and files
  // without a usable page tree.
  explicit Document(std::string bytes);

  // Follows references (bounded depth). Missing objects resolve to null.
  const Object& resolve(const Object& obj) const;
  const Object& get(int num) const;

  const Dict* resolve_dict(const Object* obj) const;
  const Array* resolve_array(const Object* obj) const;
  std::optional<double> resolve_number(const Object* obj) const;
  const std::string* resolve_name(const Object* obj) const;

  // Decoded stream data. Unsupported filters raise IngestError.
  std::string decode(const Stream& stream) const;

  const std::vector<PageSource>& pages() const { return pages_; }

 private:
  void scan_objects();
  void index_object_streams();
  const Dict* find_trailer();
  void collect_pages(const Object& node, std::shared_ptr<const Dict> resources,
                     const Array* media_box, const Array* crop_box, int depth);
  Object parse_indirect_at(std::size_t offset) const;

  std::string bytes_;
  std::map<int, std::size_t> offsets_;
  // Objects that live in object streams: num -> (stream num, index).
  std::map<int, std::pair<int, int>> packed_;
  mutable std::map<int, std::unique_ptr<Object>> cache_;
  std::vector<PageSource> pages_;
  Object trailer_holder_;
};

std::string inflate_bytes(std::string_view data);

}  // namespace papersum::pdf

#endif  // PAPERSUM_PDF_DOCUMENT_H_
