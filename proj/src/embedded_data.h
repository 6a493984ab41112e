// Copyright 2026 The Schemarith Authors
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

#ifndef SCHEMARITH_EMBEDDED_DATA_H_
#define SCHEMARITH_EMBEDDED_DATA_H_

#include <string_view>
#include <vector>

namespace schemarith::internal {

struct EmbeddedFile {
  std::string_view id;
  std::string_view text;
};

// Contents of corpus/expected.tsv at build time.
std::string_view EmbeddedExpected();
// corpus/*.txt sorted by file name; id is the name without extension.
const std::vector<EmbeddedFile>& EmbeddedProblems();

}  // namespace schemarith::internal

#endif  // SCHEMARITH_EMBEDDED_DATA_H_
