#pragma once

#include <string_view>
#include <utility>
#include <vector>

namespace kashaev::detail {

/// (file name, contents) of every file in data/corpus, sorted by name.
const std::vector<std::pair<std::string_view, std::string_view>>& corpus_files();

}  // namespace kashaev::detail
