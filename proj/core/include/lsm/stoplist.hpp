#pragma once

#include <string>
#include <vector>

namespace lsm {

/// The shipped English function-word list (raw, un-normalized entries).
const std::vector<std::string>& default_english_stoplist();

}  // namespace lsm
