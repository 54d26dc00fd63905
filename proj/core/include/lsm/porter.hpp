#pragma once

#include <string>

namespace lsm {

/// Porter suffix-stripping stemmer (the classic 1980 algorithm, steps 1a-5b).
/// Expects a lowercase ASCII word; words shorter than three letters and words
/// containing non-letters are returned unchanged.
std::string porter_stem(const std::string& word);

}  // namespace lsm
