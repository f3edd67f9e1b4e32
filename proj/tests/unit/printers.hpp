// gtest printers for library types.
#pragma once

#include "artifact/freealg.hpp"

#include <ostream>

namespace artifact {
inline void PrintTo(const Series& s, std::ostream* os) { *os << s.str(); }
inline void PrintTo(const SparseVec& v, std::ostream* os) { *os << v.str(); }
}  // namespace artifact
