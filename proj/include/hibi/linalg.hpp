#pragma once

#include <vector>

namespace hibi {

// Rank of an integer matrix over Q (fraction-free elimination, promoted to
// big integers on overflow) and over F_p.
long long rank_rational(std::vector<std::vector<long long>> rows);
long long rank_mod_p(const std::vector<std::vector<long long>>& rows, long long p);

}  // namespace hibi
