#ifndef MCGFORGE_FREE_CERT_HPP
#define MCGFORGE_FREE_CERT_HPP

#include "mcgforge/homology.hpp"

#include <string>
#include <vector>

namespace mcgforge {

// Letters in a freely reduced word over {A, A^-1, B, B^-1}, in that
// lexicographic order.
enum : int { LET_A = 0, LET_AI = 1, LET_B = 2, LET_BI = 3 };

struct FreeCertResult {
    bool relation_found;
    int depth;                  // depth that was searched
    std::vector<int> word;      // empty unless relation_found
    std::string word_str() const;
};

// Exhaustively evaluates all freely reduced words in A^{+-1}, B^{+-1} of
// length <= depth. Reports the shortest nontrivial word equal to the
// identity (lexicographically least among shortest), or certifies that no
// relation exists up to the given depth. depth must be in [1, 14].
FreeCertResult free_certify(const SympMatrix& a, const SympMatrix& b, int depth);

} // namespace mcgforge

#endif
