#include "mcgforge/free_cert.hpp"

#include <stdexcept>

namespace mcgforge {

namespace {

const char* letter_names[4] = {"A", "A^-1", "B", "B^-1"};

inline int inverse_letter(int l) { return l ^ 1; }

struct Search {
    const ExactMatrix* gens[4];
    std::vector<int> stack;
    std::vector<int> best;
    int max_depth;

    // DFS in lexicographic letter order; the first identity at a given length
    // encountered in this order is the lexicographically least one.
    void run(const ExactMatrix& acc, int last_letter, int depth_left) {
        if (depth_left == 0) return;
        if (!best.empty() && stack.size() + 1 > best.size()) return;
        for (int l = 0; l < 4; ++l) {
            if (last_letter >= 0 && l == inverse_letter(last_letter)) continue;
            stack.push_back(l);
            ExactMatrix next = acc * *gens[l];
            if (next.is_identity()) {
                if (best.empty() || stack.size() < best.size()) best = stack;
                // no shorter word extends this one; still explore siblings
            } else {
                run(next, l, depth_left - 1);
            }
            stack.pop_back();
        }
    }
};

} // namespace

std::string FreeCertResult::word_str() const {
    std::string s;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) s += " ";
        s += letter_names[word[i]];
    }
    return s;
}

FreeCertResult free_certify(const SympMatrix& a, const SympMatrix& b, int depth) {
    if (depth < 1) throw std::invalid_argument("free_certify: depth must be >= 1");
    if (depth > 14) throw std::invalid_argument("free_certify: depth > 14 not supported");
    if (a.g != b.g) throw std::invalid_argument("free_certify: genus mismatch");

    ExactMatrix ga = a.mat, gai = inverse(a.mat), gb = b.mat, gbi = inverse(b.mat);
    Search s;
    s.gens[LET_A] = &ga;
    s.gens[LET_AI] = &gai;
    s.gens[LET_B] = &gb;
    s.gens[LET_BI] = &gbi;
    s.max_depth = depth;
    s.run(ExactMatrix::identity(a.mat.rows()), -1, depth);

    FreeCertResult r;
    r.depth = depth;
    r.relation_found = !s.best.empty();
    r.word = s.best;
    return r;
}

} // namespace mcgforge
