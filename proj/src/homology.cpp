#include "mcgforge/homology.hpp"

namespace mcgforge {

HomologyClass HomologyClass::basis_a(Genus genus, int i) {
    if (i < 1 || i > genus.g) throw std::invalid_argument("basis_a: index out of range");
    auto h = zero(genus);
    h.coords[2 * (i - 1)] = 1;
    return h;
}

HomologyClass HomologyClass::basis_b(Genus genus, int i) {
    if (i < 1 || i > genus.g) throw std::invalid_argument("basis_b: index out of range");
    auto h = zero(genus);
    h.coords[2 * (i - 1) + 1] = 1;
    return h;
}

bool HomologyClass::is_zero() const {
    for (const auto& c : coords)
        if (c != 0) return false;
    return true;
}

bool HomologyClass::is_primitive() const {
    Int d = 0;
    for (const auto& c : coords) d = gcd(d, c);
    return d == 1;
}

ExactMatrix standard_j(Genus genus) {
    ExactMatrix j(2 * genus.g, 2 * genus.g);
    for (int i = 0; i < genus.g; ++i) {
        j.at(2 * i, 2 * i + 1) = Rational(1);
        j.at(2 * i + 1, 2 * i) = Rational(-1);
    }
    return j;
}

SympMatrix::SympMatrix(Genus genus, ExactMatrix m) : g(genus.g), mat(std::move(m)) {
    const std::size_t n = 2 * static_cast<std::size_t>(g);
    if (mat.rows() != n || mat.cols() != n)
        throw std::invalid_argument("SympMatrix: wrong shape");
    ExactMatrix j = standard_j(genus);
    if (mat.transpose() * j * mat != j)
        throw std::invalid_argument("SympMatrix: M^T J M != J");
}

SympMatrix SympMatrix::identity(Genus genus) {
    return SympMatrix(genus, ExactMatrix::identity(2 * genus.g));
}

SympMatrix SympMatrix::operator*(const SympMatrix& o) const {
    if (g != o.g) throw std::invalid_argument("SympMatrix: genus mismatch");
    return SympMatrix(Genus(g), mat * o.mat);
}

SympMatrix SympMatrix::inverse_m() const {
    return SympMatrix(Genus(g), inverse(mat));
}

Int pairing(const HomologyClass& x, const HomologyClass& y) {
    if (x.g != y.g) throw std::invalid_argument("pairing: genus mismatch");
    Int s = 0;
    for (int i = 0; i < x.g; ++i) {
        s += x.coords[2 * i] * y.coords[2 * i + 1];
        s -= x.coords[2 * i + 1] * y.coords[2 * i];
    }
    return s;
}

SympMatrix twist_matrix(const HomologyClass& a) {
    Genus genus(a.g);
    const std::size_t n = 2 * static_cast<std::size_t>(a.g);
    // M = I + a (a^T J): column k gets  <a, e_k> * a  added to e_k.
    ExactMatrix m = ExactMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        auto ek = HomologyClass::zero(genus);
        ek.coords[k] = 1;
        Int c = pairing(a, ek);
        if (c == 0) continue;
        for (std::size_t r = 0; r < n; ++r)
            m.at(r, k) += Rational(c * a.coords[r]);
    }
    return SympMatrix(genus, std::move(m));
}

SympMatrix eval_word(Genus genus, const TwistWord& w) {
    SympMatrix acc = SympMatrix::identity(genus);
    for (const auto& letter : w.letters) {
        if (letter.cls.g != genus.g) throw std::invalid_argument("eval_word: genus mismatch");
        if (letter.exponent == 0) throw std::invalid_argument("eval_word: zero exponent");
        SympMatrix t = twist_matrix(letter.cls);
        SympMatrix step = letter.exponent > 0 ? t : t.inverse_m();
        long n = letter.exponent > 0 ? letter.exponent : -letter.exponent;
        for (long i = 0; i < n; ++i) acc = acc * step;
    }
    return acc;
}

bool check_braid(const HomologyClass& a, const HomologyClass& b) {
    if (a.g != b.g) throw std::invalid_argument("check_braid: genus mismatch");
    ExactMatrix ta = twist_matrix(a).mat, tb = twist_matrix(b).mat;
    return ta * tb * ta == tb * ta * tb;
}

bool check_commute(const HomologyClass& a, const HomologyClass& b) {
    if (a.g != b.g) throw std::invalid_argument("check_commute: genus mismatch");
    ExactMatrix ta = twist_matrix(a).mat, tb = twist_matrix(b).mat;
    return ta * tb == tb * ta;
}

bool torelli_check(Genus genus, const TwistWord& w) {
    return eval_word(genus, w).mat.is_identity();
}

} // namespace mcgforge
