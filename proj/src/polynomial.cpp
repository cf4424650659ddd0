#include "weyllab/polynomial.hpp"

#include <sstream>

namespace weyllab {

std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return IntPolynomial{};
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<std::int64_t> rem = a.coeffs_;
    std::vector<std::int64_t> quot(a.degree() - b.degree() + 1, 0);
    const std::int64_t lead = b.coeffs_.back();
    for (int i = a.degree() - b.degree(); i >= 0; --i) {
        std::int64_t top = rem[i + b.degree()];
        if (top % lead != 0) return std::nullopt;
        quot[i] = top / lead;
        for (int j = 0; j <= b.degree(); ++j) rem[i + j] -= quot[i] * b.coeffs_[j];
    }
    for (auto r : rem)
        if (r != 0) return std::nullopt;
    return IntPolynomial(std::move(quot));
}

bool is_palindromic(const IntPolynomial& p) {
    const auto& c = p.coeffs();
    for (std::size_t i = 0, j = c.size(); i < j--; ++i)
        if (c[i] != c[j]) return false;
    return true;
}

std::string IntPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || coeffs_[i] != 1) os << coeffs_[i];
        if (i >= 1) os << 'q';
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

}  // namespace weyllab
