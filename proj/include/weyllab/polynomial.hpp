#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace weyllab {

/// Polynomial in one variable with integer coefficients, ascending degree,
/// no trailing zeros. Every polynomial the library produces has nonnegative
/// coefficients; differences are not needed.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<std::int64_t> coeffs) : coeffs_(coeffs) { trim(); }
    explicit IntPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    /// 1 + q + ... + q^d
    static IntPolynomial chain(int d) { return IntPolynomial(std::vector<std::int64_t>(d + 1, 1)); }

    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    std::int64_t operator[](int i) const { return i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : 0; }

    std::int64_t at_one() const {
        std::int64_t s = 0;
        for (auto c : coeffs_) s += c;
        return s;
    }

    /// Adds c to the coefficient of q^i.
    void add(int i, std::int64_t c) {
        if (static_cast<int>(coeffs_.size()) <= i) coeffs_.resize(i + 1, 0);
        coeffs_[i] += c;
        trim();
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<std::int64_t> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return IntPolynomial(std::move(out));
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    /// Exact quotient a / b, or nullopt when b does not divide a over the integers.
    friend std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b);

    std::string to_string() const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<std::int64_t> coeffs_;
};

std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b);

/// a_i == a_{d-i} for all i. The zero polynomial counts as palindromic.
bool is_palindromic(const IntPolynomial& p);

std::ostream& operator<<(std::ostream& os, const IntPolynomial& p);

}  // namespace weyllab
