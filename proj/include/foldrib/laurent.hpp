#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace foldrib {

/// Laurent polynomial in one variable A with exact integer coefficients.
/// Zero coefficients are never stored, so equality is structural.
class Laurent {
public:
    Laurent() = default;
    explicit Laurent(std::int64_t constant);
    static Laurent monomial(std::int64_t coefficient, int power);

    Laurent& operator+=(const Laurent& other);
    Laurent& operator-=(const Laurent& other);
    Laurent operator+(const Laurent& other) const;
    Laurent operator-(const Laurent& other) const;
    Laurent operator*(const Laurent& other) const;
    Laurent operator-() const;
    bool operator==(const Laurent& other) const = default;

    /// Lexicographic order on (power, coefficient) lists; only used to pick a
    /// canonical representative among several polynomials.
    bool operator<(const Laurent& other) const;

    /// Substitute A -> A^-1.
    Laurent inverted() const;
    Laurent pow(int n) const;

    std::int64_t coefficient(int power) const;
    bool is_zero() const { return terms_.empty(); }
    int min_power() const;
    int max_power() const;
    std::size_t term_count() const { return terms_.size(); }
    const std::map<int, std::int64_t>& terms() const { return terms_; }

    /// Ascending powers, e.g. "-A^-5 + 2*A^-1 + A^3".
    std::string to_string() const;
    /// Parses the to_string format.
    static Laurent parse(const std::string& text);

private:
    void add_term(int power, std::int64_t coefficient);
    std::map<int, std::int64_t> terms_;
};

}  // namespace foldrib
