#include "foldrib/laurent.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace foldrib {

Laurent::Laurent(std::int64_t constant) { add_term(0, constant); }

Laurent Laurent::monomial(std::int64_t coefficient, int power) {
    Laurent p;
    p.add_term(power, coefficient);
    return p;
}

void Laurent::add_term(int power, std::int64_t coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(power, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

Laurent& Laurent::operator+=(const Laurent& other) {
    for (auto [p, c] : other.terms_) add_term(p, c);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& other) {
    for (auto [p, c] : other.terms_) add_term(p, -c);
    return *this;
}

Laurent Laurent::operator+(const Laurent& other) const {
    Laurent r = *this;
    r += other;
    return r;
}

Laurent Laurent::operator-(const Laurent& other) const {
    Laurent r = *this;
    r -= other;
    return r;
}

Laurent Laurent::operator*(const Laurent& other) const {
    Laurent r;
    for (auto [p, c] : terms_) {
        for (auto [q, d] : other.terms_) r.add_term(p + q, c * d);
    }
    return r;
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (auto [p, c] : terms_) r.add_term(p, -c);
    return r;
}

bool Laurent::operator<(const Laurent& other) const {
    return terms_ < other.terms_;
}

Laurent Laurent::inverted() const {
    Laurent r;
    for (auto [p, c] : terms_) r.add_term(-p, c);
    return r;
}

Laurent Laurent::pow(int n) const {
    if (n < 0) throw std::domain_error("negative power of a Laurent polynomial");
    Laurent result(1);
    for (int i = 0; i < n; ++i) result = result * *this;
    return result;
}

std::int64_t Laurent::coefficient(int power) const {
    auto it = terms_.find(power);
    return it == terms_.end() ? 0 : it->second;
}

int Laurent::min_power() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int Laurent::max_power() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

std::string Laurent::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto [p, c] : terms_) {
        std::int64_t mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out << '-';
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (p == 0) {
            out << mag;
            continue;
        }
        if (mag != 1) out << mag << '*';
        out << 'A';
        if (p != 1) out << '^' << p;
    }
    return out.str();
}

Laurent Laurent::parse(const std::string& text) {
    Laurent result;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto fail = [&] { throw std::invalid_argument("malformed polynomial: " + text); };
    skip();
    if (text.substr(i) == "0") return result;
    int sign = 1;
    while (i < text.size()) {
        skip();
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        }
        std::int64_t coef = 1;
        bool has_coef = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            char* end = nullptr;
            coef = std::strtoll(text.c_str() + i, &end, 10);
            i = static_cast<std::size_t>(end - text.c_str());
            has_coef = true;
        }
        int power = 0;
        if (i < text.size() && text[i] == '*') ++i;
        if (i < text.size() && text[i] == 'A') {
            ++i;
            power = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                char* end = nullptr;
                power = static_cast<int>(std::strtol(text.c_str() + i, &end, 10));
                if (end == text.c_str() + i) fail();
                i = static_cast<std::size_t>(end - text.c_str());
            }
        } else if (!has_coef) {
            fail();
        }
        result.add_term(power, sign * coef);
        sign = 1;
        skip();
    }
    return result;
}

}  // namespace foldrib
