#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "ramsey/errors.hpp"

namespace ramsey {

// Exact rational used for every epsilon threshold. All size comparisons go
// through this type; no floating point is involved in any bound.
class Rational {
public:
    Rational() = default;

    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ == 0) throw precondition_error("rational: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    explicit Rational(std::int64_t value) : num_(value), den_(1) {}

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool positive() const { return num_ > 0; }

    // value * n as an exact comparison helper: x < this*n  <=>  x*den < num*n
    bool less_than_times(std::int64_t x, std::int64_t n) const {
        return static_cast<__int128>(x) * den_ < static_cast<__int128>(num_) * n;
    }

    // Smallest integer s with s >= this * n ("a set of at least eps*n vertices").
    std::int64_t ceil_times(std::int64_t n) const {
        const __int128 p = static_cast<__int128>(num_) * n;
        __int128 q = p / den_;
        if (p > 0 && p % den_ != 0) ++q;
        return static_cast<std::int64_t>(q);
    }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const {
        return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
    }
    bool operator<=(const Rational& o) const { return *this < o || *this == o; }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Accepts "p" or "p/q". A malformed string is a parse error; a
    // well-formed value with a non-positive denominator is a precondition
    // error from the constructor.
    static Rational parse(const std::string& text) {
        const auto slash = text.find('/');
        std::int64_t p = 0;
        std::int64_t q = 1;
        try {
            std::size_t pos = 0;
            const std::string head = slash == std::string::npos ? text : text.substr(0, slash);
            p = std::stoll(head, &pos);
            if (pos != head.size()) throw std::invalid_argument(head);
            if (slash != std::string::npos) {
                const std::string tail = text.substr(slash + 1);
                q = std::stoll(tail, &pos);
                if (pos != tail.size()) throw std::invalid_argument(tail);
            }
        } catch (const std::invalid_argument&) {
            throw parse_error("rational: expected p or p/q, got '" + text + "'");
        } catch (const std::out_of_range&) {
            throw parse_error("rational: value out of range in '" + text + "'");
        }
        return Rational(p, q);
    }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

// Largest independence number compatible with "alpha < eps * n". Sets of size
// >= eps.ceil_times(n) are then guaranteed to contain a hyperedge.
inline std::int64_t max_allowed_independence(const Rational& eps, std::int64_t n) {
    return eps.ceil_times(n) - 1;
}

}  // namespace ramsey
