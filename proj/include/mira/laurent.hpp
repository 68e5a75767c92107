#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>

namespace mira {

using Int = boost::multiprecision::cpp_int;

// Integer Laurent polynomial in v; exact arithmetic, no stored zeros.
class Laurent {
public:
    Laurent() = default;
    Laurent(long long c);  // constant; implicit on purpose
    static Laurent v_pow(int e, Int c = 1);

    bool is_zero() const { return c_.empty(); }
    Int coeff(int e) const;
    int min_deg() const;  // throws on zero
    int max_deg() const;
    const std::map<int, Int>& terms() const { return c_; }

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent operator-() const;
    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
    friend Laurent operator*(const Laurent& a, const Laurent& b);
    bool operator==(const Laurent&) const = default;

    // v -> v^{-1}
    Laurent bar() const;
    // substitute v^2 = q; requires every exponent even (throws otherwise)
    Int eval_at_q(long long q) const;
    // true iff all exponents e have e ≡ parity (mod 2)
    bool has_parity(int parity) const;
    // all exponents < 0
    bool strictly_negative() const;

    std::string to_string() const;

    void set(int e, Int c);

private:
    std::map<int, Int> c_;
};

inline Laurent q_poly() { return Laurent::v_pow(2); }  // q = v^2

}  // namespace mira
