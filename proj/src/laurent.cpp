#include "mira/laurent.hpp"

#include <stdexcept>

namespace mira {

Laurent::Laurent(long long c) {
    if (c != 0) c_[0] = c;
}

Laurent Laurent::v_pow(int e, Int c) {
    Laurent p;
    if (c != 0) p.c_[e] = std::move(c);
    return p;
}

Int Laurent::coeff(int e) const {
    auto it = c_.find(e);
    return it == c_.end() ? Int(0) : it->second;
}

int Laurent::min_deg() const {
    if (c_.empty()) throw std::logic_error("min_deg of zero");
    return c_.begin()->first;
}

int Laurent::max_deg() const {
    if (c_.empty()) throw std::logic_error("max_deg of zero");
    return c_.rbegin()->first;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.c_) {
        Int& x = c_[e];
        x += c;
        if (x == 0) c_.erase(e);
    }
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.c_) {
        Int& x = c_[e];
        x -= c;
        if (x == 0) c_.erase(e);
    }
    return *this;
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (const auto& [e, c] : c_) r.c_[e] = -c;
    return r;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ea, ca] : a.c_)
        for (const auto& [eb, cb] : b.c_) {
            Int& x = r.c_[ea + eb];
            x += ca * cb;
            if (x == 0) r.c_.erase(ea + eb);
        }
    return r;
}

Laurent Laurent::bar() const {
    Laurent r;
    for (const auto& [e, c] : c_) r.c_[-e] = c;
    return r;
}

Int Laurent::eval_at_q(long long q) const {
    Int total = 0;
    for (const auto& [e, c] : c_) {
        if (e % 2 != 0) throw std::logic_error("eval_at_q: odd exponent " + std::to_string(e));
        Int p = 1;
        for (int k = 0; k < std::abs(e) / 2; ++k) p *= q;
        if (e < 0) {
            // only exact division makes sense for the integer specialization
            throw std::logic_error("eval_at_q: negative exponent");
        }
        total += c * p;
    }
    return total;
}

bool Laurent::has_parity(int parity) const {
    int want = ((parity % 2) + 2) % 2;
    for (const auto& [e, c] : c_) {
        (void)c;
        if (((e % 2) + 2) % 2 != want) return false;
    }
    return true;
}

bool Laurent::strictly_negative() const {
    return c_.empty() || c_.rbegin()->first < 0;
}

std::string Laurent::to_string() const {
    if (c_.empty()) return "0";
    std::string s;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!s.empty()) s += c > 0 ? " + " : " - ";
        else if (c < 0) s += "-";
        Int a = c < 0 ? Int(-c) : c;
        std::string coeff = a.str();
        if (e == 0) {
            s += coeff;
        } else {
            if (a != 1) s += coeff + "*";
            s += e == 1 ? "v" : "v^" + std::to_string(e);
        }
    }
    return s;
}

void Laurent::set(int e, Int c) {
    if (c == 0)
        c_.erase(e);
    else
        c_[e] = std::move(c);
}

}  // namespace mira
