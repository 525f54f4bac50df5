#include "updown/formal_vector.hpp"

namespace updown {

void FormalVector::add_term(const ObjectKey& p, const Rational& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        terms_.emplace(p, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

Rational FormalVector::coeff(const ObjectKey& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rational(0) : it->second;
}

FormalVector& FormalVector::operator+=(const FormalVector& w) {
    for (const auto& [k, c] : w.terms_) add_term(k, c);
    return *this;
}

FormalVector& FormalVector::operator-=(const FormalVector& w) {
    for (const auto& [k, c] : w.terms_) add_term(k, -c);
    return *this;
}

FormalVector& FormalVector::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
}

std::string FormalVector::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += updown::to_string(c) + "*" + to_display(k);
    }
    return out;
}

}  // namespace updown
