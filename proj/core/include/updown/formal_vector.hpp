#pragma once

#include <map>

#include "updown/object_key.hpp"
#include "updown/types.hpp"

namespace updown {

/// Exact-rational formal linear combination of objects (an element of the
/// free vector space on the object set). Zero coefficients are never stored;
/// iteration order is the canonical object order.
class FormalVector {
public:
    FormalVector() = default;
    static FormalVector basis(const ObjectKey& p) {
        FormalVector v;
        v.terms_.emplace(p, 1);
        return v;
    }

    void add_term(const ObjectKey& p, const Rational& coeff);
    [[nodiscard]] Rational coeff(const ObjectKey& p) const;

    [[nodiscard]] bool empty() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] const std::map<ObjectKey, Rational>& terms() const { return terms_; }

    FormalVector& operator+=(const FormalVector& w);
    FormalVector& operator-=(const FormalVector& w);
    FormalVector& operator*=(const Rational& s);

    friend FormalVector operator+(FormalVector v, const FormalVector& w) { return v += w; }
    friend FormalVector operator-(FormalVector v, const FormalVector& w) { return v -= w; }
    friend FormalVector operator*(const Rational& s, FormalVector v) { return v *= s; }
    friend bool operator==(const FormalVector&, const FormalVector&) = default;

    [[nodiscard]] std::string to_string() const;

private:
    std::map<ObjectKey, Rational> terms_;
};

}  // namespace updown
