#pragma once

#include "gwchi/error.hpp"
#include "gwchi/gw.hpp"
#include "gwchi/integers.hpp"
#include "gwchi/jsonio.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace gwchi {

// Ring handles. A handle is a small copyable value describing one commutative
// ring; series code only ever touches coefficients through a handle. The
// interface is the minimum the toolkit needs: no division, no comparison
// beyond equality.

struct IntRing {
    using Elem = Int;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    bool is_zero(const Elem& a) const { return a == 0; }
    Elem from_int(const Int& n) const { return n; }
    bool same(const IntRing&) const { return true; }
    std::string name() const { return "Z"; }
    std::string str(const Elem& a) const { return a.str(); }

    // Signed scalar: render as -|a| so series join with the right sign.
    std::pair<bool, std::string> term_text(const Elem& a) const {
        const Int mag = abs(a);
        return {a < 0, mag.str()};
    }
    Json json(const Elem& a) const { return int_json(a); }
};

struct GwRing {
    using Elem = GwElement;

    FieldModel field;

    explicit GwRing(FieldModel f) : field(f) {}

    Elem zero() const { return GwElement::zero(field); }
    Elem one() const { return GwElement::one(field); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    bool eq(const Elem& a, const Elem& b) const { return is_equal(a, b); }
    bool is_zero(const Elem& a) const { return is_equal(a, zero()); }
    Elem from_int(const Int& n) const { return one().scale(n); }
    bool same(const GwRing& o) const { return field == o.field; }
    std::string name() const { return "GW(" + field.name() + ")"; }
    std::string str(const Elem& a) const { return a.str(); }

    // Compound coefficient: parenthesize, never carry a sign outward.
    std::pair<bool, std::string> term_text(const Elem& a) const {
        return {false, "(" + a.str() + ")"};
    }
    Json json(const Elem& a) const { return a.json(); }
};

// A power series known exactly modulo t^{order+1}. Coefficients c0..c_order
// are stored densely; the truncation order travels with the value, and binary
// operations truncate to the smaller operand order.
template <class Ring>
class TruncatedSeries {
public:
    using Elem = typename Ring::Elem;

    TruncatedSeries(Ring ring, unsigned order)
        : ring_(std::move(ring)), coeffs_(order + 1, ring_.zero()) {}

    TruncatedSeries(Ring ring, std::vector<Elem> coeffs) : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw error("series: at least the constant coefficient is required");
    }

    static TruncatedSeries constant(Ring ring, const Elem& c, unsigned order) {
        TruncatedSeries s(ring, order);
        s.coeffs_[0] = c;
        return s;
    }
    static TruncatedSeries unit(Ring ring, unsigned order) {
        return constant(ring, ring.one(), order);
    }

    const Ring& ring() const noexcept { return ring_; }
    unsigned order() const noexcept { return static_cast<unsigned>(coeffs_.size()) - 1; }
    const Elem& coeff(unsigned n) const {
        if (n >= coeffs_.size()) throw error("series: coefficient index exceeds the truncation order");
        return coeffs_[n];
    }
    void set_coeff(unsigned n, Elem c) {
        if (n >= coeffs_.size()) throw error("series: coefficient index exceeds the truncation order");
        coeffs_[n] = std::move(c);
    }

    TruncatedSeries truncated(unsigned order) const {
        if (order >= coeffs_.size()) return *this;
        TruncatedSeries out(ring_, order);
        for (unsigned n = 0; n <= order; ++n) out.coeffs_[n] = coeffs_[n];
        return out;
    }

    TruncatedSeries operator+(const TruncatedSeries& o) const {
        const unsigned n = common_order(o);
        TruncatedSeries out(ring_, n);
        for (unsigned i = 0; i <= n; ++i) out.coeffs_[i] = ring_.add(coeffs_[i], o.coeffs_[i]);
        return out;
    }
    TruncatedSeries operator-(const TruncatedSeries& o) const {
        const unsigned n = common_order(o);
        TruncatedSeries out(ring_, n);
        for (unsigned i = 0; i <= n; ++i) out.coeffs_[i] = ring_.sub(coeffs_[i], o.coeffs_[i]);
        return out;
    }
    TruncatedSeries operator-() const {
        TruncatedSeries out(ring_, order());
        for (unsigned i = 0; i <= order(); ++i) out.coeffs_[i] = ring_.neg(coeffs_[i]);
        return out;
    }

    TruncatedSeries operator*(const TruncatedSeries& o) const {
        const unsigned n = common_order(o);
        TruncatedSeries out(ring_, n);
        for (unsigned k = 0; k <= n; ++k) {
            Elem acc = ring_.zero();
            for (unsigned i = 0; i <= k; ++i) acc = ring_.add(acc, ring_.mul(coeffs_[i], o.coeffs_[k - i]));
            out.coeffs_[k] = std::move(acc);
        }
        return out;
    }

    // Multiplicative inverse mod t^{N+1}. Requires constant term 1; the
    // recurrence b_n = -sum_{i=1..n} a_i b_{n-i} is triangular, so no ring
    // division is needed.
    TruncatedSeries inverse() const {
        if (!ring_.eq(coeffs_[0], ring_.one()))
            throw error("series inverse: constant term must be 1");
        TruncatedSeries out(ring_, order());
        out.coeffs_[0] = ring_.one();
        for (unsigned n = 1; n <= order(); ++n) {
            Elem acc = ring_.zero();
            for (unsigned i = 1; i <= n; ++i) acc = ring_.add(acc, ring_.mul(coeffs_[i], out.coeffs_[n - i]));
            out.coeffs_[n] = ring_.neg(acc);
        }
        return out;
    }

    // t -> t^i. The truncation order is kept, so coefficients past order/i
    // are discarded.
    TruncatedSeries substitute_power(unsigned i) const {
        if (i == 0) throw error("substitute_power: exponent must be at least 1");
        TruncatedSeries out(ring_, order());
        for (unsigned n = 0; n * i <= order(); ++n) out.coeffs_[n * i] = coeffs_[n];
        return out;
    }

    // Integer power; negative exponents go through inverse().
    TruncatedSeries pow_int(const Int& k) const {
        if (k < 0) return inverse().pow_int(-k);
        TruncatedSeries acc = unit(ring_, order());
        TruncatedSeries base = *this;
        Int e = k;
        while (e > 0) {
            if ((e & 1) != 0) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }

    bool operator==(const TruncatedSeries& o) const {
        const unsigned n = common_order(o);
        for (unsigned i = 0; i <= n; ++i)
            if (!ring_.eq(coeffs_[i], o.coeffs_[i])) return false;
        return true;
    }

    bool is_one() const {
        if (!ring_.eq(coeffs_[0], ring_.one())) return false;
        for (unsigned i = 1; i <= order(); ++i)
            if (!ring_.is_zero(coeffs_[i])) return false;
        return true;
    }

    std::string str() const {
        std::string out;
        for (unsigned n = 0; n <= order(); ++n) {
            if (ring_.is_zero(coeffs_[n])) continue;
            const auto [negative, text] = ring_.term_text(coeffs_[n]);
            if (out.empty()) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            out += text;
            if (n == 1)
                out += "*t";
            else if (n > 1)
                out += "*t^" + std::to_string(n);
        }
        if (out.empty()) out = "0";
        out += " + O(t^" + std::to_string(order() + 1) + ")";
        return out;
    }

    Json json() const {
        Json coeffs = Json::array();
        for (unsigned n = 0; n <= order(); ++n) coeffs.push_back(ring_.json(coeffs_[n]));
        Json j;
        j["order"] = order();
        j["coeffs"] = std::move(coeffs);
        return j;
    }

private:
    unsigned common_order(const TruncatedSeries& o) const {
        if (!ring_.same(o.ring_)) throw error("series: ring mismatch (" + ring_.name() + " vs " + o.ring_.name() + ")");
        return order() < o.order() ? order() : o.order();
    }

    Ring ring_;
    std::vector<Elem> coeffs_;
};

// Finite product of the factors n = 1..N. Factor n must be 1 mod t^n (so the
// implicit tail n > N cannot touch degrees <= N) and is checked before use.
template <class Ring>
TruncatedSeries<Ring> product_of_family(Ring ring, unsigned order,
                                        const std::function<TruncatedSeries<Ring>(unsigned)>& factor) {
    auto out = TruncatedSeries<Ring>::unit(ring, order);
    for (unsigned n = 1; n <= order; ++n) {
        auto f = factor(n).truncated(order);
        if (!ring.eq(f.coeff(0), ring.one()))
            throw error("product_of_family: factor " + std::to_string(n) + " has constant term != 1");
        for (unsigned k = 1; k < n && k <= order; ++k)
            if (!ring.is_zero(f.coeff(k)))
                throw error("product_of_family: factor " + std::to_string(n) + " is not 1 mod t^" +
                            std::to_string(n));
        out = out * f;
    }
    return out;
}

using IntSeries = TruncatedSeries<IntRing>;
using GwSeries = TruncatedSeries<GwRing>;

}  // namespace gwchi
