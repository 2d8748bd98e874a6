#include "gwchi/gw.hpp"

#include "gwchi/error.hpp"
#include "gwchi/numtheory.hpp"

#include <set>
#include <vector>

namespace gwchi {

GwElement::GwElement(FieldModel field, std::map<SquareClass, Int> terms)
    : field_(field), terms_(std::move(terms)) {
    normalize();
}

void GwElement::normalize() {
    if (field_.kind() == FieldKind::Finite) {
        // 2<u> = 2<1>: binary forms over F_q are classified by rank and
        // discriminant, so the <u> multiplicity lives in {0, 1}.
        const auto it = terms_.find(SquareClass::finite_nonsquare());
        if (it != terms_.end()) {
            const Int u_mult = it->second;
            const Int residue = ((u_mult % 2) + 2) % 2;
            it->second = residue;
            terms_[SquareClass::unit()] += u_mult - residue;
        }
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

void GwElement::require_same_model(const GwElement& o) const {
    if (!(field_ == o.field_)) throw error("mixed field models: " + field_.name() + " vs " + o.field_.name());
}

GwElement GwElement::zero(const FieldModel& field) { return {field, {}}; }

GwElement GwElement::one(const FieldModel& field) { return form(field, SquareClass::unit()); }

GwElement GwElement::form(const FieldModel& field, const SquareClass& a) {
    if (!field.valid_class(a)) throw error("invalid square class <" + a.str() + "> for model " + field.name());
    return {field, {{a, Int(1)}}};
}

GwElement GwElement::form(const FieldModel& field, std::int64_t a) { return form(field, field.square_class(a)); }

GwElement GwElement::n_epsilon(const FieldModel& field, std::int64_t n) {
    if (n < 0) throw error("n_epsilon: n must be non-negative");
    std::map<SquareClass, Int> t;
    if (n > 0) {
        t[field.square_class(1)] = (n + 1) / 2;
        t[field.square_class(-1)] += n / 2;
    }
    return {field, std::move(t)};
}

GwElement GwElement::hyperbolic(const FieldModel& field) {
    return form(field, 1) + form(field, -1);
}

GwElement GwElement::trace_form_quadratic(const FieldModel& field, const SquareClass& a) {
    if (!field.valid_class(a)) throw error("invalid square class <" + a.str() + "> for model " + field.name());
    if (field.is_trivial(a))
        throw error("trace_form_quadratic: <" + a.str() + "> is a square in " + field.name() +
                    "; the algebra splits, use 2<1>");
    const SquareClass two = field.square_class(2);
    return form(field, two) + form(field, field.mul(two, a));
}

GwElement GwElement::from_invariants(const FieldModel& field, const Int& rank,
                                     const std::optional<Int>& signature) {
    switch (field.kind()) {
        case FieldKind::QuadraticallyClosed: {
            std::map<SquareClass, Int> t{{SquareClass::unit(), rank}};
            return {field, std::move(t)};
        }
        case FieldKind::RealClosed: {
            if (!signature) throw error("from_invariants: RealClosed needs a signature");
            if (((rank - *signature) % 2) != 0)
                throw error("from_invariants: rank and signature must agree mod 2");
            std::map<SquareClass, Int> t;
            t[SquareClass::of_rep(1)] = (rank + *signature) / 2;
            t[SquareClass::of_rep(-1)] = (rank - *signature) / 2;
            return {field, std::move(t)};
        }
        default:
            throw error("from_invariants: model " + field.name() +
                        " is not determined by rank and signature");
    }
}

GwElement GwElement::operator+(const GwElement& o) const {
    require_same_model(o);
    std::map<SquareClass, Int> t = terms_;
    for (const auto& [c, m] : o.terms_) t[c] += m;
    return {field_, std::move(t)};
}

GwElement GwElement::operator-(const GwElement& o) const { return *this + (-o); }

GwElement GwElement::operator-() const {
    std::map<SquareClass, Int> t;
    for (const auto& [c, m] : terms_) t[c] = -m;
    return {field_, std::move(t)};
}

GwElement GwElement::operator*(const GwElement& o) const {
    require_same_model(o);
    std::map<SquareClass, Int> t;
    for (const auto& [c1, m1] : terms_)
        for (const auto& [c2, m2] : o.terms_) t[field_.mul(c1, c2)] += m1 * m2;
    return {field_, std::move(t)};
}

GwElement GwElement::scale(const Int& k) const {
    std::map<SquareClass, Int> t;
    for (const auto& [c, m] : terms_) t[c] = m * k;
    return {field_, std::move(t)};
}

GwElement GwElement::pow(unsigned k) const {
    GwElement acc = one(field_);
    GwElement base = *this;
    while (k) {
        if (k & 1u) acc = acc * base;
        base = base * base;
        k >>= 1u;
    }
    return acc;
}

Int GwElement::rank() const {
    Int r = 0;
    for (const auto& [c, m] : terms_) r += m;
    return r;
}

Int GwElement::signature() const {
    if (field_.orderings() == 0) throw error("signature: model " + field_.name() + " has no ordering");
    Int s = 0;
    for (const auto& [c, m] : terms_) s += field_.sign(c) < 0 ? -m : m;
    return s;
}

std::optional<Int> GwElement::signature_opt() const {
    if (field_.orderings() == 0) return std::nullopt;
    return signature();
}

SquareClass GwElement::discriminant() const {
    // Classes square to 1, so only multiplicity parities matter.
    SquareClass d = SquareClass::unit();
    for (const auto& [c, m] : terms_) {
        if (parity(m) == 1) d = field_.mul(d, c);
    }
    return d;
}

bool GwElement::is_torsion() const {
    if (rank() != 0) return false;
    return field_.orderings() == 0 || signature() == 0;
}

namespace {

// Non-negative diagonal forms as (squarefree rep, multiplicity >= 0) lists;
// used by the Rationals decision procedure after moving negative
// multiplicities across the equality.
using Diagonal = std::vector<std::pair<std::int64_t, Int>>;

Int diag_rank(const Diagonal& d) {
    Int r = 0;
    for (const auto& [rep, m] : d) r += m;
    return r;
}

Int diag_signature(const Diagonal& d) {
    Int s = 0;
    for (const auto& [rep, m] : d) s += rep < 0 ? -m : m;
    return s;
}

std::int64_t diag_discriminant(const Diagonal& d) {
    std::int64_t acc = 1;
    for (const auto& [rep, m] : d) {
        if (parity(m) == 1) {
            // Squarefree product by gcd cancellation, as in FieldModel::mul.
            std::int64_t g = std::llabs(acc), h = std::llabs(rep);
            while (h) {
                const std::int64_t t = g % h;
                g = h;
                h = t;
            }
            acc = (acc / g) * (rep / g);
        }
    }
    return acc;
}

// Hasse invariant prod_{i<j} (a_i, a_j)_p with multiplicities folded in by
// parity: within a class, pairs contribute (a,a)_p^C(m,2); across classes,
// (a,b)_p^(m_a m_b).
int diag_hasse(const Diagonal& d, std::int64_t p) {
    int h = 1;
    for (std::size_t i = 0; i < d.size(); ++i) {
        const auto& [a, ma] = d[i];
        const Int pairs_within = (ma * (ma - 1)) / 2;
        if (parity(pairs_within) == 1) h *= nt::hilbert_symbol(a, a, p);
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            const auto& [b, mb] = d[j];
            if (parity(ma) == 1 && parity(mb) == 1) h *= nt::hilbert_symbol(a, b, p);
        }
    }
    return h;
}

bool rationals_equal(const GwElement& x, const GwElement& y) {
    // x = y in GW(Q) iff pos(x) + neg(y) and pos(y) + neg(x) are isometric
    // honest forms (the monoid of forms is cancellative), decided by the
    // classical battery: rank, signature, discriminant, Hasse invariants.
    Diagonal A, B;
    for (const auto& [c, m] : x.terms()) (m > 0 ? A : B).emplace_back(c.rep(), abs(m));
    for (const auto& [c, m] : y.terms()) (m > 0 ? B : A).emplace_back(c.rep(), abs(m));

    if (diag_rank(A) != diag_rank(B)) return false;
    if (diag_signature(A) != diag_signature(B)) return false;
    if (diag_discriminant(A) != diag_discriminant(B)) return false;

    std::set<std::int64_t> places{2};
    for (const auto& [rep, m] : A)
        for (const auto& [p, e] : nt::factorize(std::llabs(rep))) places.insert(p);
    for (const auto& [rep, m] : B)
        for (const auto& [p, e] : nt::factorize(std::llabs(rep))) places.insert(p);
    for (const std::int64_t p : places) {
        if (diag_hasse(A, p) != diag_hasse(B, p)) return false;
    }
    return true;
}

}  // namespace

bool is_equal(const GwElement& a, const GwElement& b) {
    a.require_same_model(b);
    switch (a.field_.kind()) {
        case FieldKind::QuadraticallyClosed: return a.rank() == b.rank();
        case FieldKind::RealClosed:
        case FieldKind::Finite:
            // Normal forms are canonical for these models.
            return a.terms_ == b.terms_;
        case FieldKind::Rationals: return rationals_equal(a, b);
    }
    throw error("unreachable field kind");
}

std::string GwElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [c, m] : terms_) {
        const bool neg = m < 0;
        const Int mag = neg ? Int(-m) : m;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        out += mag.str() + "<" + c.str() + ">";
    }
    return out;
}

Json GwElement::json() const {
    Json terms = Json::array();
    for (const auto& [c, m] : terms_) terms.push_back(Json{{"class", c.str()}, {"mult", int_json(m)}});
    Json j;
    j["field"] = field_.name();
    j["terms"] = std::move(terms);
    j["rank"] = int_json(rank());
    const auto s = signature_opt();
    j["signature"] = s ? int_json(*s) : Json(nullptr);
    j["discriminant"] = discriminant().str();
    return j;
}

}  // namespace gwchi
