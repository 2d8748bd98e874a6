#include "gwchi/field.hpp"

#include "gwchi/error.hpp"
#include "gwchi/numtheory.hpp"

#include <cstdlib>

namespace gwchi {

FieldModel FieldModel::quadratically_closed() { return {FieldKind::QuadraticallyClosed, 0, 0, 0}; }

FieldModel FieldModel::real_closed() { return {FieldKind::RealClosed, 0, 0, 0}; }

FieldModel FieldModel::finite(std::int64_t q) {
    std::int64_t p = 0;
    int e = 0;
    if (!nt::odd_prime_power(q, p, e)) throw error("finite field model requires an odd prime power, got " + std::to_string(q));
    return {FieldKind::Finite, p, q, e};
}

FieldModel FieldModel::rationals() { return {FieldKind::Rationals, 0, 0, 0}; }

FieldModel FieldModel::from_flag(const std::string& flag) {
    if (flag == "cclosed") return quadratically_closed();
    if (flag == "rclosed") return real_closed();
    if (flag == "q") return rationals();
    if (flag.rfind("fq:", 0) == 0) {
        const std::string tail = flag.substr(3);
        if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
            throw error("bad field flag '" + flag + "': expected fq:<odd prime power>");
        return finite(std::strtoll(tail.c_str(), nullptr, 10));
    }
    throw error("unknown field flag '" + flag + "': expected cclosed|rclosed|fq:<q>|q");
}

int FieldModel::orderings() const noexcept {
    switch (kind_) {
        case FieldKind::RealClosed:
        case FieldKind::Rationals: return 1;
        default: return 0;
    }
}

std::string FieldModel::name() const {
    switch (kind_) {
        case FieldKind::QuadraticallyClosed: return "cclosed";
        case FieldKind::RealClosed: return "rclosed";
        case FieldKind::Finite: return "fq:" + std::to_string(q_);
        case FieldKind::Rationals: return "q";
    }
    return "?";
}

SquareClass FieldModel::square_class(std::int64_t a) const {
    if (a == 0) throw error("square class of zero is undefined");
    switch (kind_) {
        case FieldKind::QuadraticallyClosed: return SquareClass::unit();
        case FieldKind::RealClosed: return SquareClass::of_rep(a < 0 ? -1 : 1);
        case FieldKind::Finite: {
            const std::int64_t r = ((a % char_) + char_) % char_;
            if (r == 0) throw error("integer " + std::to_string(a) + " is zero in F_" + std::to_string(q_));
            // Units of the prime field are squares in F_q exactly when
            // jacobi(a|p)^[F_q:F_p] = 1; for even extension degree everything is.
            if (ext_ % 2 == 0 || nt::jacobi(r, char_) == 1) return SquareClass::unit();
            return SquareClass::finite_nonsquare();
        }
        case FieldKind::Rationals: return SquareClass::of_rep(nt::squarefree_part(a));
    }
    throw error("unreachable field kind");
}

SquareClass FieldModel::nonsquare() const {
    if (kind_ != FieldKind::Finite) throw error("nonsquare(): only Finite models have a distinguished non-square");
    return SquareClass::finite_nonsquare();
}

SquareClass FieldModel::mul(const SquareClass& a, const SquareClass& b) const {
    switch (kind_) {
        case FieldKind::QuadraticallyClosed: return SquareClass::unit();
        case FieldKind::RealClosed: return SquareClass::of_rep(a.rep() * b.rep());
        case FieldKind::Finite:
            return a.is_finite_nonsquare() == b.is_finite_nonsquare() ? SquareClass::unit()
                                                                      : SquareClass::finite_nonsquare();
        case FieldKind::Rationals: {
            // Squarefree reps: cancel the gcd, whose square drops out.
            const std::int64_t x = a.rep(), y = b.rep();
            std::int64_t g = std::llabs(x);
            std::int64_t h = std::llabs(y);
            while (h) {
                const std::int64_t t = g % h;
                g = h;
                h = t;
            }
            const __int128 prod = static_cast<__int128>(x / g) * (y / g);
            if (prod > INT64_MAX || prod < INT64_MIN) throw error("square-class product out of range");
            return SquareClass::of_rep(static_cast<std::int64_t>(prod));
        }
    }
    throw error("unreachable field kind");
}

bool FieldModel::is_trivial(const SquareClass& c) const { return !c.is_finite_nonsquare() && c.rep() == 1; }

int FieldModel::sign(const SquareClass& c) const {
    if (orderings() == 0) throw error("sign(): model " + name() + " has no ordering");
    return c.rep() < 0 ? -1 : 1;
}

bool FieldModel::valid_class(const SquareClass& c) const {
    switch (kind_) {
        case FieldKind::QuadraticallyClosed: return !c.is_finite_nonsquare() && c.rep() == 1;
        case FieldKind::RealClosed: return !c.is_finite_nonsquare() && (c.rep() == 1 || c.rep() == -1);
        case FieldKind::Finite: return c.rep() == 1;
        case FieldKind::Rationals:
            return !c.is_finite_nonsquare() && c.rep() != 0 && nt::squarefree_part(c.rep()) == c.rep();
    }
    return false;
}

}  // namespace gwchi
