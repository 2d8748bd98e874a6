#pragma once

#include "gwchi/field.hpp"
#include "gwchi/integers.hpp"
#include "gwchi/jsonio.hpp"

#include <map>
#include <optional>
#include <string>

namespace gwchi {

// A virtual symmetric bilinear form over the model's field: a finite integer
// combination of rank-1 forms <a>, one per square class. Values are immutable
// once built and always kept in normal form:
//   - zero multiplicities dropped;
//   - Finite models fold 2<u> = 2<1>, so the <u> multiplicity is 0 or 1.
// Normal forms are canonical for every model except Rationals, where equality
// goes through the classical invariant battery instead (see is_equal).
class GwElement {
public:
    GwElement() : GwElement(zero(FieldModel::quadratically_closed())) {}

    static GwElement zero(const FieldModel& field);
    static GwElement one(const FieldModel& field);  // <1>
    static GwElement form(const FieldModel& field, const SquareClass& a);
    static GwElement form(const FieldModel& field, std::int64_t a);
    // <1> + <-1> + <1> + ...  (n terms); n = 0 gives 0.
    static GwElement n_epsilon(const FieldModel& field, std::int64_t n);
    static GwElement hyperbolic(const FieldModel& field);  // <1> + <-1>
    // Trace form of the quadratic etale algebra on a non-square a: <2> + <2a>.
    // Signals when a is a square; the caller must use 2<1> instead.
    static GwElement trace_form_quadratic(const FieldModel& field, const SquareClass& a);
    // Reconstructs the element of a torsion-free model from its invariants:
    // QuadraticallyClosed from the rank, RealClosed from (rank, signature)
    // with rank = signature (mod 2). Errors on Finite and Rationals.
    static GwElement from_invariants(const FieldModel& field, const Int& rank,
                                     const std::optional<Int>& signature);

    const FieldModel& field() const noexcept { return field_; }
    const std::map<SquareClass, Int>& terms() const noexcept { return terms_; }

    GwElement operator+(const GwElement& o) const;
    GwElement operator-(const GwElement& o) const;
    GwElement operator-() const;
    GwElement operator*(const GwElement& o) const;
    GwElement scale(const Int& k) const;
    GwElement pow(unsigned k) const;

    Int rank() const;
    // Signature at the model's unique ordering; errors when there is none.
    Int signature() const;
    std::optional<Int> signature_opt() const;
    // Plain determinant class: product of representatives with multiplicity.
    // No (-1)^{n(n-1)/2} twist is applied; see the README.
    SquareClass discriminant() const;
    // Torsion test: rank 0 and every signature 0 (rank alone where the model
    // has no ordering).
    bool is_torsion() const;

    // Model-complete equality of forms. Rationals decide by rank, signature,
    // discriminant and Hilbert symbols at the finitely many relevant places;
    // the other models compare canonical normal forms.
    friend bool is_equal(const GwElement& a, const GwElement& b);
    friend bool operator==(const GwElement& a, const GwElement& b) { return is_equal(a, b); }

    std::string str() const;
    Json json() const;

private:
    GwElement(FieldModel field, std::map<SquareClass, Int> terms);
    void normalize();
    void require_same_model(const GwElement& o) const;

    FieldModel field_;
    std::map<SquareClass, Int> terms_;
};

}  // namespace gwchi
