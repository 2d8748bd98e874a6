#pragma once

#include "gwchi/gw.hpp"
#include "gwchi/integers.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace gwchi {

enum class VarietyKind {
    Point,            // Spec k
    Affine,           // A^n
    Proj,             // P^n
    Gm,               // A^1 - {0}
    Lefschetz,        // L = [A^1]
    QuadExt,          // Spec k[x]/(x^2 - a)
    PuncturedAffine,  // A^n minus r rational points
    Grassmannian,     // Gr(r, n)
    HilbLocal,        // Hilb^m_0(A^2), punctual Hilbert scheme
    Union,            // disjoint union
    Product,
    Difference,       // formal difference of classes
    VectorBundle,     // total space, given rank over a base class
    ProjBundle,       // projectivization, given rank over a base class
    BlowUp,           // blow-up of a base along a center of given codim
    Sym,              // n-th symmetric power
};

// One node of a variety-class expression. Trees are immutable and shared;
// integer parameters are validated at construction, while the square class
// of QuadExt is kept as a raw integer and interpreted by the field model at
// evaluation time.
class VarietyExpr {
public:
    using Ptr = std::shared_ptr<const VarietyExpr>;

    static Ptr point();
    static Ptr affine(std::int64_t n);
    static Ptr proj(std::int64_t n);
    static Ptr gm();
    static Ptr lefschetz();
    static Ptr quadext(std::int64_t a);
    static Ptr punctured_affine(std::int64_t n, std::int64_t removed);
    static Ptr grassmannian(std::int64_t r, std::int64_t n);
    static Ptr hilb_local_a2(std::int64_t m);
    static Ptr disjoint_union(Ptr a, Ptr b);
    static Ptr product(Ptr a, Ptr b);
    static Ptr difference(Ptr a, Ptr b);
    static Ptr vector_bundle(std::int64_t rank, Ptr base);
    static Ptr proj_bundle(std::int64_t rank, Ptr base);
    static Ptr blow_up(Ptr base, Ptr center, std::int64_t codim);
    static Ptr sym(std::int64_t n, Ptr base);

    VarietyKind kind() const noexcept { return kind_; }
    std::int64_t arg0() const noexcept { return arg0_; }
    std::int64_t arg1() const noexcept { return arg1_; }
    const Ptr& left() const noexcept { return left_; }
    const Ptr& right() const noexcept { return right_; }

    // Canonical text in the input grammar; parse(render(e)) rebuilds an
    // identical tree (parentheses are inserted wherever left association or
    // precedence would regroup).
    std::string render() const;

    friend bool same_tree(const VarietyExpr& a, const VarietyExpr& b);

protected:
    VarietyExpr(VarietyKind kind, std::int64_t arg0, std::int64_t arg1, Ptr left, Ptr right)
        : kind_(kind), arg0_(arg0), arg1_(arg1), left_(std::move(left)), right_(std::move(right)) {}

private:
    VarietyKind kind_;
    std::int64_t arg0_ = 0;  // n / rank / m / quadext class / sym degree
    std::int64_t arg1_ = 0;  // removed points / Grassmannian ambient / blow-up codim
    Ptr left_, right_;       // left = base/first operand, right = second/center
};

// Parses the expression grammar:
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := leaf | '(' expr ')' | func(args)
// Keywords are case-insensitive, whitespace is free. Throws parse_error
// carrying position and expectation.
VarietyExpr::Ptr parse_variety(const std::string& text);

// chi^c of the class, by structural recursion with the closed-form rules:
//   point 1, A^n <-1>^n, P^n (n+1)_eps, Gm <-1>-<1>, L <-1>,
//   quadext(a) <2>+<2a>, A^n minus r points <-1>^n - r<1>,
//   Gr(r,n) from counting complex and real cells, vb rank r <-1>^r * chi,
//   pb rank r r_eps * chi, blow-up chi(X) + <-1>(d-1)_eps chi(Z),
//   Hilb^m_0(A^2) from its cell classes, Sym^n via invariant reconstruction.
// Union/Product/Difference evaluate to +, *, -; the map is a ring
// homomorphism on expressions. Sym requires a torsion-free model.
GwElement eval_chi(const VarietyExpr::Ptr& expr, const FieldModel& field);

struct IdentityBounds {
    unsigned sym_union_n = 6;  // convolution identity up to Sym^n
    unsigned totaro_m = 4;     // Sym degree in the Totaro rewrite
    unsigned totaro_n = 3;     // affine factor dimension bound (uses A^{n-1})
};

struct CheckReport {
    std::string check;
    bool pass = true;
    std::string detail;  // first failing instance, empty when pass
};

bool all_pass(const std::vector<CheckReport>& reports);

// The rewrite identities, checked through eval_chi over the given model:
//   (a) chi(Sym^n(X u Y)) = sum_{a+b=n} chi(Sym^a X) chi(Sym^b Y)
//   (b) chi(Sym^m(A^{n-1} x X)) = <-1>^{m(n-1)} chi(Sym^m X)
//   (c) chi(L)^2 = <1>
std::vector<CheckReport> identity_checks(const VarietyExpr::Ptr& x, const VarietyExpr::Ptr& y,
                                         const FieldModel& field, const IdentityBounds& bounds);

// Built-in classes with chi^c = 0: punctured even-dimensional affine spaces
// and balanced differences (including a product with a kernel factor).
std::vector<VarietyExpr::Ptr> kernel_inventory();

// Expression pairs the identity suite runs on by default.
std::vector<std::pair<VarietyExpr::Ptr, VarietyExpr::Ptr>> identity_sample_pairs();

// For every kernel element K checks chi(K) = 0 and chi(Sym^n K) = 0 for
// n <= sym_n; the conjectural statement holds unconditionally over the
// torsion-free models.
std::vector<CheckReport> conjecture_checks(const FieldModel& field, unsigned sym_n);

}  // namespace gwchi
