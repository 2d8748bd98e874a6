#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace gwchi {

enum class FieldKind {
    QuadraticallyClosed,  // every element a square: one class
    RealClosed,           // classes +1, -1; one ordering
    Finite,               // F_q, q an odd prime power: classes 1, u
    Rationals,            // classes are squarefree integers with sign
};

// One square class of the active field model, held as a canonical label.
//   QuadraticallyClosed: rep 1.
//   RealClosed:          rep +1 or -1.
//   Finite:              rep 1, or the distinguished non-square u (u flag);
//                        u need not be an integer class when [F_q : F_p] is even.
//   Rationals:           rep a squarefree nonzero integer.
// Ordering is 1, -1, 2, -2, 3, ... with u last; used for canonical rendering.
class SquareClass {
public:
    SquareClass() = default;

    static SquareClass unit() { return SquareClass(1, false); }
    static SquareClass finite_nonsquare() { return SquareClass(1, true); }
    static SquareClass of_rep(std::int64_t rep) { return SquareClass(rep, false); }

    std::int64_t rep() const noexcept { return rep_; }
    bool is_finite_nonsquare() const noexcept { return u_; }

    friend bool operator==(const SquareClass&, const SquareClass&) = default;
    friend std::strong_ordering operator<=>(const SquareClass& a, const SquareClass& b) {
        if (a.u_ != b.u_) return a.u_ ? std::strong_ordering::greater : std::strong_ordering::less;
        const std::int64_t ma = a.rep_ < 0 ? -a.rep_ : a.rep_;
        const std::int64_t mb = b.rep_ < 0 ? -b.rep_ : b.rep_;
        if (ma != mb) return ma <=> mb;
        return (a.rep_ < 0 ? 1 : 0) <=> (b.rep_ < 0 ? 1 : 0);
    }

    std::string str() const { return u_ ? "u" : std::to_string(rep_); }

private:
    SquareClass(std::int64_t rep, bool u) : rep_(rep), u_(u) {}

    std::int64_t rep_ = 1;
    bool u_ = false;
};

// A concrete field simulated up to its square-class group. Characteristic is
// metadata only (always != 2); no element arithmetic beyond square classes.
class FieldModel {
public:
    static FieldModel quadratically_closed();
    static FieldModel real_closed();
    static FieldModel finite(std::int64_t q);  // q an odd prime power
    static FieldModel rationals();

    // Parses the command-line names: cclosed | rclosed | fq:<q> | q.
    static FieldModel from_flag(const std::string& flag);

    FieldKind kind() const noexcept { return kind_; }
    std::int64_t characteristic() const noexcept { return char_; }
    std::int64_t q() const noexcept { return q_; }
    int orderings() const noexcept;
    std::string name() const;  // the flag spelling, e.g. "fq:9"

    // Canonical class of the nonzero integer a (reduction mod squares).
    SquareClass square_class(std::int64_t a) const;
    // The distinguished non-square of a Finite model.
    SquareClass nonsquare() const;

    SquareClass mul(const SquareClass& a, const SquareClass& b) const;
    bool is_trivial(const SquareClass& c) const;
    // Sign of the class under the model's unique ordering (RealClosed, Rationals).
    int sign(const SquareClass& c) const;
    bool valid_class(const SquareClass& c) const;

    friend bool operator==(const FieldModel& a, const FieldModel& b) {
        return a.kind_ == b.kind_ && a.q_ == b.q_;
    }

private:
    FieldModel(FieldKind kind, std::int64_t characteristic, std::int64_t q, int ext_degree)
        : kind_(kind), char_(characteristic), q_(q), ext_(ext_degree) {}

    FieldKind kind_ = FieldKind::RealClosed;
    std::int64_t char_ = 0;
    std::int64_t q_ = 0;  // Finite only
    int ext_ = 0;         // Finite only: q = p^ext_
};

}  // namespace gwchi
