#include "gwchi/k0var.hpp"

#include "gwchi/error.hpp"
#include "gwchi/hilbert.hpp"
#include "gwchi/symmetric.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace gwchi {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw error(what);
}

VarietyExpr::Ptr make(VarietyKind kind, std::int64_t arg0, std::int64_t arg1, VarietyExpr::Ptr left,
                      VarietyExpr::Ptr right);

}  // namespace

VarietyExpr::Ptr VarietyExpr::point() { return make(VarietyKind::Point, 0, 0, nullptr, nullptr); }

VarietyExpr::Ptr VarietyExpr::affine(std::int64_t n) {
    require(n >= 0, "affine: dimension must be non-negative");
    return make(VarietyKind::Affine, n, 0, nullptr, nullptr);
}

VarietyExpr::Ptr VarietyExpr::proj(std::int64_t n) {
    require(n >= 0, "proj: dimension must be non-negative");
    return make(VarietyKind::Proj, n, 0, nullptr, nullptr);
}

VarietyExpr::Ptr VarietyExpr::gm() { return make(VarietyKind::Gm, 0, 0, nullptr, nullptr); }

VarietyExpr::Ptr VarietyExpr::lefschetz() { return make(VarietyKind::Lefschetz, 0, 0, nullptr, nullptr); }

VarietyExpr::Ptr VarietyExpr::quadext(std::int64_t a) {
    require(a != 0, "quadext: the class label must be a nonzero integer");
    return make(VarietyKind::QuadExt, a, 0, nullptr, nullptr);
}

VarietyExpr::Ptr VarietyExpr::punctured_affine(std::int64_t n, std::int64_t removed) {
    require(n >= 0, "punctured_affine: dimension must be non-negative");
    require(removed >= 0, "punctured_affine: number of removed points must be non-negative");
    return make(VarietyKind::PuncturedAffine, n, removed, nullptr, nullptr);
}

VarietyExpr::Ptr VarietyExpr::grassmannian(std::int64_t r, std::int64_t n) {
    require(1 <= r && r <= n, "grassmannian: need 1 <= r <= n");
    return make(VarietyKind::Grassmannian, r, n, nullptr, nullptr);
}

VarietyExpr::Ptr VarietyExpr::hilb_local_a2(std::int64_t m) {
    require(m >= 0, "hilb_local_a2: length must be non-negative");
    return make(VarietyKind::HilbLocal, m, 0, nullptr, nullptr);
}

VarietyExpr::Ptr VarietyExpr::disjoint_union(Ptr a, Ptr b) {
    return make(VarietyKind::Union, 0, 0, std::move(a), std::move(b));
}

VarietyExpr::Ptr VarietyExpr::product(Ptr a, Ptr b) {
    return make(VarietyKind::Product, 0, 0, std::move(a), std::move(b));
}

VarietyExpr::Ptr VarietyExpr::difference(Ptr a, Ptr b) {
    return make(VarietyKind::Difference, 0, 0, std::move(a), std::move(b));
}

VarietyExpr::Ptr VarietyExpr::vector_bundle(std::int64_t rank, Ptr base) {
    require(rank >= 0, "vb: rank must be non-negative");
    return make(VarietyKind::VectorBundle, rank, 0, std::move(base), nullptr);
}

VarietyExpr::Ptr VarietyExpr::proj_bundle(std::int64_t rank, Ptr base) {
    require(rank >= 0, "pb: rank must be non-negative");
    return make(VarietyKind::ProjBundle, rank, 0, std::move(base), nullptr);
}

VarietyExpr::Ptr VarietyExpr::blow_up(Ptr base, Ptr center, std::int64_t codim) {
    require(codim >= 1, "blowup: codimension must be at least 1");
    return make(VarietyKind::BlowUp, 0, codim, std::move(base), std::move(center));
}

VarietyExpr::Ptr VarietyExpr::sym(std::int64_t n, Ptr base) {
    require(n >= 0, "sym: degree must be non-negative");
    return make(VarietyKind::Sym, n, 0, std::move(base), nullptr);
}

namespace {

VarietyExpr::Ptr make(VarietyKind kind, std::int64_t arg0, std::int64_t arg1, VarietyExpr::Ptr left,
                      VarietyExpr::Ptr right) {
    struct Access : VarietyExpr {
        Access(VarietyKind k, std::int64_t a0, std::int64_t a1, Ptr l, Ptr r)
            : VarietyExpr(k, a0, a1, std::move(l), std::move(r)) {}
    };
    return std::make_shared<const Access>(kind, arg0, arg1, std::move(left), std::move(right));
}

bool is_sum_like(const VarietyExpr& e) {
    return e.kind() == VarietyKind::Union || e.kind() == VarietyKind::Difference;
}

}  // namespace

bool same_tree(const VarietyExpr& a, const VarietyExpr& b) {
    if (a.kind() != b.kind() || a.arg0() != b.arg0() || a.arg1() != b.arg1()) return false;
    if (static_cast<bool>(a.left()) != static_cast<bool>(b.left())) return false;
    if (static_cast<bool>(a.right()) != static_cast<bool>(b.right())) return false;
    if (a.left() && !same_tree(*a.left(), *b.left())) return false;
    if (a.right() && !same_tree(*a.right(), *b.right())) return false;
    return true;
}

std::string VarietyExpr::render() const {
    const auto num = [](std::int64_t v) { return std::to_string(v); };
    // A right operand that is itself a sum would re-associate to the left
    // when reparsed, so it keeps explicit parentheses; likewise sums under
    // products and right-nested products.
    const auto sum_operand = [&](const Ptr& child, bool right_side) {
        const std::string s = child->render();
        return right_side && is_sum_like(*child) ? "(" + s + ")" : s;
    };
    const auto prod_operand = [&](const Ptr& child, bool right_side) {
        const std::string s = child->render();
        if (is_sum_like(*child) || (right_side && child->kind() == VarietyKind::Product))
            return "(" + s + ")";
        return s;
    };
    switch (kind_) {
        case VarietyKind::Point: return "point";
        case VarietyKind::Affine: return "affine(" + num(arg0_) + ")";
        case VarietyKind::Proj: return "proj(" + num(arg0_) + ")";
        case VarietyKind::Gm: return "gm";
        case VarietyKind::Lefschetz: return "L";
        case VarietyKind::QuadExt: return "quadext(" + num(arg0_) + ")";
        case VarietyKind::PuncturedAffine:
            return "punctured_affine(" + num(arg0_) + ", " + num(arg1_) + ")";
        case VarietyKind::Grassmannian: return "grassmannian(" + num(arg0_) + ", " + num(arg1_) + ")";
        case VarietyKind::HilbLocal: return "hilb_local_a2(" + num(arg0_) + ")";
        case VarietyKind::Union: return sum_operand(left_, false) + " + " + sum_operand(right_, true);
        case VarietyKind::Difference:
            return sum_operand(left_, false) + " - " + sum_operand(right_, true);
        case VarietyKind::Product:
            return prod_operand(left_, false) + " * " + prod_operand(right_, true);
        case VarietyKind::VectorBundle: return "vb(" + num(arg0_) + ", " + left_->render() + ")";
        case VarietyKind::ProjBundle: return "pb(" + num(arg0_) + ", " + left_->render() + ")";
        case VarietyKind::BlowUp:
            return "blowup(" + left_->render() + ", " + right_->render() + ", " + num(arg1_) + ")";
        case VarietyKind::Sym: return "sym(" + num(arg0_) + ", " + left_->render() + ")";
    }
    throw error("unreachable variety kind");
}

namespace {

struct Token {
    enum Kind { Ident, Number, Plus, Minus, Star, LParen, RParen, Comma, End } kind;
    std::string text;      // identifier lowercased; number as written
    std::size_t position;  // byte offset of the first character
};

std::vector<Token> lex(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = i;
            std::string word;
            while (i < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) {
                word += static_cast<char>(std::tolower(static_cast<unsigned char>(text[i])));
                ++i;
            }
            out.push_back({Token::Ident, word, start});
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            std::string digits;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
            out.push_back({Token::Number, digits, start});
            continue;
        }
        const auto symbol = [&](Token::Kind kind) {
            out.push_back({kind, std::string(1, c), i});
            ++i;
        };
        switch (c) {
            case '+': symbol(Token::Plus); break;
            case '-': symbol(Token::Minus); break;
            case '*': symbol(Token::Star); break;
            case '(': symbol(Token::LParen); break;
            case ')': symbol(Token::RParen); break;
            case ',': symbol(Token::Comma); break;
            default:
                throw parse_error(i, "an expression token", "'" + std::string(1, c) + "'");
        }
    }
    out.push_back({Token::End, "", text.size()});
    return out;
}

class Parser {
public:
    explicit Parser(const std::string& text) : tokens_(lex(text)) {}

    VarietyExpr::Ptr run() {
        auto e = expr();
        expect(Token::End, "end of input");
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    Token take() { return tokens_[pos_++]; }

    [[noreturn]] void unexpected(const std::string& expected) const {
        const Token& t = peek();
        throw parse_error(t.position, expected,
                          t.kind == Token::End ? "end of input" : "'" + t.text + "'");
    }

    Token expect(Token::Kind kind, const std::string& expected) {
        if (peek().kind != kind) unexpected(expected);
        return take();
    }

    std::int64_t integer(const std::string& what) {
        const Token t = expect(Token::Number, what);
        try {
            return std::stoll(t.text);
        } catch (const std::exception&) {
            throw parse_error(t.position, what, "'" + t.text + "' (out of range)");
        }
    }

    // '-'? INT, only where a square class is expected.
    std::int64_t square_class_label() {
        bool negative = false;
        if (peek().kind == Token::Minus) {
            take();
            negative = true;
        }
        const std::int64_t v = integer("a square class label");
        return negative ? -v : v;
    }

    VarietyExpr::Ptr expr() {
        auto acc = term();
        while (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            const bool plus = take().kind == Token::Plus;
            auto rhs = term();
            acc = plus ? VarietyExpr::disjoint_union(std::move(acc), std::move(rhs))
                       : VarietyExpr::difference(std::move(acc), std::move(rhs));
        }
        return acc;
    }

    VarietyExpr::Ptr term() {
        auto acc = factor();
        while (peek().kind == Token::Star) {
            take();
            acc = VarietyExpr::product(std::move(acc), factor());
        }
        return acc;
    }

    VarietyExpr::Ptr factor() {
        if (peek().kind == Token::LParen) {
            take();
            auto e = expr();
            expect(Token::RParen, "')'");
            return e;
        }
        if (peek().kind != Token::Ident) unexpected("a variety expression");
        const Token name = take();
        if (name.text == "point") return VarietyExpr::point();
        if (name.text == "gm") return VarietyExpr::gm();
        if (name.text == "l") return VarietyExpr::lefschetz();
        if (name.text == "affine") return unary_int(&VarietyExpr::affine, "a dimension");
        if (name.text == "proj") return unary_int(&VarietyExpr::proj, "a dimension");
        if (name.text == "quadext") {
            expect(Token::LParen, "'('");
            const std::int64_t a = square_class_label();
            expect(Token::RParen, "')'");
            return wrap(name, [&] { return VarietyExpr::quadext(a); });
        }
        if (name.text == "punctured_affine") {
            expect(Token::LParen, "'('");
            const std::int64_t n = integer("a dimension");
            expect(Token::Comma, "','");
            const std::int64_t r = integer("a point count");
            expect(Token::RParen, "')'");
            return wrap(name, [&] { return VarietyExpr::punctured_affine(n, r); });
        }
        if (name.text == "grassmannian") {
            expect(Token::LParen, "'('");
            const std::int64_t r = integer("a subspace dimension");
            expect(Token::Comma, "','");
            const std::int64_t n = integer("an ambient dimension");
            expect(Token::RParen, "')'");
            return wrap(name, [&] { return VarietyExpr::grassmannian(r, n); });
        }
        if (name.text == "hilb_local_a2") return unary_int(&VarietyExpr::hilb_local_a2, "a length");
        if (name.text == "vb" || name.text == "pb") {
            expect(Token::LParen, "'('");
            const std::int64_t rank = integer("a rank");
            expect(Token::Comma, "','");
            auto base = expr();
            expect(Token::RParen, "')'");
            return wrap(name, [&] {
                return name.text == "vb" ? VarietyExpr::vector_bundle(rank, std::move(base))
                                         : VarietyExpr::proj_bundle(rank, std::move(base));
            });
        }
        if (name.text == "blowup") {
            expect(Token::LParen, "'('");
            auto base = expr();
            expect(Token::Comma, "','");
            auto center = expr();
            expect(Token::Comma, "','");
            const std::int64_t d = integer("a codimension");
            expect(Token::RParen, "')'");
            return wrap(name, [&] {
                return VarietyExpr::blow_up(std::move(base), std::move(center), d);
            });
        }
        if (name.text == "sym") {
            expect(Token::LParen, "'('");
            const std::int64_t n = integer("a degree");
            expect(Token::Comma, "','");
            auto base = expr();
            expect(Token::RParen, "')'");
            return wrap(name, [&] { return VarietyExpr::sym(n, std::move(base)); });
        }
        throw parse_error(name.position, "a variety keyword", "'" + name.text + "'");
    }

    VarietyExpr::Ptr unary_int(VarietyExpr::Ptr (*build)(std::int64_t), const std::string& what) {
        expect(Token::LParen, "'('");
        const std::int64_t v = integer(what);
        const Token close = expect(Token::RParen, "')'");
        try {
            return build(v);
        } catch (const error& e) {
            throw parse_error(close.position, "valid parameters", e.what());
        }
    }

    // Converts construction-time validation failures into positioned errors.
    template <class Build>
    VarietyExpr::Ptr wrap(const Token& name, Build build) {
        try {
            return build();
        } catch (const parse_error&) {
            throw;
        } catch (const error& e) {
            throw parse_error(name.position, "valid parameters", e.what());
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace

VarietyExpr::Ptr parse_variety(const std::string& text) { return Parser(text).run(); }

GwElement eval_chi(const VarietyExpr::Ptr& expr, const FieldModel& field) {
    if (!expr) throw error("eval_chi: empty expression");
    const VarietyExpr& e = *expr;
    const auto minus_one = [&] { return GwElement::form(field, -1); };
    switch (e.kind()) {
        case VarietyKind::Point: return GwElement::one(field);
        case VarietyKind::Affine: return minus_one().pow(static_cast<unsigned>(e.arg0()));
        case VarietyKind::Proj: return GwElement::n_epsilon(field, e.arg0() + 1);
        case VarietyKind::Gm: return minus_one() - GwElement::one(field);
        case VarietyKind::Lefschetz: return minus_one();
        case VarietyKind::QuadExt: {
            // <2> + <2a> uniformly. For square a the algebra splits into two
            // points and indeed <2,2> = <1,1> in every GW(k) (a binary form
            // represents its discriminant's cofactor 2 exactly when <1,1>
            // does), so no case split is needed.
            const SquareClass two = field.square_class(2);
            const SquareClass a = field.square_class(e.arg0());
            return GwElement::form(field, two) + GwElement::form(field, field.mul(two, a));
        }
        case VarietyKind::PuncturedAffine:
            return minus_one().pow(static_cast<unsigned>(e.arg0())) -
                   GwElement::one(field).scale(e.arg1());
        case VarietyKind::Grassmannian: {
            const std::int64_t r = e.arg0(), n = e.arg1();
            const Int complex_cells = binomial(Int(n), static_cast<unsigned>(r));
            // Real points: Gr(r, n)(R) is a closed manifold of dimension
            // r(n-r); odd dimension (r odd, n even) forces chi = 0, else the
            // halved binomial counts it.
            const bool odd_dimensional = (r % 2 == 1) && (n % 2 == 0);
            const Int real_cells =
                odd_dimensional ? Int(0)
                                : binomial(Int(n / 2), static_cast<unsigned>(r / 2));
            return GwElement::one(field).scale((complex_cells + real_cells) / 2) +
                   minus_one().scale((complex_cells - real_cells) / 2);
        }
        case VarietyKind::HilbLocal: return chi_of_class_poly(local_hilb_class(static_cast<unsigned>(e.arg0())), field);
        case VarietyKind::Union: return eval_chi(e.left(), field) + eval_chi(e.right(), field);
        case VarietyKind::Product: return eval_chi(e.left(), field) * eval_chi(e.right(), field);
        case VarietyKind::Difference: return eval_chi(e.left(), field) - eval_chi(e.right(), field);
        case VarietyKind::VectorBundle:
            return minus_one().pow(static_cast<unsigned>(e.arg0())) * eval_chi(e.left(), field);
        case VarietyKind::ProjBundle:
            return GwElement::n_epsilon(field, e.arg0()) * eval_chi(e.left(), field);
        case VarietyKind::BlowUp:
            return eval_chi(e.left(), field) +
                   minus_one() * GwElement::n_epsilon(field, e.arg1() - 1) * eval_chi(e.right(), field);
        case VarietyKind::Sym:
            return sym_power_chi(static_cast<unsigned>(e.arg0()), eval_chi(e.left(), field), field);
    }
    throw error("unreachable variety kind");
}

bool all_pass(const std::vector<CheckReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.pass; });
}

std::vector<CheckReport> identity_checks(const VarietyExpr::Ptr& x, const VarietyExpr::Ptr& y,
                                         const FieldModel& field, const IdentityBounds& bounds) {
    std::vector<CheckReport> out;

    CheckReport convolution{"sym of a disjoint union is the convolution of sym chi values", true, ""};
    const auto both = VarietyExpr::disjoint_union(x, y);
    for (unsigned n = 0; n <= bounds.sym_union_n && convolution.pass; ++n) {
        const GwElement lhs = eval_chi(VarietyExpr::sym(n, both), field);
        GwElement rhs = GwElement::zero(field);
        for (unsigned a = 0; a <= n; ++a)
            rhs = rhs + eval_chi(VarietyExpr::sym(a, x), field) *
                            eval_chi(VarietyExpr::sym(n - a, y), field);
        if (!is_equal(lhs, rhs)) {
            convolution.pass = false;
            convolution.detail = "n = " + std::to_string(n) + ": " + lhs.str() + " vs " + rhs.str();
        }
    }
    out.push_back(std::move(convolution));

    CheckReport totaro{"sym of an affine-space product twists by a power of <-1>", true, ""};
    for (unsigned n = 1; n <= bounds.totaro_n && totaro.pass; ++n) {
        const auto cell = VarietyExpr::product(VarietyExpr::affine(n - 1), x);
        for (unsigned m = 0; m <= bounds.totaro_m && totaro.pass; ++m) {
            const GwElement lhs = eval_chi(VarietyExpr::sym(m, cell), field);
            const GwElement rhs = GwElement::form(field, -1).pow(m * (n - 1)) *
                                  eval_chi(VarietyExpr::sym(m, x), field);
            if (!is_equal(lhs, rhs)) {
                totaro.pass = false;
                totaro.detail = "m = " + std::to_string(m) + ", n = " + std::to_string(n) + ": " +
                                lhs.str() + " vs " + rhs.str();
            }
        }
    }
    out.push_back(std::move(totaro));

    CheckReport lefschetz{"chi of the Lefschetz class squares to <1>", true, ""};
    const GwElement l = eval_chi(VarietyExpr::lefschetz(), field);
    if (!is_equal(l * l, GwElement::one(field))) {
        lefschetz.pass = false;
        lefschetz.detail = (l * l).str();
    }
    out.push_back(std::move(lefschetz));

    return out;
}

std::vector<VarietyExpr::Ptr> kernel_inventory() {
    std::vector<VarietyExpr::Ptr> out;
    // A^{2m} minus the origin: chi = <1>^{2m} - <1> = 0.
    for (std::int64_t m = 1; m <= 3; ++m) out.push_back(VarietyExpr::punctured_affine(2 * m, 1));
    // Balanced differences with chi = 0 termwise.
    out.push_back(VarietyExpr::difference(
        VarietyExpr::disjoint_union(VarietyExpr::gm(), VarietyExpr::point()), VarietyExpr::affine(1)));
    out.push_back(VarietyExpr::difference(VarietyExpr::proj(1), VarietyExpr::quadext(-1)));
    out.push_back(VarietyExpr::difference(
        VarietyExpr::affine(2), VarietyExpr::product(VarietyExpr::lefschetz(), VarietyExpr::lefschetz())));
    // The kernel is an ideal: a kernel factor kills any product.
    out.push_back(VarietyExpr::product(VarietyExpr::punctured_affine(2, 1), VarietyExpr::proj(2)));
    return out;
}

std::vector<std::pair<VarietyExpr::Ptr, VarietyExpr::Ptr>> identity_sample_pairs() {
    return {
        {VarietyExpr::quadext(-1), VarietyExpr::disjoint_union(VarietyExpr::gm(), VarietyExpr::point())},
        {VarietyExpr::proj(2), VarietyExpr::lefschetz()},
        {VarietyExpr::grassmannian(2, 4), VarietyExpr::point()},
    };
}

std::vector<CheckReport> conjecture_checks(const FieldModel& field, unsigned sym_n) {
    std::vector<CheckReport> out;
    for (const auto& k : kernel_inventory()) {
        CheckReport report{"sym powers of the kernel class " + k->render() + " stay in the kernel",
                           true, ""};
        const GwElement base = eval_chi(k, field);
        if (!is_equal(base, GwElement::zero(field))) {
            report.pass = false;
            report.detail = "chi = " + base.str() + " is not 0";
        }
        for (unsigned n = 0; n <= sym_n && report.pass; ++n) {
            const GwElement chi = eval_chi(VarietyExpr::sym(n, k), field);
            if (n >= 1 && !is_equal(chi, GwElement::zero(field))) {
                report.pass = false;
                report.detail = "n = " + std::to_string(n) + ": chi = " + chi.str();
            }
        }
        out.push_back(std::move(report));
    }
    return out;
}

}  // namespace gwchi
