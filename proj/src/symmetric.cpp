#include "gwchi/symmetric.hpp"

#include "gwchi/error.hpp"

namespace gwchi {

namespace {

void extend_partitions(std::vector<Partition>& out, std::vector<unsigned>& stack, unsigned remaining,
                       unsigned max_part) {
    if (remaining == 0) {
        out.push_back(Partition{stack});
        return;
    }
    const unsigned top = remaining < max_part ? remaining : max_part;
    for (unsigned p = top; p >= 1; --p) {
        stack.push_back(p);
        extend_partitions(out, stack, remaining - p, p);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(unsigned n) {
    std::vector<Partition> out;
    std::vector<unsigned> stack;
    extend_partitions(out, stack, n, n == 0 ? 1 : n);
    return out;
}

std::vector<Int> partition_count_by_length(unsigned n) {
    // table[m][k]: partitions of m with exactly k parts.
    std::vector<std::vector<Int>> table(n + 1, std::vector<Int>(n + 1, Int(0)));
    table[0][0] = 1;
    for (unsigned m = 1; m <= n; ++m)
        for (unsigned k = 1; k <= m; ++k) {
            table[m][k] = table[m - 1][k - 1];
            if (m >= k) table[m][k] += table[m - k][k];
        }
    return table[n];
}

Int conf_rank(const Int& r, unsigned m) { return falling_factorial(r, m); }

Int sym_rank(const Int& r, unsigned n) { return rising_binomial(r, n); }

Int sym_signature(const Int& r, const Int& s, unsigned n) {
    if (parity(r - s) != 0) throw error("sym_signature: rank and signature must agree mod 2");
    const Int pairs = (r - s) / 2;
    Int total = 0;
    for (unsigned b = 0; 2 * b <= n; ++b) {
        const unsigned a = n - 2 * b;
        total += rising_binomial(s, a) * rising_binomial(pairs, b);
    }
    return total;
}

SymInvariants sym_invariants(const Int& r, const Int& s, unsigned n) {
    return {sym_rank(r, n), sym_signature(r, s, n)};
}

GwElement sym_power_chi(unsigned n, const GwElement& q, const FieldModel& field) {
    if (n == 0) return GwElement::one(field);
    switch (field.kind()) {
        case FieldKind::QuadraticallyClosed:
            return GwElement::from_invariants(field, sym_rank(q.rank(), n), std::nullopt);
        case FieldKind::RealClosed: {
            const auto si = sym_invariants(q.rank(), q.signature(), n);
            return GwElement::from_invariants(field, si.rank, si.signature);
        }
        default:
            throw error("sym_power_chi: model " + field.name() +
                        " is conjecture-dependent: no torsion-free invariant reconstruction");
    }
}

bool sym_delta_rank_check(const Int& r, unsigned n) {
    Int total = 0;
    for (const auto& lambda : partitions_of(n)) {
        Int quotient, remainder;
        boost::multiprecision::divide_qr(conf_rank(r, lambda.length()), lambda.aut_size(), quotient,
                                         remainder);
        if (remainder != 0)
            throw error("sym_delta_rank_check: stratum term not integral (internal bug)");
        total += quotient;
    }
    return total == sym_rank(r, n);
}

}  // namespace gwchi
