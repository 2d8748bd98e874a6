#include "gwchi/integers.hpp"

#include "gwchi/error.hpp"

namespace gwchi {

Int factorial(unsigned n) {
    Int r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

Int binomial(const Int& top, unsigned k) {
    Int num = 1;
    for (unsigned i = 0; i < k; ++i) num *= top - i;
    const Int den = factorial(k);
    Int q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0) throw error("binomial: non-exact division (internal)");
    return q;
}

Int rising_binomial(const Int& r, unsigned n) { return binomial(r + n - 1, n); }

Int falling_factorial(const Int& r, unsigned m) {
    Int v = 1;
    for (unsigned i = 0; i < m; ++i) v *= r - i;
    return v;
}

}  // namespace gwchi
