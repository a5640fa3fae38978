#include "weylhodge/hodgemotive/molien.hpp"

#include "weylhodge/errors.hpp"
#include "weylhodge/partitions/partition.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace weylhodge {

namespace {

Polynomial multiply(const Polynomial& a, const Polynomial& b) {
    if (a.empty() || b.empty()) return {};
    Polynomial out(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// Exact quotient by 1 + t.
Polynomial divide_by_one_plus_t(const Polynomial& p) {
    if (p.empty()) return {};
    Polynomial q(p.size() - 1, BigInt(0));
    BigInt carry = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        q[i] = p[i] - carry;
        carry = q[i];
    }
    if (p.back() != carry) throw std::logic_error("polynomial is not divisible by 1 + t");
    return q;
}

void trim(Polynomial& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

} // namespace

Polynomial molien_holomorphic_invariants(int g, int n) {
    if (g < 1 || n < 1) throw InvalidArgument("molien needs g >= 1 and n >= 1");
    if (n + 1 > 10) throw ResourceLimit("Molien sum over S_{n+1} limited to (n+1)! <= 10^7");
    const BigInt order = factorial(n + 1);

    Polynomial sum;
    for (const Partition& cycles : enumerate_partitions(n + 1)) {
        // det(1 + tσ) on the permutation representation is Π_cycles (1 - (-t)^ℓ).
        Polynomial perm{BigInt(1)};
        std::map<int, int> counts;
        for (int len : cycles.parts()) {
            Polynomial factor(len + 1, BigInt(0));
            factor[0] = 1;
            factor[len] = len % 2 ? 1 : -1;
            perm = multiply(perm, factor);
            ++counts[len];
        }
        const Polynomial standard = divide_by_one_plus_t(perm);
        Polynomial term{BigInt(1)};
        for (int i = 0; i < g; ++i) term = multiply(term, standard);

        BigInt centralizer = 1;
        for (const auto& [len, mult] : counts) {
            BigInt power;
            mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(len), static_cast<unsigned long>(mult));
            centralizer *= power * factorial(mult);
        }
        const BigInt class_size = order / centralizer;
        if (sum.size() < term.size()) sum.resize(term.size(), BigInt(0));
        for (std::size_t i = 0; i < term.size(); ++i) sum[i] += class_size * term[i];
    }
    for (auto& c : sum) {
        if (!mpz_divisible_p(c.get_mpz_t(), order.get_mpz_t())) throw std::logic_error("Molien average is not integral");
        c /= order;
    }
    trim(sum);
    return sum;
}

std::string to_string(const Polynomial& p) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] == 0) continue;
        BigInt c = p[k];
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            c = abs(c);
        } else if (c < 0) {
            os << '-';
            c = abs(c);
        }
        first = false;
        if (k == 0) {
            os << c.get_str();
            continue;
        }
        if (c != 1) os << c.get_str() << '*';
        os << 't';
        if (k > 1) os << '^' << k;
    }
    return first ? "0" : os.str();
}

} // namespace weylhodge
