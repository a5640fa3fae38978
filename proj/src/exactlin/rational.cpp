#include "weylhodge/exactlin/rational.hpp"

#include "weylhodge/errors.hpp"

namespace weylhodge {

Rat make_rat(long num, long den) {
    if (den == 0) throw InvalidArgument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw InvalidArgument("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& x) { return x.get_str(); }
std::string to_string(const BigInt& x) { return x.get_str(); }

BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

std::int64_t to_int64(const BigInt& x) {
    if (!x.fits_slong_p()) throw ResourceLimit("integer " + x.get_str() + " exceeds 64 bits");
    return x.get_si();
}

} // namespace weylhodge
